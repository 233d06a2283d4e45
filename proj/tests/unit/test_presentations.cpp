#include "doctest.h"

#include "qsg/presentations.hpp"

#include <algorithm>

using namespace qsg;

namespace {

bool zero_in(const std::string& text, const RuleSet& rs)
{
    return verify_zero(parse_in(text, rs), rs).zero;
}

bool has_line(const char* catalog, const char* text)
{
    const auto lines = catalog_texts(catalog);
    return std::find(lines.begin(), lines.end(), text) != lines.end();
}

}  // namespace

TEST_CASE("glq")
{
    const RuleSet& glq = build_glq();
    CHECK(zero_in("a'*beta' - q*beta'*a'", glq));
    CHECK(zero_in("a'*d' - d'*a' - (q - 1/q)*gamma'*beta'", glq));
    CHECK(relation_catalog("glq").size() == 8);
}

TEST_CASE("glh")
{
    const RuleSet& glh = build_glh();
    CHECK(zero_in("a*gamma - gamma*a - h*a^2*(1 - D_h_inv)", glh));
    CHECK(zero_in("gamma^2 - h*gamma*d*(1 - D_h)", glh));
    CHECK(relation_catalog("glh").size() == 11);
    CHECK(glh.missing_rules().empty());
}

TEST_CASE("gamma")
{
    const RuleSet& gam = build_gamma();
    CHECK(zero_in("gamma*b - b*gamma - h*b*(a + d)", gam));
    CHECK(zero_in("b*c - c*b - h*(delta + alpha)*b", gam));
    CHECK(zero_in("alpha*h + h*alpha", gam));
}

TEST_CASE("oneforms")
{
    const RuleSet& of = build_oneforms();
    CHECK(zero_in("a*u - u*a", of));
    CHECK(zero_in("u*alpha - alpha*u", of));
    CHECK(zero_in("w2^2", of));
}

TEST_CASE("weyl")
{
    const RuleSet& w = build_weyl();
    CHECK(zero_in("Da*a - 1 - a*Da + h*(beta*Da + a*Dgamma)", w));
    CHECK(zero_in("Dgamma^2", w));
    CHECK(zero_in("Da*Dgamma - Dgamma*Da", w));
}

TEST_CASE("composites")
{
    const RuleSet& glh = build_glh();
    CHECK(composite("D_h") == normalize(parse_in("a*d_inv - beta*d_inv*gamma*d_inv", glh), glh));
    CHECK(composite("S(β)") == normalize(parse_in("-a_inv*beta*d_inv", glh), glh));
    CHECK(composite("S(beta)") == composite("B"));
    CHECK(to_string(composite("∇₋")) == "a*Dgamma + beta*Dd");
    CHECK(composite("x") == Element::generator(universal_table(), "u") * Scalar(2));
    CHECK_THROWS(composite("nope"));
    CHECK(&composite_home("T1") == &build_weyl());
}

TEST_CASE("T times its inverse")
{
    const RuleSet& glh = build_glh();
    CHECK(zero_in("a*A + beta*C - 1", glh));
    CHECK(zero_in("a*B + beta*D", glh));
    CHECK(zero_in("gamma*A + d*C", glh));
    CHECK(zero_in("gamma*B + d*D - 1", glh));
    CHECK(zero_in("A*a + B*gamma - 1", glh));
    CHECK(zero_in("A*beta + B*d", glh));
    CHECK(zero_in("C*a + D*gamma", glh));
    CHECK(zero_in("C*beta + D*d - 1", glh));
}

TEST_CASE("central elements")
{
    const RuleSet& gam = build_gamma();
    for (const char* g : {"a", "beta", "gamma", "d", "alpha", "b", "c", "delta"}) {
        CHECK_MESSAGE(zero_in(std::string("D_h*") + g + " - " + g + "*D_h", gam), g);
        CHECK_MESSAGE(zero_in(std::string("Dhat*") + g + " - " + g + "*Dhat", gam), g);
    }
    const RuleSet& of = build_oneforms();
    for (const char* g : {"w1", "u", "v", "w2"}) {
        CHECK_MESSAGE(zero_in(std::string("D_h*") + g + " - " + g + "*D_h", of), g);
        CHECK_MESSAGE(zero_in(std::string("Dhat*") + g + " - " + g + "*Dhat", of), g);
    }
}

TEST_CASE("catalog contents")
{
    CHECK(has_line("superalgebra", "nablaM^2 = 0"));
    CHECK(has_line("vector-on-params", "nablaM*a = a*nablaM"));
    CHECK_THROWS_AS(relation_catalog("nope"), ValidationError);
    CHECK_THROWS_AS(presentation("nope"), ValidationError);
    // The two printed c/delta lines of the Cartan-Maurer display mix parities.
    std::vector<std::string> mixed;
    for (const auto& info : catalog_list())
        for (const auto& r : relation_catalog(info.name))
            if (parity_of(r.element) == ParityClass::Mixed)
                mixed.push_back(r.name);
    CHECK(mixed == std::vector<std::string>{"cartan.03", "cartan.04"});
}

TEST_CASE("catalogs that hold as printed")
{
    for (const char* name : {"glq", "glh", "mixed", "forms", "inverse-params", "oneform-params",
                             "inverse-differentials", "oneform-differentials", "oneforms", "param-derivatives",
                             "derivatives", "superplane"}) {
        for (const auto& r : relation_catalog(name)) {
            const auto z = verify_zero(r.element, presentation(r.presentation));
            CHECK_MESSAGE(z.zero, r.name, ": ", r.text, " -> ", to_string(z.normal_form));
        }
    }
}

TEST_CASE("setting D_h to one removes every h correction")
{
    const RuleSet& glh = build_glh();
    const auto t = glh.table();
    SymbolResolver base = presentation_resolver(glh);
    SymbolResolver sl = base;
    sl.lookup = [base, t](std::string_view name) -> std::optional<Element> {
        if (name == "D_h" || name == "D_h_inv")
            return Element::one(t);
        return base.lookup(name);
    };
    for (const auto& line : catalog_texts("glh")) {
        const Element e = evaluate_relation(line, sl);
        CHECK_MESSAGE(e.h_part(1).is_zero(), line);
    }
}
