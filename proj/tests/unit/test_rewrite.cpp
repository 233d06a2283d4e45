#include "doctest.h"

#include "qsg/presentations.hpp"
#include "qsg/rewrite.hpp"

using namespace qsg;

namespace {

bool zero_in(const char* text, const RuleSet& rs)
{
    return verify_zero(parse_in(text, rs), rs).zero;
}

std::string nf(const char* text, const RuleSet& rs)
{
    return to_string(reduce(text, rs));
}

}  // namespace

TEST_CASE("normalize under glh")
{
    const RuleSet& glh = build_glh();
    CHECK(nf("beta*a", glh) == "a*beta");
    CHECK(nf("beta*beta", glh) == "0");
    CHECK(nf("beta^2", glh) == "0");
    CHECK(nf("d*d_inv", glh) == "1");
    CHECK(zero_in("gamma*beta + beta*gamma - h*beta*d*(1 - D_h)", glh));
}

TEST_CASE("normalize is idempotent and deterministic")
{
    const RuleSet& gam = build_gamma();
    const Element x = parse_in("delta*c*gamma*a*alpha + b*d_inv*gamma*beta*a", gam);
    const Element n1 = normalize(x, gam);
    CHECK(normalize(n1, gam) == n1);
    CHECK(normalize(x, gam) == n1);
}

TEST_CASE("verify_zero returns a witness")
{
    const RuleSet& gam = build_gamma();
    CHECK(zero_in("a*b - b*a + h*b*beta", gam));
    CHECK(zero_in("alpha*alpha - h*alpha*b", gam));
    const auto bad = verify_zero(parse_in("a*beta - beta*a + beta", build_glh()), build_glh());
    CHECK_FALSE(bad.zero);
    CHECK(to_string(bad.normal_form) == "beta");
}

TEST_CASE("localization derives conjugated rules")
{
    const RuleSet& glh = build_glh();
    CHECK(zero_in("beta*d_inv - d_inv*beta", glh));
    CHECK(nf("d_inv*d", glh) == "1");
    CHECK(nf("a*a_inv*beta", glh) == "beta");

    const RuleSet& glq = build_glq();
    CHECK(zero_in("beta'*a'_inv - q*a'_inv*beta'", glq));
    CHECK(zero_in("a'*a'_inv - 1", glq));
}

TEST_CASE("every derived rule multiplies back to its source")
{
    for (const char* name : {"glq", "glh", "gamma", "weyl", "derivs"}) {
        const RuleSet& rs = presentation(name);
        const auto& table = *rs.table();
        for (const auto& rule : rs.rules()) {
            const auto& first = table[rule.first];
            const auto& second = table[rule.second];
            const Element lhs_first = Element::generator(rs.table(), rule.first);
            const Element lhs_second = Element::generator(rs.table(), rule.second);
            if (second.inverse_of && rule.first != *second.inverse_of) {
                // y g⁻¹ = R  ⇒  y = R g
                const Element g = Element::generator(rs.table(), *second.inverse_of);
                CHECK_MESSAGE(verify_zero(mul(rule.rhs, g) - lhs_first, rs).zero, name, " ", first.name, second.name);
            } else if (first.inverse_of && rule.second != *first.inverse_of) {
                // g⁻¹ y = R  ⇒  y = g R
                const Element g = Element::generator(rs.table(), *first.inverse_of);
                CHECK_MESSAGE(verify_zero(mul(g, rule.rhs) - lhs_second, rs).zero, name, " ", first.name, second.name);
            }
        }
    }
}

TEST_CASE("localize rejects odd generators")
{
    const RuleSet& glh = build_glh();
    CHECK_THROWS_AS(localize(glh, glh.table()->at("beta")), ValidationError);
}

TEST_CASE("invert_perturbed")
{
    const RuleSet& glh = build_glh();
    const auto t = glh.table();
    const Element one = Element::one(t);
    CHECK(invert_perturbed(one, one, Element::zero(t), glh) == one);

    const Element x = parse_in("a*d_inv", glh);
    const Element x_inv = parse_in("d*a_inv", glh);
    const Element n = parse_in("-beta*d_inv*gamma*d_inv", glh);
    const Element inv = invert_perturbed(x, x_inv, n, glh);
    CHECK(inv == normalize(parse_in("d*a_inv + d*a_inv*beta*d_inv*gamma*d_inv*d*a_inv", glh), glh));
    CHECK(zero_in("D_h*D_h_inv - 1", glh));
    CHECK(zero_in("D_h_inv*D_h - 1", glh));

    // A wrong inverse for the unperturbed part is caught.
    CHECK_THROWS_AS(invert_perturbed(x, parse_in("a_inv*d", glh) * Scalar(2), n, glh), NotInvertible);
}

TEST_CASE("step budget")
{
    const RuleSet& glh = build_glh();
    const Element x = parse_in("d*gamma*beta*a", glh);
    CHECK_THROWS_AS(normalize(x, glh, 1), StepBudgetExceeded);
    CHECK_NOTHROW(normalize(x, glh));
}

TEST_CASE("unknown generator for a rule set")
{
    const RuleSet& glh = build_glh();
    const Element alpha = Element::generator(glh.table(), "alpha");
    CHECK_THROWS_AS(normalize(alpha, glh), UnknownGenerator);
}

TEST_CASE("critical pairs resolve for the matrix presentations")
{
    for (const char* name : {"glq", "glh", "gamma", "oneforms", "derivs"}) {
        const auto reports = critical_pairs(presentation(name));
        CHECK(!reports.empty());
        std::size_t bad = 0;
        for (const auto& r : reports)
            bad += r.resolved ? 0 : 1;
        CHECK_MESSAGE(bad == 0, name);
    }
    CHECK_THROWS_AS(critical_pairs(build_glh(), 4), ValidationError);
}

TEST_CASE("overlap gamma beta a is resolved")
{
    const RuleSet& glh = build_glh();
    const auto t = glh.table();
    const std::vector<Letter> w{t->at("gamma"), t->at("beta"), t->at("a")};
    bool found = false;
    for (const auto& r : critical_pairs(glh))
        if (r.overlap == w) {
            found = true;
            CHECK(r.resolved);
            CHECK(r.left == r.right);
        }
    CHECK(found);
}

TEST_CASE("classical layer is supercommutative and confluent")
{
    for (const char* name : {"glh", "gamma", "oneforms", "weyl"}) {
        const RuleSet cl = presentation(name).classical();
        for (const auto& rule : cl.rules())
            for (const auto& [w, c] : rule.rhs.terms())
                CHECK(w.hdeg == 0);
        for (const auto& r : critical_pairs(cl))
            CHECK_MESSAGE(r.resolved, name);
    }
    const RuleSet cl = build_glh().classical();
    CHECK(zero_in("gamma*beta + beta*gamma", cl));
    CHECK(zero_in("a*d - d*a", cl));
}

TEST_CASE("rule builder validation")
{
    const auto t = universal_table();
    RuleSetBuilder b("bad", t);
    b.include("a").include("beta");
    // parity mismatch: a*beta = a
    CHECK_THROWS_AS(b.add_relation(parse_in("a*beta - a", build_glh()), "test").build(), ValidationError);
    RuleSetBuilder incomplete("incomplete", t);
    incomplete.include("a").include("beta");
    CHECK_THROWS_AS(incomplete.build(), ValidationError);
    CHECK_NOTHROW(incomplete.build(false));
}
