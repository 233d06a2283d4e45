#include "doctest.h"

#include "qsg/calculus.hpp"
#include "qsg/presentations.hpp"

using namespace qsg;

namespace {

bool same(const Element& x, const std::string& text, const RuleSet& rs)
{
    return verify_zero(x - parse_in(text, rs), rs).zero;
}

}  // namespace

TEST_CASE("d on products")
{
    const RuleSet& gam = build_gamma();
    CHECK(same(differentiate(parse_in("a*beta", gam)), "alpha*beta + a*b", gam));
    CHECK(same(differentiate(parse_in("beta*gamma", gam)), "b*gamma - beta*c", gam));
    CHECK(same(differentiate(parse_in("h*a", gam)), "-h*alpha", gam));
    CHECK(same(differentiate(parse_in("a_inv", gam)), "-a_inv*alpha*a_inv", gam));
}

TEST_CASE("d squares to zero")
{
    const RuleSet& gam = build_gamma();
    for (const char* w : {"a*gamma*d_inv", "beta*gamma*d", "h*gamma*a*a_inv", "D_h"})
        CHECK(differentiate(differentiate_free(parse_in(w, gam))).is_zero());
}

TEST_CASE("d has no image on one-forms")
{
    CHECK_THROWS_AS(differentiate_free(Element::generator(universal_table(), "w1")), ValidationError);
    CHECK_THROWS_AS(differentiate_free(Element::generator(universal_table(), "Da")), ValidationError);
}

TEST_CASE("parameter words")
{
    CHECK(parameter_words(3).size() == 85);
    CHECK(parameter_words(0).size() == 1);
}

TEST_CASE("d of the mixed relations closes via the form relations")
{
    const Report r = run_checks("t", d_structure_checks());
    for (const auto& c : r.checks)
        if (c.name.rfind("calculus.d-mixed.", 0) == 0 || c.name.rfind("calculus.d-squared.", 0) == 0)
            CHECK_MESSAGE(c.ok(), c.name);
}

TEST_CASE("operator action")
{
    const RuleSet& w = build_weyl();
    const Element a = parse_in("a", w);
    CHECK(same(act(composite("T1"), a), "a", w));
    CHECK(same(act(composite("nablaM"), parse_in("gamma", w)), "a", w));
    CHECK(same(act(parse_in("Da", w), a), "1", w));
    CHECK(act(parse_in("Dbeta", w), a).is_zero());
}

TEST_CASE("centrality and the superplane")
{
    CHECK(run_checks("t", centrality_checks()).failures() == 0);
    CHECK(run_checks("t", superplane_checks()).failures() == 0);
    CHECK(centrality_checks().size() == 26);
}

TEST_CASE("Cartan-Maurer forms")
{
    const auto f = maurer_forms();
    CHECK(parity_of(f[0]) == ParityClass::Odd);
    CHECK(parity_of(f[1]) == ParityClass::Even);
    // classical part of the structure equation for w1
    const RuleSet& gam = build_gamma();
    const Element lhs = differentiate(f[0]);
    const Element rhs = normalize(f[0] * f[0] - f[1] * f[2], gam);
    CHECK((lhs - rhs).h_part(0).is_zero());
}
