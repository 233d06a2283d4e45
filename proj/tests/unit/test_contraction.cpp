#include "doctest.h"

#include "qsg/contraction.hpp"
#include "qsg/presentations.hpp"

using namespace qsg;

TEST_CASE("conjugated entries")
{
    const RuleSet& glq = build_glq();
    const auto e = conjugate_entries();
    CHECK(verify_zero(e[1] - parse_in("beta'", glq), glq).zero);
    CHECK(verify_zero(e[0] - parse_in("a' - h/(q - 1)*beta'", glq), glq).zero);
    for (const auto& x : e)
        CHECK(x.h_part(1).h_part(0).is_zero());
}

TEST_CASE("limit at q = 1")
{
    const RuleSet& glq = build_glq();
    CHECK_THROWS_AS(limit_q_to_one(contraction_lambda()), DivisionByZero);
    const Element x = parse_in("(q^2 - 1)/(q - 1)*a'", glq);
    CHECK((limit_q_to_one(x) - parse_in("2*a'", glq)).is_zero());
}

TEST_CASE("substitution")
{
    const auto t = universal_table();
    std::map<Letter, Element> m{{t->at("a"), Element::generator(t, "d")}};
    const Element a = Element::generator(t, "a");
    CHECK((substitute(a * a, m) - Element::generator(t, "d") * Element::generator(t, "d")).is_zero());
    CHECK_THROWS_AS(substitute(Element::generator(t, "beta"), m), ValidationError);
}

TEST_CASE("differential map round trip")
{
    const Report r = run_checks("t", contraction_checks());
    for (const auto& c : r.checks)
        if (c.name.rfind("contraction.differentials", 0) == 0 || c.name.rfind("contraction.entries", 0) == 0 ||
            c.name == "contraction.superdeterminant")
            CHECK_MESSAGE(c.ok(), c.name);
}
