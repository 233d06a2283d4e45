#include "doctest.h"

#include "qsg/expr.hpp"
#include "qsg/presentations.hpp"

using namespace qsg;

TEST_CASE("parse products, sums and powers")
{
    const Expr e = parse_expression("a*beta - beta*a");
    CHECK(e.kind == Expr::Kind::Sum);
    REQUIRE(e.children.size() == 2);
    CHECK(e.subtract[1]);
    CHECK(e.children[0].kind == Expr::Kind::Product);

    const RuleSet& glh = build_glh();
    CHECK(parse_in("h^2 * a", glh).is_zero());
    CHECK(parse_in("a beta", glh) == parse_in("a*beta", glh));
}

TEST_CASE("lex error position")
{
    try {
        parse_expression("gamma@a");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.position() == 6);
    }
}

TEST_CASE("unknown symbols suggest a name")
{
    try {
        parse_in("gama*a", build_glh());
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(std::string(err.what()).find("gamma") != std::string::npos);
        CHECK(err.position() == 1);
    }
}

TEST_CASE("print and parse round-trip")
{
    for (const char* text : {"a*beta - beta*a", "-(a + d)^2*h", "2*h*u*w2 + 1/2*x", "(q - 1/q)*gamma'*beta'",
                             "a*(b + c)*d - -e"}) {
        const Expr e = parse_expression(text);
        const std::string p = print(e);
        CHECK(parse_expression(p) == e);
        CHECK(print(parse_expression(p)) == p);
    }
}

TEST_CASE("relations evaluate to lhs minus rhs")
{
    const RuleSet& glh = build_glh();
    CHECK(parse_in("a*beta = beta*a", glh) == parse_in("a*beta - beta*a", glh));
    CHECK_THROWS_AS(parse_in("a = b = c", glh), ParseError);
    CHECK_THROWS_AS(parse_in("a/beta", glh), ParseError);
}
