#include "doctest.h"

#include "qsg/presentations.hpp"
#include "qsg/rmatrix.hpp"

using namespace qsg;

TEST_CASE("index parity")
{
    CHECK(index_parity(0) == Parity::Even);
    CHECK(index_parity(1) == Parity::Odd);
    CHECK(index_parity(2) == Parity::Odd);
    CHECK(index_parity(3) == Parity::Even);
}

TEST_CASE("grading")
{
    CHECK_NOTHROW(validate_grading(t_matrix(), Parity::Even));
    CHECK_NOTHROW(validate_grading(dt_matrix(), Parity::Odd));
    CHECK_THROWS_AS(validate_grading(dt_matrix(), Parity::Even), ValidationError);
}

TEST_CASE("R is unipotent and reduces to I at h = 0")
{
    const auto t = universal_table();
    const AlgebraMatrix r = r_matrix();
    const AlgebraMatrix id = AlgebraMatrix::identity(4, t);
    CHECK((r.map([](const Element& x) { return x.h_part(0); }) - id).is_zero());
    const AlgebraMatrix n = r - id;
    CHECK((n * n).is_zero());
    CHECK((r_inverse() * r - id).is_zero());
}

TEST_CASE("ragged rows")
{
    const auto t = universal_table();
    CHECK_THROWS_AS(AlgebraMatrix::from_rows({{Element::one(t)}, {Element::one(t), Element::one(t)}}),
                    ValidationError);
}

TEST_CASE("leg convention survey")
{
    const auto& survey = convention_survey();
    CHECK(survey.size() == leg_conventions().size());
    std::size_t passing = 0;
    for (const auto& s : survey)
        passing += s.failing_entries == 0 ? 1 : 0;
    CHECK(passing == 1);
    REQUIRE(selected_convention());
    CHECK(to_string(*selected_convention()) == "koszul-left/index");
}

TEST_CASE("RTT and compact identities")
{
    const Report r = run_checks("t", rmatrix_checks());
    CHECK(r.failures() == 0);
    std::size_t rtt = 0, compact = 0;
    for (const auto& c : r.checks) {
        rtt += c.name.rfind("rmatrix.rtt.", 0) == 0;
        compact += c.name.rfind("rmatrix.compact", 0) == 0;
    }
    CHECK(rtt == 16);
    CHECK(compact == 80);
}
