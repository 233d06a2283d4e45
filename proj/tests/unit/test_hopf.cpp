#include "doctest.h"

#include "qsg/hopf.hpp"
#include "qsg/presentations.hpp"

using namespace qsg;

namespace {

Element g(const char* name)
{
    return Element::generator(universal_table(), name);
}

std::size_t counted_failures(const std::vector<Check>& checks)
{
    return run_checks("t", checks).failures();
}

}  // namespace

TEST_CASE("graded tensor product")
{
    // (1 ⊗ β)(γ ⊗ 1) = -γ ⊗ β
    const auto t = universal_table();
    const Tensor x = Tensor::pure({Element::one(t), g("beta")});
    const Tensor y = Tensor::pure({g("gamma"), Element::one(t)});
    CHECK(x * y == Tensor::pure({g("gamma"), g("beta")}) * Scalar(-1));
    CHECK(y * x == Tensor::pure({g("gamma"), g("beta")}));
}

TEST_CASE("coproduct on a")
{
    const Tensor want = Tensor::pure({g("a"), g("a")}) + Tensor::pure({g("beta"), g("gamma")});
    CHECK(coproduct().apply(g("a")) == want);
}

TEST_CASE("counit and grade involution")
{
    const auto t = universal_table();
    CHECK(counit().apply(g("a")) == Tensor::one(t, 0));
    CHECK(counit().apply(g("beta")).is_zero());
    CHECK(grade_involution().apply(g("gamma")) == Tensor::from_element(g("gamma")) * Scalar(-1));
}

TEST_CASE("maps reject generators without an image")
{
    CHECK_THROWS_AS(coproduct().apply(g("alpha")), ValidationError);
}

TEST_CASE("Hopf axioms hold")
{
    CHECK(counted_failures(hopf_axiom_checks()) == 0);
}

TEST_CASE("right coaction preserves the mixed relations")
{
    std::vector<Check> right;
    for (auto& c : coaction_checks())
        if (c.name.rfind("coaction.right-", 0) == 0)
            right.push_back(std::move(c));
    CHECK(right.size() == 32);
    CHECK(counted_failures(right) == 0);
}

TEST_CASE("derivative co-maps leave a witness")
{
    const Report r = run_checks("t", derivative_hopf_checks());
    bool witnessed = false;
    for (const auto& c : r.checks)
        if (c.status == CheckStatus::ExpectedNonzero && c.witness)
            witnessed = true;
    CHECK(witnessed);
}
