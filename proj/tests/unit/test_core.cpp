#include "doctest.h"

#include "qsg/core.hpp"
#include "qsg/scalar.hpp"

using namespace qsg;

namespace {

TablePtr small_table()
{
    auto t = std::make_shared<GeneratorTable>();
    t->add("a", "a", Parity::Even);
    t->add("beta", "β", Parity::Odd);
    t->add("gamma", "γ", Parity::Odd);
    return t;
}

Element g(const TablePtr& t, const char* name)
{
    return Element::generator(t, name);
}

std::vector<Word> all_words(std::size_t max_len, std::size_t letters)
{
    std::vector<Word> out;
    std::vector<std::vector<Letter>> layer{{}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const auto& ls : layer)
            for (std::uint8_t h = 0; h < 2; ++h)
                out.emplace_back(h, ls);
        std::vector<std::vector<Letter>> next;
        for (const auto& ls : layer)
            for (Letter l = 0; l < letters; ++l) {
                auto w = ls;
                w.push_back(l);
                next.push_back(std::move(w));
            }
        layer = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("parity is Z2 addition")
{
    CHECK(Parity::Even + Parity::Even == Parity::Even);
    CHECK(Parity::Even + Parity::Odd == Parity::Odd);
    CHECK(Parity::Odd + Parity::Odd == Parity::Even);
}

TEST_CASE("h moves to the front with a sign")
{
    auto t = small_table();
    const Element h = Element::h(t);
    // beta * (h a) = -h beta a
    const Element lhs = mul(g(t, "beta"), mul(h, g(t, "a")));
    const Element expected = -mul(h, mul(g(t, "beta"), g(t, "a")));
    CHECK(lhs == expected);
    CHECK(to_string(lhs) == "-h*beta*a");
    CHECK(mul(mul(h, g(t, "beta")), mul(h, g(t, "gamma"))).is_zero());
    CHECK(to_string(mul(g(t, "a"), g(t, "beta"))) == "a*beta");
}

TEST_CASE("parity_of elements")
{
    auto t = small_table();
    CHECK(parity_of(mul(g(t, "beta"), g(t, "gamma"))) == ParityClass::Even);
    CHECK(parity_of(mul(Element::h(t), g(t, "a"))) == ParityClass::Odd);
    CHECK(parity_of(g(t, "a") + g(t, "beta")) == ParityClass::Mixed);
}

TEST_CASE("mul is associative on all short words")
{
    auto t = small_table();
    const auto words = all_words(3, 2);  // letters a, beta
    std::vector<Element> els;
    for (const auto& w : words)
        els.push_back(Element::word(t, w));
    std::size_t failures = 0;
    for (const auto& x : els)
        for (const auto& y : els)
            for (const auto& z : els)
                if (!(mul(mul(x, y), z) == mul(x, mul(y, z))))
                    ++failures;
    CHECK(failures == 0);
}

TEST_CASE("h is graded-central")
{
    auto t = small_table();
    const Element h = Element::h(t);
    for (const auto& w : all_words(3, 3)) {
        if (w.hdeg)
            continue;
        const Element x = Element::word(t, w);
        const int sign = is_odd(parity_of(*t, w)) ? -1 : 1;
        CHECK(mul(h, x) == mul(x, h) * Scalar(sign));
    }
}

TEST_CASE("products with an h word never keep a second h")
{
    auto t = small_table();
    const Element hx = mul(Element::h(t), g(t, "a")) + g(t, "beta");
    const Element hy = mul(Element::h(t), g(t, "gamma"));
    const Element p = mul(hx, hy);
    for (const auto& [w, c] : p.terms())
        CHECK(w.hdeg <= 1);
    CHECK(p == mul(g(t, "beta"), hy));
}

TEST_CASE("element arithmetic is canonical")
{
    auto t = small_table();
    Element x = g(t, "a") + g(t, "beta");
    x -= g(t, "a");
    CHECK(x == g(t, "beta"));
    CHECK((x - x).is_zero());
    CHECK(to_string(Element::zero(t)) == "0");
}

TEST_CASE("table mismatch is an error")
{
    auto t1 = small_table();
    auto t2 = small_table();
    CHECK_THROWS_AS(mul(g(t1, "a"), g(t2, "a")), TableMismatch);
}

TEST_CASE("odd generators cannot be invertible")
{
    GeneratorTable t;
    CHECK_THROWS_AS(t.add("beta", "β", Parity::Odd, true), ValidationError);
    t.add("a", "a", Parity::Even, true);
    REQUIRE(t.find("a_inv"));
    CHECK(*t.find("a_inv") == 1);
    CHECK_THROWS_AS(t.add("a", "a", Parity::Even), ValidationError);
}

TEST_CASE("scalar arithmetic")
{
    const Scalar q = Scalar::q();
    CHECK(q - q.inverse() == Scalar(q * q - Scalar(1)) / q);
    CHECK((Scalar(1) / (q - Scalar(1))) * (q - Scalar(1)) == Scalar(1));
    CHECK((Scalar(2) * q - Scalar(2)) / Scalar(2) == q - Scalar(1));
    CHECK((q - Scalar(1)).to_string() == "q - 1");
    CHECK(Scalar::rational(6, 4).to_string() == "3/2");
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    const Scalar r = (q * q - Scalar(1)) / (q - Scalar(1));
    CHECK(r == q + Scalar(1));
    CHECK(r.denominator().is_constant());
}
