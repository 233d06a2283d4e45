#include "qsg/scalar.hpp"

#include "qsg/errors.hpp"

#include <sstream>
#include <utility>

namespace qsg {

Poly::Poly(mpq_class constant)
{
    if (constant != 0)
        coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Poly Poly::q()
{
    return Poly(std::vector<mpq_class>{0, 1});
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

mpq_class Poly::leading() const
{
    return coeffs_.empty() ? mpq_class(0) : coeffs_.back();
}

mpq_class Poly::constant_term() const
{
    return coeffs_.empty() ? mpq_class(0) : coeffs_.front();
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Poly operator+(const Poly& x, const Poly& y)
{
    const auto& longer = x.coeffs_.size() >= y.coeffs_.size() ? x : y;
    const auto& shorter = x.coeffs_.size() >= y.coeffs_.size() ? y : x;
    Poly r = longer;
    for (std::size_t i = 0; i < shorter.coeffs_.size(); ++i)
        r.coeffs_[i] += shorter.coeffs_[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& x, const Poly& y)
{
    return x + (-y);
}

Poly operator*(const Poly& x, const Poly& y)
{
    if (x.is_zero() || y.is_zero())
        return {};
    std::vector<mpq_class> out(x.coeffs_.size() + y.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
            out[i + j] += x.coeffs_[i] * y.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::scaled(const mpq_class& c) const
{
    if (c == 0)
        return {};
    Poly r = *this;
    for (auto& coeff : r.coeffs_)
        coeff *= c;
    return r;
}

void Poly::divmod(const Poly& dividend, const Poly& divisor, Poly& quotient, Poly& remainder)
{
    if (divisor.is_zero())
        throw DivisionByZero("polynomial division by zero");
    remainder = dividend;
    std::vector<mpq_class> quot;
    const int dd = divisor.degree();
    if (remainder.degree() >= dd)
        quot.assign(static_cast<std::size_t>(remainder.degree() - dd + 1), mpq_class(0));
    const mpq_class lead = divisor.leading();
    while (!remainder.is_zero() && remainder.degree() >= dd) {
        const int shift = remainder.degree() - dd;
        const mpq_class factor = remainder.leading() / lead;
        quot[static_cast<std::size_t>(shift)] = factor;
        for (int i = 0; i <= dd; ++i)
            remainder.coeffs_[static_cast<std::size_t>(i + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(i)];
        remainder.trim();
    }
    quotient = Poly(std::move(quot));
}

Poly Poly::gcd(Poly x, Poly y)
{
    while (!y.is_zero()) {
        Poly quot, rem;
        divmod(x, y, quot, rem);
        x = std::move(y);
        y = std::move(rem);
    }
    return x.is_zero() ? x : x.monic();
}

Poly Poly::monic() const
{
    if (is_zero())
        return *this;
    return scaled(1 / leading());
}

mpq_class Poly::evaluate(const mpq_class& at) const
{
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

std::string Poly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int deg = degree(); deg >= 0; --deg) {
        mpq_class c = coeffs_[static_cast<std::size_t>(deg)];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (deg == 0) {
            out << c.get_str();
            continue;
        }
        if (c != 1)
            out << c.get_str() << "*";
        out << "q";
        if (deg > 1)
            out << "^" << deg;
    }
    return out.str();
}

Scalar::Scalar(long value) : num_(mpq_class(value)), den_(mpq_class(1)) {}

Scalar::Scalar(mpq_class value) : num_(std::move(value)), den_(mpq_class(1)) {}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw DivisionByZero("scalar with zero denominator");
    normalize();
}

Scalar Scalar::q()
{
    return Scalar(Poly::q(), Poly(mpq_class(1)));
}

Scalar Scalar::rational(long num, long den)
{
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    mpq_class value(num, den);
    value.canonicalize();
    return Scalar(std::move(value));
}

void Scalar::normalize()
{
    if (num_.is_zero()) {
        den_ = Poly(mpq_class(1));
        return;
    }
    if (!den_.is_constant()) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly quot, rem;
            Poly::divmod(num_, g, quot, rem);
            num_ = std::move(quot);
            Poly::divmod(den_, g, quot, rem);
            den_ = std::move(quot);
        }
    }
    const mpq_class lead = den_.leading();
    if (lead != 1) {
        num_ = num_.scaled(1 / lead);
        den_ = den_.scaled(1 / lead);
    }
}

bool Scalar::is_one() const
{
    return num_.is_constant() && num_.constant_term() == 1 && den_.is_constant();
}

bool Scalar::is_minus_one() const
{
    return num_.is_constant() && num_.constant_term() == -1 && den_.is_constant();
}

mpq_class Scalar::constant_value() const
{
    return num_.constant_term();
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    if (den_.is_constant() && other.den_.is_constant()) {
        num_ = num_ + other.num_;
        if (num_.is_zero())
            den_ = Poly(mpq_class(1));
        return *this;
    }
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    return *this += -other;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    if (den_.is_constant() && other.den_.is_constant()) {
        num_ = num_ * other.num_;
        if (num_.is_zero())
            den_ = Poly(mpq_class(1));
        return *this;
    }
    num_ = num_ * other.num_;
    den_ = den_ * other.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other)
{
    return *this *= other.inverse();
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(unsigned exponent) const
{
    Scalar acc(1);
    for (unsigned i = 0; i < exponent; ++i)
        acc *= *this;
    return acc;
}

bool Scalar::is_atomic() const
{
    if (!den_.is_constant())
        return false;
    int nonzero = 0;
    for (const auto& c : num_.coeffs())
        nonzero += c != 0 ? 1 : 0;
    return nonzero <= 1;
}

std::string Scalar::to_string() const
{
    if (den_.is_constant())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qsg
