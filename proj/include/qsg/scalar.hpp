#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace qsg {

/// Univariate polynomial in q with exact rational coefficients.
/// Coefficients are stored low degree first, with no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(mpq_class constant);
    explicit Poly(std::vector<mpq_class> coeffs);

    static Poly q();

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    mpq_class leading() const;
    mpq_class constant_term() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& x, const Poly& y);
    friend Poly operator-(const Poly& x, const Poly& y);
    friend Poly operator*(const Poly& x, const Poly& y);
    Poly scaled(const mpq_class& c) const;

    friend bool operator==(const Poly& x, const Poly& y) { return x.coeffs_ == y.coeffs_; }

    /// Euclidean division; `divisor` must be nonzero.
    static void divmod(const Poly& dividend, const Poly& divisor, Poly& quotient, Poly& remainder);
    static Poly gcd(Poly x, Poly y);

    Poly monic() const;
    mpq_class evaluate(const mpq_class& at) const;

    /// Human-readable form, e.g. "q^2 - 1" or "-3/2".
    std::string to_string() const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

/// Exact coefficient: a rational function in q over the rationals.
///
/// Invariant: the denominator is monic and coprime to the numerator; zero is
/// represented as 0/1.
class Scalar {
public:
    Scalar() : num_(), den_(mpq_class(1)) {}
    Scalar(long value);  // NOLINT(google-explicit-constructor): integers are scalars
    explicit Scalar(mpq_class value);
    Scalar(Poly num, Poly den);

    static Scalar q();
    static Scalar rational(long num, long den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_minus_one() const;
    /// True when the value does not depend on q.
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    mpq_class constant_value() const;

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);
    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    Scalar inverse() const;
    Scalar pow(unsigned exponent) const;

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

    /// Canonical text: "3/2", "q - 1", "(q^2 - 1)/(q)".
    std::string to_string() const;
    /// True when to_string() is a single signed factor that needs no parentheses
    /// when used as a product coefficient.
    bool is_atomic() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

}  // namespace qsg
