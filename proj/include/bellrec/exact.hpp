#pragma once

// Exact arithmetic: arbitrary-precision integers and rationals (GMP-backed),
// dense univariate polynomials over the rationals, and the factorial and
// binomial helpers every other module leans on.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bellrec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a value that must be integral (or a division that must be
/// exact) turns out not to be.
class IntegralityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& q);

/// Returns the numerator of q, throwing IntegralityError unless q is integral.
Integer to_integer(const Rational& q);

std::string to_string(const Integer& z);
/// "p" for integral values, "p/q" otherwise.
std::string to_string(const Rational& q);

Integer factorial(unsigned long n);

/// C(n, k) for n >= 0; zero whenever k < 0 or k > n.
Integer binomial(long n, long k);

/// z(z-1)...(z-k+1)/k! for any rational z. k = 0 gives 1.
Rational gen_binomial(const Rational& z, unsigned long k);

// Dense univariate polynomial with rational coefficients. Coefficient i
// multiplies x^i; trailing zeros are never stored, so the zero polynomial is
// the empty coefficient list.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);
    Poly(const Integer& constant) : Poly(Rational(constant)) {}
    Poly(long constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    /// The monomial x.
    static Poly x();
    static Poly monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^i (zero past the degree).
    Rational operator[](std::size_t i) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    Rational eval(const Rational& at) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
    friend Poly operator/(Poly lhs, const Rational& rhs);
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Rational poly_eval(const Poly& p, const Rational& at);

/// Coefficients as "c0,c1,...,cd"; the zero polynomial prints as "0".
std::string to_string(const Poly& p);

}  // namespace bellrec
