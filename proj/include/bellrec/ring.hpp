#pragma once

// Coefficient rings. Algorithms are templates over one of Integer, Rational
// or Poly; RingElem is the tagged union used at the dynamic boundary (CLI,
// verification harness).

#include "bellrec/exact.hpp"

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bellrec {

template <class T>
struct ring_traits;

// Integers embed in the rationals; exact divisions happen there and come back
// through from_field, which refuses non-integral results.
template <>
struct ring_traits<Integer> {
    using field_type = Rational;
    static constexpr const char* name = "integer";
    static Integer zero() { return 0; }
    static Integer one() { return 1; }
    static Integer from_integer(const Integer& z) { return z; }
    static bool is_zero(const Integer& v) { return v == 0; }
    static Rational to_field(const Integer& v) { return Rational(v); }
    static Integer from_field(const Rational& q) { return to_integer(q); }
    static std::optional<Integer> inverse(const Integer& v)
    {
        if (v == 1 || v == -1) {
            return v;
        }
        return std::nullopt;
    }
};

template <>
struct ring_traits<Rational> {
    using field_type = Rational;
    static constexpr const char* name = "rational";
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static Rational from_integer(const Integer& z) { return Rational(z); }
    static bool is_zero(const Rational& v) { return v == 0; }
    static Rational to_field(const Rational& v) { return v; }
    static Rational from_field(const Rational& q) { return q; }
    static std::optional<Rational> inverse(const Rational& v)
    {
        if (v == 0) {
            return std::nullopt;
        }
        return Rational(1) / v;
    }
};

// Polynomials over Q are not a field, but every division the algorithms
// perform is by a rational scalar, so Poly serves as its own "field".
template <>
struct ring_traits<Poly> {
    using field_type = Poly;
    static constexpr const char* name = "polynomial";
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly from_integer(const Integer& z) { return Poly(Rational(z)); }
    static bool is_zero(const Poly& v) { return v.is_zero(); }
    static Poly to_field(const Poly& v) { return v; }
    static Poly from_field(const Poly& p) { return p; }
    static std::optional<Poly> inverse(const Poly& v)
    {
        if (v.degree() != 0) {
            return std::nullopt;
        }
        return Poly(Rational(1) / v[0]);
    }
};

template <class T>
concept CoefficientRing = requires(const T& a, const T& b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    typename ring_traits<T>::field_type;
};

template <class T>
using field_t = typename ring_traits<T>::field_type;

template <CoefficientRing T>
T from_integer(const Integer& z) { return ring_traits<T>::from_integer(z); }

template <CoefficientRing T>
bool is_zero(const T& v) { return ring_traits<T>::is_zero(v); }

/// base^e by binary powering; e = 0 gives one.
template <CoefficientRing T>
T ring_pow(T base, std::size_t e)
{
    T acc = ring_traits<T>::one();
    while (e > 0) {
        if (e & 1U) {
            acc = acc * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return acc;
}

/// Multiplies a field value by an exact rational scalar.
inline Rational scale(const Rational& v, const Rational& s) { return Rational(v * s); }
inline Poly scale(const Poly& v, const Rational& s) { return v * s; }

enum class Domain { integer, rational, polynomial };

std::string to_string(Domain d);

// RingElem: one exact value tagged with its domain. Arithmetic requires both
// operands to carry the same tag; promotion is explicit via promote().
using RingElem = std::variant<Integer, Rational, Poly>;

Domain domain_of(const RingElem& v);

/// Integer -> Rational -> Poly. Demotion is refused with std::invalid_argument.
RingElem promote(const RingElem& v, Domain to);

/// The widest domain present in the list (integer for an empty list).
Domain common_domain(const std::vector<RingElem>& values);

/// Thrown when two RingElems of different domains meet in one operation.
class DomainMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a, const RingElem& b);
RingElem operator*(const RingElem& a, const RingElem& b);

std::string to_string(const RingElem& v);

/// Parses "p" into Integer and "p/q" into Rational.
RingElem parse_ring_elem(std::string_view text);

/// Extracts a homogeneous typed vector; every element must already be in T's domain.
template <CoefficientRing T>
std::vector<T> as_vector(const std::vector<RingElem>& values)
{
    std::vector<T> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        const T* p = std::get_if<T>(&v);
        if (p == nullptr) {
            throw DomainMismatch("expected " + std::string(ring_traits<T>::name) + " values");
        }
        out.push_back(*p);
    }
    return out;
}

template <CoefficientRing T>
std::vector<RingElem> to_ring_elems(const std::vector<T>& values)
{
    return std::vector<RingElem>(values.begin(), values.end());
}

}  // namespace bellrec
