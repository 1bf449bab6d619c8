#include "bellrec/exact.hpp"

#include <algorithm>
#include <cctype>

namespace bellrec {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    auto parse_int = [&](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            i = 1;
        }
        if (i == s.size() ||
            !std::all_of(s.begin() + static_cast<long>(i), s.end(),
                         [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
            throw std::invalid_argument("not an exact number: '" + std::string(text) + "'");
        }
        std::string digits(s.substr(s[0] == '+' ? 1 : 0));
        return Integer(digits, 10);
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(parse_int(text.substr(0, slash)), den);
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q)
{
    if (!is_integral(q)) {
        throw IntegralityError("expected an integer, got " + to_string(q));
    }
    return q.get_num();
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q)
{
    if (is_integral(q)) {
        return q.get_num().get_str(10);
    }
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(long n, long k)
{
    if (n < 0) {
        throw std::invalid_argument("binomial: negative upper index");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational gen_binomial(const Rational& z, unsigned long k)
{
    Rational num = 1;
    for (unsigned long i = 0; i < k; ++i) {
        num *= z - Rational(static_cast<long>(i));
    }
    Rational out = num / Rational(factorial(k));
    out.canonicalize();
    return out;
}

// Poly

Poly::Poly(const Rational& constant)
{
    if (constant != 0) {
        coeffs_.push_back(constant);
    }
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::x() { return Poly{Rational(0), Rational(1)}; }

Poly Poly::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational Poly::operator[](std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Poly::eval(const Rational& at) const
{
    // Horner
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) {
        return Poly();
    }
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs)
{
    *this = *this * rhs;
    return *this;
}

Poly& Poly::operator*=(const Rational& rhs)
{
    if (rhs == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    return *this;
}

Poly operator/(Poly lhs, const Rational& rhs)
{
    if (rhs == 0) {
        throw std::domain_error("polynomial division by zero");
    }
    for (auto& c : lhs.coeffs_) {
        c /= rhs;
    }
    return lhs;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Rational poly_eval(const Poly& p, const Rational& at) { return p.eval(at); }

std::string to_string(const Poly& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += to_string(p.coeffs()[i]);
    }
    return out;
}

}  // namespace bellrec
