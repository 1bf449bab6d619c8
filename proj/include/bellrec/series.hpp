#pragma once

#include "bellrec/exec.hpp"
#include "bellrec/ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bellrec {

class TruncationMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Formal power series truncated after t^n_max; always holds n_max + 1 coefficients.
template <CoefficientRing T>
class TruncSeries {
public:
    /// The zero series.
    explicit TruncSeries(std::size_t n_max) : coeffs_(n_max + 1, ring_traits<T>::zero()) {}

    /// Pads with zeros or truncates to n_max + 1 coefficients.
    TruncSeries(std::vector<T> coeffs, std::size_t n_max) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(n_max + 1, ring_traits<T>::zero());
    }

    static TruncSeries one(std::size_t n_max)
    {
        TruncSeries s(n_max);
        s.coeffs_[0] = ring_traits<T>::one();
        return s;
    }

    std::size_t n_max() const { return coeffs_.size() - 1; }
    const T& operator[](std::size_t i) const { return coeffs_.at(i); }
    T& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<T> coeffs_;
};

/// Cauchy product. Throws TruncationMismatch when the orders differ.
template <CoefficientRing T>
TruncSeries<T> ps_mul(const TruncSeries<T>& f, const TruncSeries<T>& g, Exec exec = Exec::parallel);

/// 1/f. Throws NotInvertible unless f_0 is a unit of T.
template <CoefficientRing T>
TruncSeries<T> ps_recip(const TruncSeries<T>& f);

/// f^r; r = 0 gives the identity series.
template <CoefficientRing T>
TruncSeries<T> ps_pow(const TruncSeries<T>& f, unsigned r, Exec exec = Exec::parallel);

}  // namespace bellrec
