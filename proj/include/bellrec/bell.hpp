#pragma once

#include "bellrec/exec.hpp"
#include "bellrec/ring.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bellrec {

/// Partial Bell polynomial values B_{n,k}(x_1, x_2, ...) for 0 <= k <= n <= n_max,
/// evaluated at fixed ring elements. Inputs past the supplied list count as 0.
template <CoefficientRing T>
class BellTable {
public:
    BellTable(std::vector<T> args, std::size_t n_max, Exec exec = Exec::parallel);

    std::size_t n_max() const { return n_max_; }

    /// x_j for j >= 1 (zero beyond the supplied inputs).
    const T& arg(std::size_t j) const;
    std::span<const T> args() const { return args_; }

    /// B_{n,k}; zero when k > n. Throws std::out_of_range when n > n_max.
    T entry(std::size_t n, std::size_t k) const;
    const T& at(std::size_t n, std::size_t k) const;

    std::span<const T> raw() const { return entries_; }

private:
    std::size_t n_max_;
    std::vector<T> args_;
    std::vector<T> entries_;
    T zero_ = ring_traits<T>::zero();
};

template <CoefficientRing T>
BellTable<T> bell_table(std::vector<T> x, std::size_t n_max, Exec exec = Exec::parallel)
{
    return BellTable<T>(std::move(x), n_max, exec);
}

/// (1! c_1, 2! c_2, 3! c_3, ...)
template <CoefficientRing T>
std::vector<T> scale_inputs(std::span<const T> c);

/// Checks n B_{n,k} = sum_{j=1}^{n-k+1} j C(n,j) x_j B_{n-j,k-1} exactly.
/// Requires 1 <= k <= n <= n_max (std::out_of_range otherwise).
template <CoefficientRing T>
bool check_key_identity(const BellTable<T>& table, std::size_t n, std::size_t k);

// Closed forms for three sparse argument patterns.

/// B_{n,k}(1! c1, 2! c2, 0, ...) = n!/k! C(k, n-k) c1^{2k-n} c2^{n-k}.
template <CoefficientRing T>
T bell_two_term(const T& c1, const T& c2, std::size_t n, std::size_t k);

/// B_{n,k}(0, 2!, 3!, 0, ...) = n!/k! C(k, n-2k).
Integer bell_023(std::size_t n, std::size_t k);

/// B_{n,k}(1!, 2!, 3!, 0, ...) = n!/k! sum_l C(k, k-l) C(k-l, n+l-2k).
Integer bell_123(std::size_t n, std::size_t k);

}  // namespace bellrec
