#pragma once

// Hot loops. Each kernel has an OpenMP version used by the library and a
// plain serial reference that stays in the tree for differential testing and
// benchmarking.
//
// Triangular layout: entry (n, k), 0 <= k <= n, lives at n(n+1)/2 + k.

#include "bellrec/exec.hpp"
#include "bellrec/ring.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bellrec::kernels {

constexpr std::size_t tri_index(std::size_t n, std::size_t k) { return n * (n + 1) / 2 + k; }
constexpr std::size_t tri_size(std::size_t n_max) { return (n_max + 1) * (n_max + 2) / 2; }

/// Fills B_{n,k}(x) for 0 <= k <= n <= n_max. args[j-1] holds x_j and must
/// have length n_max (pad with zeros). Rows are sequential; the entries of one
/// row are independent and are computed concurrently.
template <CoefficientRing T>
std::vector<T> bell_fill(std::span<const T> args, std::size_t n_max, Exec exec = Exec::parallel);

/// out[n] = sum_{i<=n} a[i] b[n-i]; a and b must have equal length.
template <CoefficientRing T>
std::vector<T> cauchy_product(std::span<const T> a, std::span<const T> b, Exec exec = Exec::parallel);

/// out[n] = sum_i x_i^n for n = 0..n_max.
template <CoefficientRing T>
std::vector<T> power_sums(std::span<const T> xs, std::size_t n_max, Exec exec = Exec::parallel);

namespace reference {

template <CoefficientRing T>
std::vector<T> bell_fill(std::span<const T> args, std::size_t n_max);

template <CoefficientRing T>
std::vector<T> cauchy_product(std::span<const T> a, std::span<const T> b);

template <CoefficientRing T>
std::vector<T> power_sums(std::span<const T> xs, std::size_t n_max);

}  // namespace reference

}  // namespace bellrec::kernels
