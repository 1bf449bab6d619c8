#pragma once

// Power sums s_n = x_1^n + ... + x_d^n three ways: direct powering of the
// roots, Newton's identities from the elementary symmetric functions, and the
// Bell-polynomial Girard-Waring formula
//   s_n = sum_{k=1}^n (-1)^{n+k} (k-1)!/(n-1)! B_{n,k}(1! e_1, 2! e_2, ..., d! e_d, 0, ...).

#include "bellrec/exec.hpp"
#include "bellrec/linrec.hpp"
#include "bellrec/ring.hpp"
#include "bellrec/sequence.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bellrec {

struct SymSpec {
    std::optional<std::vector<Rational>> roots;
    std::vector<Rational> elems;  // e_1..e_d

    std::size_t d() const { return elems.size(); }
};

/// From roots, filling elems. From elems alone, leaving roots empty.
SymSpec sym_from_roots(std::vector<Rational> roots);
SymSpec sym_from_elems(std::vector<Rational> elems);

/// e_1..e_d, the coefficients of prod_i (1 + x_i t).
std::vector<Rational> elem_from_roots(std::span<const Rational> roots);

/// s_0 = d.
Seq<Rational> power_sums_direct(std::span<const Rational> roots, std::size_t n_max, Exec exec = Exec::parallel);

/// d = |e|.
template <CoefficientRing T>
Seq<T> power_sums_newton(std::span<const T> e, std::size_t n_max);

template <CoefficientRing T>
Seq<T> power_sums_bell(std::span<const T> e, std::size_t n_max, Exec exec = Exec::parallel);

/// The same values via sum_k (k-1)!/(n-1)! B_{n,k}(1! c_1, 2! c_2, ...) with c_j = (-1)^{j-1} e_j,
/// i.e. with the signs absorbed into the Bell arguments instead of (-1)^{n+k}.
template <CoefficientRing T>
Seq<T> power_sums_bell_signed_coeffs(std::span<const T> e, std::size_t n_max, Exec exec = Exec::parallel);

/// c_j = (-1)^{j-1} e_j.
template <CoefficientRing T>
std::vector<T> newton_coeffs(std::span<const T> e);

/// The order-d recurrence satisfied by the power sums, with initial values s_0..s_{d-1}.
template <CoefficientRing T>
RecurrenceSpec<T> power_sum_recurrence(std::span<const T> e);

}  // namespace bellrec
