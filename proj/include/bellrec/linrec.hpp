#pragma once

// Fixed-coefficient linear recurrences a_n = c_1 a_{n-1} + ... + c_d a_{n-d}
// and their expansion in the basis y, S y, ..., S^{d-1} y where y is the
// INVERT transform of c (coefficients of 1/(1 - c_1 t - ... - c_d t^d)).

#include "bellrec/exec.hpp"
#include "bellrec/ring.hpp"
#include "bellrec/sequence.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bellrec {

template <CoefficientRing T>
struct RecurrenceSpec {
    std::vector<T> coeffs;  // c_1..c_d
    std::vector<T> init;    // a_0..a_{d-1}

    std::size_t depth() const { return coeffs.size(); }
};

/// Validated constructor: requires |coeffs| == |init| >= 1.
template <CoefficientRing T>
RecurrenceSpec<T> make_recurrence(std::vector<T> coeffs, std::vector<T> init)
{
    if (coeffs.empty() || coeffs.size() != init.size()) {
        throw std::invalid_argument("recurrence needs d >= 1 coefficients and exactly d initial values");
    }
    return RecurrenceSpec<T>{std::move(coeffs), std::move(init)};
}

/// lambda_0..lambda_{d-1} with a_n = sum_k lambda_k y_{n-k}.
template <CoefficientRing T>
struct Decomposition {
    std::vector<T> lambdas;
};

template <CoefficientRing T>
Seq<T> eval_recurrence(const RecurrenceSpec<T>& spec, std::size_t n_max);

/// y_n = sum_k k!/n! B_{n,k}(1! c_1, 2! c_2, ...), computed through a Bell
/// table in the fraction field and brought back to T (IntegralityError if a
/// value over the integers fails to be integral).
template <CoefficientRing T>
Seq<T> invert_transform_bell(std::span<const T> c, std::size_t n_max, Exec exec = Exec::parallel);

/// y as the reciprocal of Q(t) = 1 - sum c_n t^n.
template <CoefficientRing T>
Seq<T> invert_transform_series(std::span<const T> c, std::size_t n_max);

/// Runs both routes and throws PathMismatch unless they agree exactly.
template <CoefficientRing T>
Seq<T> invert_transform(std::span<const T> c, std::size_t n_max, Exec exec = Exec::parallel);

template <CoefficientRing T>
Decomposition<T> decompose(const RecurrenceSpec<T>& spec);

/// a_n = sum_k lambda_k y_{n-k}, with y_m = 0 for m < 0.
template <CoefficientRing T>
Seq<T> reconstruct(const Decomposition<T>& dec, std::span<const T> c, std::size_t n_max,
                   Exec exec = Exec::parallel);

// The d x d lower-triangular Toeplitz matrix with first column (1, y_1, ..., y_{d-1})
// maps lambda to the initial values; its inverse has first column (1, -c_1, ..., -c_{d-1}).
template <CoefficientRing T>
std::vector<std::vector<T>> initial_value_matrix(std::span<const T> y, std::size_t d);

template <CoefficientRing T>
std::vector<std::vector<T>> initial_value_matrix_inverse(std::span<const T> c, std::size_t d);

template <CoefficientRing T>
std::vector<T> mat_vec(const std::vector<std::vector<T>>& m, std::span<const T> v);

// Closed forms

/// alpha * sum_{j=0}^{n-1} C(n-1-j, j) c1^{n-1-2j} c2^j  (f_0 = 0, f_1 = alpha).
template <CoefficientRing T>
T fibonacci_closed(const T& alpha, const T& c1, const T& c2, std::size_t n);

/// sum_{k=0}^{n-3} C(k, n-3-2k), valid for n >= 3.
Integer padovan_closed(std::size_t n);

/// sum_{j=0}^{n-2} sum_{k=0}^{j} C(k, j-k) C(j-k, n-2-j), valid for n >= 2.
Integer tribonacci_closed(std::size_t n);

/// T_n(x) = sum_k (-1)^k n/(2(n-k)) C(n-k, k) (2x)^{n-2k}; T_0 = 1.
Poly chebyshev_T(std::size_t n);

/// U_n(x) = sum_k (-1)^k C(n-k, k) (2x)^{n-2k}; U_0 = 1.
Poly chebyshev_U(std::size_t n);

// Specs of the named families.

RecurrenceSpec<Integer> fibonacci_spec();    // 0, 1, 1, 2, ...
RecurrenceSpec<Integer> padovan_spec();      // 1, 0, 0, 1, ...
RecurrenceSpec<Integer> tribonacci_spec();   // 0, 0, 1, 1, 2, ...
template <CoefficientRing T>
RecurrenceSpec<T> generalized_fibonacci_spec(const T& alpha, const T& c1, const T& c2)
{
    return make_recurrence<T>({c1, c2}, {ring_traits<T>::zero(), alpha});
}
RecurrenceSpec<Poly> chebyshev_t_spec();
RecurrenceSpec<Poly> chebyshev_u_spec();

}  // namespace bellrec
