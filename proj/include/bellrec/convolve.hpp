#pragma once

// r-fold self-convolutions y^{(r)}_n = sum_{m_1+...+m_r=n} y_{m_1-delta}...y_{m_r-delta}
// of the INVERT basis sequence y of c, computed three ways:
//   direct      - Cauchy power of the (shifted) series Y(t)
//   bell        - sum_k C(k+r-1, k) k!/m! B_{m,k}(1! c_1, 2! c_2, ...), m = n - delta r
//   recurrence  - n y^{(r)}_n = sum_{m=1}^{n} [n + m(r-1)] c_m y^{(r)}_{n-m}   (delta = 0)

#include "bellrec/exec.hpp"
#include "bellrec/ring.hpp"
#include "bellrec/sequence.hpp"

#include <cstddef>
#include <vector>

namespace bellrec {

template <CoefficientRing T>
struct ConvSpec {
    std::vector<T> c;
    unsigned r = 1;
    std::size_t delta = 0;
    std::size_t n_max = 0;
};

/// Two-parameter family y_n = sum_{k=1}^n C(a n + b k, k-1) (k-1)!/n! B_{n,k}(1! c_1, ...), y_0 = 1.
template <CoefficientRing T>
struct GenFamilySpec {
    Rational a;
    Rational b;
    std::vector<T> c;
};

/// Thrown when a method is asked for parameters it does not cover.
class UnsupportedParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Any r >= 0; r = 0 is the identity series.
template <CoefficientRing T>
Seq<T> conv_direct(const ConvSpec<T>& spec, Exec exec = Exec::parallel);

/// r >= 1.
template <CoefficientRing T>
Seq<T> conv_bell(const ConvSpec<T>& spec, Exec exec = Exec::parallel);

/// r >= 1 and delta == 0. Each division by n must be exact when T is Integer.
template <CoefficientRing T>
Seq<T> conv_thm_recurrence(const ConvSpec<T>& spec);

/// sum_{m_1+...+m_r=n} P_{m_1}...P_{m_r} for the Padovan sequence P (P_0 = 1, P_1 = P_2 = 0),
/// as sum_{l=0}^{r} C(r, l) sum_k C(k+l-1, k) C(k, n-3l-2k). The l = 0 term only
/// contributes at n = 0.
Integer padovan_conv_binomial(unsigned r, std::size_t n);

/// The same double sum with l starting at 1; equals the convolution for n >= 1 only.
Integer padovan_conv_binomial_from_one(unsigned r, std::size_t n);

template <CoefficientRing T>
Seq<field_t<T>> genfam_seq(const GenFamilySpec<T>& spec, std::size_t n_max, Exec exec = Exec::parallel);

/// r C(a n + b k + r - 1, k-1) (k-1)!/n! summed against B_{n,k}, for n >= 1; 1 at n = 0.
template <CoefficientRing T>
std::vector<field_t<T>> genfam_conv_rhs(const GenFamilySpec<T>& spec, unsigned r, std::size_t n_max,
                                        Exec exec = Exec::parallel);

/// r-fold Cauchy power of genfam_seq equals genfam_conv_rhs at every n <= n_max.
template <CoefficientRing T>
bool genfam_conv_check(const GenFamilySpec<T>& spec, unsigned r, std::size_t n_max, Exec exec = Exec::parallel);

}  // namespace bellrec
