#include "bellrec/convolve.hpp"

#include "bellrec/bell.hpp"
#include "bellrec/linrec.hpp"
#include "bellrec/series.hpp"

#include <string>

namespace bellrec {

template <CoefficientRing T>
Seq<T> conv_direct(const ConvSpec<T>& spec, Exec exec)
{
    const Seq<T> y = invert_transform<T>(spec.c, spec.n_max, exec);
    TruncSeries<T> shifted(spec.n_max);
    for (std::size_t m = spec.delta; m <= spec.n_max; ++m) {
        shifted[m] = y.values[m - spec.delta];
    }
    return {ps_pow(shifted, spec.r, exec).coeffs(), Method::convolution_direct};
}

template <CoefficientRing T>
Seq<T> conv_bell(const ConvSpec<T>& spec, Exec exec)
{
    if (spec.r == 0) {
        throw UnsupportedParameters("conv_bell: r must be at least 1");
    }
    using F = field_t<T>;
    const std::size_t shift = spec.delta * spec.r;
    const std::size_t rows = spec.n_max >= shift ? spec.n_max - shift : 0;
    const BellTable<T> table(scale_inputs<T>(spec.c), rows, exec);

    std::vector<T> out(spec.n_max + 1, ring_traits<T>::zero());
    parallel_for(exec, spec.n_max + 1, [&](std::size_t n) {
        if (n < shift) {
            return;
        }
        const std::size_t m = n - shift;
        const Integer m_fact = factorial(m);
        F sum = ring_traits<F>::zero();
        Integer k_fact = 1;
        for (std::size_t k = 0; k <= m; ++k) {
            if (k > 0) {
                k_fact *= static_cast<unsigned long>(k);
            }
            const T& b = table.at(m, k);
            if (is_zero(b)) {
                continue;
            }
            const Integer weight = binomial(static_cast<long>(k + spec.r - 1), static_cast<long>(k)) * k_fact;
            sum = sum + scale(ring_traits<T>::to_field(b), make_rational(weight, m_fact));
        }
        out[n] = ring_traits<T>::from_field(sum);
    });
    return {std::move(out), Method::convolution_bell};
}

template <CoefficientRing T>
Seq<T> conv_thm_recurrence(const ConvSpec<T>& spec)
{
    if (spec.r == 0) {
        throw UnsupportedParameters("conv_thm_recurrence: r must be at least 1");
    }
    if (spec.delta != 0) {
        throw UnsupportedParameters("conv_thm_recurrence: only the unshifted convolution (delta = 0) is covered");
    }
    std::vector<T> y(spec.n_max + 1, ring_traits<T>::zero());
    y[0] = ring_traits<T>::one();
    const Integer r_minus_one = Integer(spec.r) - 1;
    for (std::size_t n = 1; n <= spec.n_max; ++n) {
        T rhs = ring_traits<T>::zero();
        for (std::size_t m = 1; m <= n && m <= spec.c.size(); ++m) {
            if (is_zero(spec.c[m - 1])) {
                continue;
            }
            const Integer weight = Integer(static_cast<unsigned long>(n)) +
                                   Integer(static_cast<unsigned long>(m)) * r_minus_one;
            rhs = rhs + from_integer<T>(weight) * spec.c[m - 1] * y[n - m];
        }
        try {
            y[n] = ring_traits<T>::from_field(
                scale(ring_traits<T>::to_field(rhs), make_rational(1, Integer(static_cast<unsigned long>(n)))));
        } catch (const IntegralityError&) {
            throw IntegralityError("convolution recurrence: right-hand side not divisible by n = " +
                                   std::to_string(n));
        }
    }
    return {std::move(y), Method::convolution_recurrence};
}

Integer padovan_conv_binomial_from_one(unsigned r, std::size_t n)
{
    const auto sn = static_cast<long>(n);
    Integer total = 0;
    for (long l = 1; l <= static_cast<long>(r); ++l) {
        Integer inner = 0;
        for (long k = 0; k <= sn - 3 * l; ++k) {
            inner += binomial(k + l - 1, k) * binomial(k, sn - 3 * l - 2 * k);
        }
        total += binomial(static_cast<long>(r), l) * inner;
    }
    return total;
}

Integer padovan_conv_binomial(unsigned r, std::size_t n)
{
    // l = 0: C(r, 0) times the coefficient of t^n in Y^0 = 1.
    const Integer leading = n == 0 ? 1 : 0;
    return leading + padovan_conv_binomial_from_one(r, n);
}

namespace {

// Shared core of genfam_seq and genfam_conv_rhs:
//   out_n = factor * sum_{k=1}^n C(a n + b k + offset, k-1) (k-1)!/n! B_{n,k}, out_0 = 1.
template <CoefficientRing T>
std::vector<field_t<T>> genfam_sum(const GenFamilySpec<T>& spec, const Rational& offset, const Rational& factor,
                                   std::size_t n_max, Exec exec)
{
    using F = field_t<T>;
    const BellTable<T> table(scale_inputs<T>(spec.c), n_max, exec);
    std::vector<F> out(n_max + 1, ring_traits<F>::zero());
    out[0] = ring_traits<F>::one();
    parallel_for(exec, n_max, [&](std::size_t idx) {
        const std::size_t n = idx + 1;
        const Integer n_fact = factorial(n);
        const Rational an = spec.a * Rational(static_cast<long>(n));
        F sum = ring_traits<F>::zero();
        Integer km1_fact = 1;
        for (std::size_t k = 1; k <= n; ++k) {
            if (k > 1) {
                km1_fact *= static_cast<unsigned long>(k - 1);
            }
            const T& b = table.at(n, k);
            if (is_zero(b)) {
                continue;
            }
            const Rational top = an + spec.b * Rational(static_cast<long>(k)) + offset;
            const Rational weight = gen_binomial(top, k - 1) * make_rational(km1_fact, n_fact);
            if (weight != 0) {
                sum = sum + scale(ring_traits<T>::to_field(b), weight);
            }
        }
        out[n] = scale(sum, factor);
    });
    return out;
}

}  // namespace

template <CoefficientRing T>
Seq<field_t<T>> genfam_seq(const GenFamilySpec<T>& spec, std::size_t n_max, Exec exec)
{
    return {genfam_sum(spec, Rational(0), Rational(1), n_max, exec), Method::bell_formula};
}

template <CoefficientRing T>
std::vector<field_t<T>> genfam_conv_rhs(const GenFamilySpec<T>& spec, unsigned r, std::size_t n_max, Exec exec)
{
    if (r == 0) {
        throw UnsupportedParameters("genfam_conv_rhs: r must be at least 1");
    }
    const Rational rr(static_cast<unsigned long>(r));
    return genfam_sum(spec, rr - 1, rr, n_max, exec);
}

template <CoefficientRing T>
bool genfam_conv_check(const GenFamilySpec<T>& spec, unsigned r, std::size_t n_max, Exec exec)
{
    using F = field_t<T>;
    const auto y = genfam_seq(spec, n_max, exec);
    const TruncSeries<F> lhs = ps_pow(TruncSeries<F>(y.values, n_max), r, exec);
    const auto rhs = genfam_conv_rhs(spec, r, n_max, exec);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (!(lhs[n] == rhs[n])) {
            return false;
        }
    }
    return true;
}

#define BELLREC_INSTANTIATE(T)                                                                          \
    template Seq<T> conv_direct<T>(const ConvSpec<T>&, Exec);                                          \
    template Seq<T> conv_bell<T>(const ConvSpec<T>&, Exec);                                            \
    template Seq<T> conv_thm_recurrence<T>(const ConvSpec<T>&);                                        \
    template Seq<field_t<T>> genfam_seq<T>(const GenFamilySpec<T>&, std::size_t, Exec);                \
    template std::vector<field_t<T>> genfam_conv_rhs<T>(const GenFamilySpec<T>&, unsigned, std::size_t, Exec); \
    template bool genfam_conv_check<T>(const GenFamilySpec<T>&, unsigned, std::size_t, Exec);

BELLREC_INSTANTIATE(Integer)
BELLREC_INSTANTIATE(Rational)
BELLREC_INSTANTIATE(Poly)

#undef BELLREC_INSTANTIATE

}  // namespace bellrec
