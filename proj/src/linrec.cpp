#include "bellrec/linrec.hpp"

#include "bellrec/bell.hpp"
#include "bellrec/series.hpp"

#include <string>

namespace bellrec {

template <CoefficientRing T>
Seq<T> eval_recurrence(const RecurrenceSpec<T>& spec, std::size_t n_max)
{
    const std::size_t d = spec.depth();
    if (d == 0 || spec.init.size() != d) {
        throw std::invalid_argument("eval_recurrence: malformed recurrence");
    }
    std::vector<T> a;
    a.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (n < d) {
            a.push_back(spec.init[n]);
            continue;
        }
        T acc = ring_traits<T>::zero();
        for (std::size_t j = 1; j <= d; ++j) {
            acc = acc + spec.coeffs[j - 1] * a[n - j];
        }
        a.push_back(std::move(acc));
    }
    return {std::move(a), Method::direct_recurrence};
}

template <CoefficientRing T>
Seq<T> invert_transform_bell(std::span<const T> c, std::size_t n_max, Exec exec)
{
    using F = field_t<T>;
    const BellTable<T> table(scale_inputs<T>(c), n_max, exec);

    std::vector<T> y(n_max + 1, ring_traits<T>::zero());
    parallel_for(exec, n_max + 1, [&](std::size_t n) {
        F sum = ring_traits<F>::zero();
        const Integer n_fact = factorial(n);
        Integer k_fact = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) {
                k_fact *= static_cast<unsigned long>(k);
            }
            const T& b = table.at(n, k);
            if (!is_zero(b)) {
                sum = sum + scale(ring_traits<T>::to_field(b), make_rational(k_fact, n_fact));
            }
        }
        y[n] = ring_traits<T>::from_field(sum);
    });
    return {std::move(y), Method::bell_formula};
}

template <CoefficientRing T>
Seq<T> invert_transform_series(std::span<const T> c, std::size_t n_max)
{
    TruncSeries<T> q = TruncSeries<T>::one(n_max);
    for (std::size_t j = 1; j <= c.size() && j <= n_max; ++j) {
        q[j] = -c[j - 1];
    }
    return {ps_recip(q).coeffs(), Method::series_reciprocal};
}

template <CoefficientRing T>
Seq<T> invert_transform(std::span<const T> c, std::size_t n_max, Exec exec)
{
    Seq<T> via_bell = invert_transform_bell(c, n_max, exec);
    const Seq<T> via_series = invert_transform_series(c, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (!(via_bell.values[n] == via_series.values[n])) {
            throw PathMismatch("INVERT transform: Bell formula and series reciprocal differ at n = " +
                               std::to_string(n));
        }
    }
    return via_bell;
}

template <CoefficientRing T>
Decomposition<T> decompose(const RecurrenceSpec<T>& spec)
{
    const std::size_t d = spec.depth();
    Decomposition<T> dec;
    dec.lambdas.reserve(d);
    for (std::size_t n = 0; n < d; ++n) {
        T lambda = spec.init[n];
        for (std::size_t j = 1; j <= n; ++j) {
            lambda = lambda - spec.coeffs[j - 1] * spec.init[n - j];
        }
        dec.lambdas.push_back(std::move(lambda));
    }
    return dec;
}

template <CoefficientRing T>
Seq<T> reconstruct(const Decomposition<T>& dec, std::span<const T> c, std::size_t n_max, Exec exec)
{
    const Seq<T> y = invert_transform(c, n_max, exec);
    std::vector<T> a(n_max + 1, ring_traits<T>::zero());
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t k = 0; k < dec.lambdas.size() && k <= n; ++k) {
            a[n] = a[n] + dec.lambdas[k] * y.values[n - k];
        }
    }
    return {std::move(a), Method::bell_formula};
}

template <CoefficientRing T>
std::vector<std::vector<T>> initial_value_matrix(std::span<const T> y, std::size_t d)
{
    if (y.size() < d) {
        throw std::invalid_argument("initial_value_matrix: need y_0..y_{d-1}");
    }
    std::vector<std::vector<T>> m(d, std::vector<T>(d, ring_traits<T>::zero()));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            m[i][j] = i == j ? ring_traits<T>::one() : y[i - j];
        }
    }
    return m;
}

template <CoefficientRing T>
std::vector<std::vector<T>> initial_value_matrix_inverse(std::span<const T> c, std::size_t d)
{
    std::vector<std::vector<T>> m(d, std::vector<T>(d, ring_traits<T>::zero()));
    for (std::size_t i = 0; i < d; ++i) {
        m[i][i] = ring_traits<T>::one();
        for (std::size_t j = 0; j < i; ++j) {
            const std::size_t lag = i - j;
            if (lag <= c.size()) {
                m[i][j] = -c[lag - 1];
            }
        }
    }
    return m;
}

template <CoefficientRing T>
std::vector<T> mat_vec(const std::vector<std::vector<T>>& m, std::span<const T> v)
{
    std::vector<T> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        if (row.size() != v.size()) {
            throw std::invalid_argument("mat_vec: dimension mismatch");
        }
        T acc = ring_traits<T>::zero();
        for (std::size_t j = 0; j < row.size(); ++j) {
            acc = acc + row[j] * v[j];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

template <CoefficientRing T>
T fibonacci_closed(const T& alpha, const T& c1, const T& c2, std::size_t n)
{
    if (n == 0) {
        return ring_traits<T>::zero();
    }
    T sum = ring_traits<T>::zero();
    const auto m = static_cast<long>(n) - 1;
    for (long j = 0; j <= m; ++j) {
        const Integer b = binomial(m - j, j);
        if (b == 0) {
            continue;
        }
        sum = sum + from_integer<T>(b) * ring_pow(c1, static_cast<std::size_t>(m - 2 * j)) *
                        ring_pow(c2, static_cast<std::size_t>(j));
    }
    return alpha * sum;
}

Integer padovan_closed(std::size_t n)
{
    const long m = static_cast<long>(n) - 3;
    Integer sum = 0;
    for (long k = 0; k <= m; ++k) {
        sum += binomial(k, m - 2 * k);
    }
    return sum;
}

Integer tribonacci_closed(std::size_t n)
{
    const long m = static_cast<long>(n) - 2;
    Integer sum = 0;
    for (long j = 0; j <= m; ++j) {
        for (long k = 0; k <= j; ++k) {
            sum += binomial(k, j - k) * binomial(j - k, m - j);
        }
    }
    return sum;
}

Poly chebyshev_T(std::size_t n)
{
    if (n == 0) {
        return Poly(Rational(1));
    }
    Poly out;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const Rational factor = make_rational(Integer(static_cast<unsigned long>(n)),
                                              Integer(2UL * (n - k)));
        Rational coeff = factor * Rational(binomial(static_cast<long>(n - k), static_cast<long>(k)));
        coeff *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(n - 2 * k));
        if (k % 2 == 1) {
            coeff = -coeff;
        }
        out += Poly::monomial(coeff, n - 2 * k);
    }
    return out;
}

Poly chebyshev_U(std::size_t n)
{
    Poly out;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        Rational coeff(binomial(static_cast<long>(n - k), static_cast<long>(k)));
        coeff *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(n - 2 * k));
        if (k % 2 == 1) {
            coeff = -coeff;
        }
        out += Poly::monomial(coeff, n - 2 * k);
    }
    return out;
}

RecurrenceSpec<Integer> fibonacci_spec() { return make_recurrence<Integer>({1, 1}, {0, 1}); }

RecurrenceSpec<Integer> padovan_spec() { return make_recurrence<Integer>({0, 1, 1}, {1, 0, 0}); }

RecurrenceSpec<Integer> tribonacci_spec() { return make_recurrence<Integer>({1, 1, 1}, {0, 0, 1}); }

RecurrenceSpec<Poly> chebyshev_t_spec()
{
    const Poly two_x = Poly{Rational(0), Rational(2)};
    return make_recurrence<Poly>({two_x, Poly(Rational(-1))}, {Poly(Rational(1)), Poly::x()});
}

RecurrenceSpec<Poly> chebyshev_u_spec()
{
    const Poly two_x = Poly{Rational(0), Rational(2)};
    return make_recurrence<Poly>({two_x, Poly(Rational(-1))}, {Poly(Rational(1)), two_x});
}

#define BELLREC_INSTANTIATE(T)                                                                  \
    template Seq<T> eval_recurrence<T>(const RecurrenceSpec<T>&, std::size_t);                 \
    template Seq<T> invert_transform_bell<T>(std::span<const T>, std::size_t, Exec);           \
    template Seq<T> invert_transform_series<T>(std::span<const T>, std::size_t);               \
    template Seq<T> invert_transform<T>(std::span<const T>, std::size_t, Exec);                \
    template Decomposition<T> decompose<T>(const RecurrenceSpec<T>&);                          \
    template Seq<T> reconstruct<T>(const Decomposition<T>&, std::span<const T>, std::size_t, Exec); \
    template std::vector<std::vector<T>> initial_value_matrix<T>(std::span<const T>, std::size_t); \
    template std::vector<std::vector<T>> initial_value_matrix_inverse<T>(std::span<const T>, std::size_t); \
    template std::vector<T> mat_vec<T>(const std::vector<std::vector<T>>&, std::span<const T>); \
    template T fibonacci_closed<T>(const T&, const T&, const T&, std::size_t);

BELLREC_INSTANTIATE(Integer)
BELLREC_INSTANTIATE(Rational)
BELLREC_INSTANTIATE(Poly)

#undef BELLREC_INSTANTIATE

}  // namespace bellrec
