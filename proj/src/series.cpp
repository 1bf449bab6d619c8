#include "bellrec/series.hpp"

#include "bellrec/kernels.hpp"

namespace bellrec {

template <CoefficientRing T>
TruncSeries<T> ps_mul(const TruncSeries<T>& f, const TruncSeries<T>& g, Exec exec)
{
    if (f.n_max() != g.n_max()) {
        throw TruncationMismatch("ps_mul: truncation orders " + std::to_string(f.n_max()) + " and " +
                                 std::to_string(g.n_max()));
    }
    return TruncSeries<T>(kernels::cauchy_product<T>(f.coeffs(), g.coeffs(), exec), f.n_max());
}

template <CoefficientRing T>
TruncSeries<T> ps_recip(const TruncSeries<T>& f)
{
    const auto inv = ring_traits<T>::inverse(f[0]);
    if (!inv) {
        throw NotInvertible("ps_recip: constant term " + to_string(f[0]) + " is not a unit");
    }
    TruncSeries<T> y(f.n_max());
    y[0] = *inv;
    for (std::size_t n = 1; n <= f.n_max(); ++n) {
        T acc = ring_traits<T>::zero();
        for (std::size_t i = 1; i <= n; ++i) {
            if (!is_zero(f[i])) {
                acc = acc + f[i] * y[n - i];
            }
        }
        y[n] = -(*inv * acc);
    }
    return y;
}

template <CoefficientRing T>
TruncSeries<T> ps_pow(const TruncSeries<T>& f, unsigned r, Exec exec)
{
    TruncSeries<T> acc = TruncSeries<T>::one(f.n_max());
    TruncSeries<T> base = f;
    while (r > 0) {
        if (r & 1U) {
            acc = ps_mul(acc, base, exec);
        }
        r >>= 1U;
        if (r > 0) {
            base = ps_mul(base, base, exec);
        }
    }
    return acc;
}

#define BELLREC_INSTANTIATE(T)                                                                 \
    template TruncSeries<T> ps_mul<T>(const TruncSeries<T>&, const TruncSeries<T>&, Exec);   \
    template TruncSeries<T> ps_recip<T>(const TruncSeries<T>&);                               \
    template TruncSeries<T> ps_pow<T>(const TruncSeries<T>&, unsigned, Exec);

BELLREC_INSTANTIATE(Integer)
BELLREC_INSTANTIATE(Rational)
BELLREC_INSTANTIATE(Poly)

#undef BELLREC_INSTANTIATE

}  // namespace bellrec
