#include "bellrec/kernels.hpp"

#include <stdexcept>

namespace bellrec::kernels {

namespace {

template <CoefficientRing T>
void check_args(std::span<const T> args, std::size_t n_max)
{
    if (args.size() < n_max) {
        throw std::invalid_argument("bell_fill: argument list shorter than n_max");
    }
}

}  // namespace

template <CoefficientRing T>
std::vector<T> bell_fill(std::span<const T> args, std::size_t n_max, Exec exec)
{
    check_args(args, n_max);
    std::vector<T> tri(tri_size(n_max), ring_traits<T>::zero());
    tri[0] = ring_traits<T>::one();

    std::vector<T> weighted;
    for (std::size_t n = 1; n <= n_max; ++n) {
        // weighted[j-1] = C(n-1, j-1) x_j, shared by every k in this row
        weighted.assign(n, ring_traits<T>::zero());
        for (std::size_t j = 1; j <= n; ++j) {
            if (!is_zero(args[j - 1])) {
                weighted[j - 1] = from_integer<T>(binomial(static_cast<long>(n - 1), static_cast<long>(j - 1))) *
                                  args[j - 1];
            }
        }
        parallel_for(exec, n, [&](std::size_t idx) {
            const std::size_t k = idx + 1;
            T acc = ring_traits<T>::zero();
            for (std::size_t j = 1; j <= n - k + 1; ++j) {
                if (is_zero(weighted[j - 1])) {
                    continue;
                }
                const T& lower = tri[tri_index(n - j, k - 1)];
                if (!is_zero(lower)) {
                    acc = acc + weighted[j - 1] * lower;
                }
            }
            tri[tri_index(n, k)] = std::move(acc);
        });
    }
    return tri;
}

template <CoefficientRing T>
std::vector<T> cauchy_product(std::span<const T> a, std::span<const T> b, Exec exec)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("cauchy_product: mismatched lengths");
    }
    std::vector<T> out(a.size(), ring_traits<T>::zero());
    parallel_for(exec, a.size(), [&](std::size_t n) {
        T acc = ring_traits<T>::zero();
        for (std::size_t i = 0; i <= n; ++i) {
            if (!is_zero(a[i]) && !is_zero(b[n - i])) {
                acc = acc + a[i] * b[n - i];
            }
        }
        out[n] = std::move(acc);
    });
    return out;
}

template <CoefficientRing T>
std::vector<T> power_sums(std::span<const T> xs, std::size_t n_max, Exec exec)
{
    std::vector<T> out(n_max + 1, ring_traits<T>::zero());
    parallel_for(exec, n_max + 1, [&](std::size_t n) {
        T acc = ring_traits<T>::zero();
        for (const auto& x : xs) {
            acc = acc + ring_pow(x, n);
        }
        out[n] = std::move(acc);
    });
    return out;
}

namespace reference {

template <CoefficientRing T>
std::vector<T> bell_fill(std::span<const T> args, std::size_t n_max)
{
    check_args(args, n_max);
    std::vector<T> tri(tri_size(n_max), ring_traits<T>::zero());
    tri[0] = ring_traits<T>::one();
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            T acc = ring_traits<T>::zero();
            for (std::size_t j = 1; j <= n - k + 1; ++j) {
                acc = acc + from_integer<T>(binomial(static_cast<long>(n - 1), static_cast<long>(j - 1))) *
                                args[j - 1] * tri[tri_index(n - j, k - 1)];
            }
            tri[tri_index(n, k)] = acc;
        }
    }
    return tri;
}

template <CoefficientRing T>
std::vector<T> cauchy_product(std::span<const T> a, std::span<const T> b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("cauchy_product: mismatched lengths");
    }
    std::vector<T> out(a.size(), ring_traits<T>::zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    return out;
}

template <CoefficientRing T>
std::vector<T> power_sums(std::span<const T> xs, std::size_t n_max)
{
    std::vector<T> out(n_max + 1, ring_traits<T>::zero());
    std::vector<T> running(xs.size(), ring_traits<T>::one());
    for (std::size_t n = 0; n <= n_max; ++n) {
        T acc = ring_traits<T>::zero();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            acc = acc + running[i];
            running[i] = running[i] * xs[i];
        }
        out[n] = acc;
    }
    return out;
}

}  // namespace reference

#define BELLREC_INSTANTIATE(T)                                                                 \
    template std::vector<T> bell_fill<T>(std::span<const T>, std::size_t, Exec);              \
    template std::vector<T> cauchy_product<T>(std::span<const T>, std::span<const T>, Exec);  \
    template std::vector<T> power_sums<T>(std::span<const T>, std::size_t, Exec);             \
    template std::vector<T> reference::bell_fill<T>(std::span<const T>, std::size_t);         \
    template std::vector<T> reference::cauchy_product<T>(std::span<const T>, std::span<const T>); \
    template std::vector<T> reference::power_sums<T>(std::span<const T>, std::size_t);

BELLREC_INSTANTIATE(Integer)
BELLREC_INSTANTIATE(Rational)
BELLREC_INSTANTIATE(Poly)

#undef BELLREC_INSTANTIATE

}  // namespace bellrec::kernels
