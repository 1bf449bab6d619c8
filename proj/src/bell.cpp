#include "bellrec/bell.hpp"

#include "bellrec/kernels.hpp"

#include <stdexcept>
#include <string>

namespace bellrec {

template <CoefficientRing T>
BellTable<T>::BellTable(std::vector<T> args, std::size_t n_max, Exec exec)
    : n_max_(n_max), args_(std::move(args))
{
    if (args_.size() < n_max_) {
        args_.resize(n_max_, ring_traits<T>::zero());
    }
    entries_ = kernels::bell_fill<T>(std::span<const T>(args_.data(), n_max_), n_max_, exec);
}

template <CoefficientRing T>
const T& BellTable<T>::arg(std::size_t j) const
{
    if (j == 0) {
        throw std::out_of_range("Bell arguments are indexed from 1");
    }
    return j <= args_.size() ? args_[j - 1] : zero_;
}

template <CoefficientRing T>
const T& BellTable<T>::at(std::size_t n, std::size_t k) const
{
    if (n > n_max_) {
        throw std::out_of_range("Bell table row " + std::to_string(n) + " beyond n_max " +
                                std::to_string(n_max_));
    }
    if (k > n) {
        return zero_;
    }
    return entries_[kernels::tri_index(n, k)];
}

template <CoefficientRing T>
T BellTable<T>::entry(std::size_t n, std::size_t k) const
{
    return at(n, k);
}

template <CoefficientRing T>
std::vector<T> scale_inputs(std::span<const T> c)
{
    std::vector<T> out;
    out.reserve(c.size());
    Integer fact = 1;
    for (std::size_t j = 1; j <= c.size(); ++j) {
        fact *= static_cast<unsigned long>(j);
        out.push_back(from_integer<T>(fact) * c[j - 1]);
    }
    return out;
}

template <CoefficientRing T>
bool check_key_identity(const BellTable<T>& table, std::size_t n, std::size_t k)
{
    if (k < 1 || k > n || n > table.n_max()) {
        throw std::out_of_range("check_key_identity requires 1 <= k <= n <= n_max");
    }
    const T lhs = from_integer<T>(Integer(static_cast<unsigned long>(n))) * table.at(n, k);
    T rhs = ring_traits<T>::zero();
    for (std::size_t j = 1; j <= n - k + 1; ++j) {
        const Integer weight = Integer(static_cast<unsigned long>(j)) *
                               binomial(static_cast<long>(n), static_cast<long>(j));
        rhs = rhs + from_integer<T>(weight) * table.arg(j) * table.at(n - j, k - 1);
    }
    return lhs == rhs;
}

template <CoefficientRing T>
T bell_two_term(const T& c1, const T& c2, std::size_t n, std::size_t k)
{
    if (k > n) {
        return ring_traits<T>::zero();
    }
    const Integer binom = binomial(static_cast<long>(k), static_cast<long>(n - k));
    // C(k, n-k) vanishes unless n-k <= k, which also keeps 2k-n non-negative.
    if (binom == 0) {
        return ring_traits<T>::zero();
    }
    const Integer ratio = factorial(n) / factorial(k);
    return from_integer<T>(Integer(ratio * binom)) * ring_pow(c1, 2 * k - n) * ring_pow(c2, n - k);
}

Integer bell_023(std::size_t n, std::size_t k)
{
    if (k > n || 2 * k > n) {
        // C(k, n-2k) with n-2k < 0
        return 0;
    }
    return Integer(factorial(n) / factorial(k)) * binomial(static_cast<long>(k), static_cast<long>(n - 2 * k));
}

Integer bell_123(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    Integer sum = 0;
    const auto sn = static_cast<long>(n);
    const auto sk = static_cast<long>(k);
    for (long l = 0; l <= sk; ++l) {
        sum += binomial(sk, sk - l) * binomial(sk - l, sn + l - 2 * sk);
    }
    return Integer(factorial(n) / factorial(k)) * sum;
}

#define BELLREC_INSTANTIATE(T)                                                        \
    template class BellTable<T>;                                                      \
    template std::vector<T> scale_inputs<T>(std::span<const T>);                      \
    template bool check_key_identity<T>(const BellTable<T>&, std::size_t, std::size_t); \
    template T bell_two_term<T>(const T&, const T&, std::size_t, std::size_t);

BELLREC_INSTANTIATE(Integer)
BELLREC_INSTANTIATE(Rational)
BELLREC_INSTANTIATE(Poly)

#undef BELLREC_INSTANTIATE

}  // namespace bellrec
