#include "bellrec/symfun.hpp"

#include "bellrec/bell.hpp"
#include "bellrec/kernels.hpp"

namespace bellrec {

SymSpec sym_from_roots(std::vector<Rational> roots)
{
    if (roots.empty()) {
        throw std::invalid_argument("power sums need at least one variable");
    }
    SymSpec spec;
    spec.elems = elem_from_roots(roots);
    spec.roots = std::move(roots);
    return spec;
}

SymSpec sym_from_elems(std::vector<Rational> elems)
{
    if (elems.empty()) {
        throw std::invalid_argument("power sums need at least one variable");
    }
    return SymSpec{std::nullopt, std::move(elems)};
}

std::vector<Rational> elem_from_roots(std::span<const Rational> roots)
{
    // coefficients of prod (1 + x_i t), constant term first
    std::vector<Rational> poly{Rational(1)};
    for (const auto& x : roots) {
        poly.push_back(Rational(0));
        for (std::size_t i = poly.size() - 1; i > 0; --i) {
            poly[i] += x * poly[i - 1];
        }
    }
    return {poly.begin() + 1, poly.end()};
}

Seq<Rational> power_sums_direct(std::span<const Rational> roots, std::size_t n_max, Exec exec)
{
    return {kernels::power_sums<Rational>(roots, n_max, exec), Method::closed_form};
}

template <CoefficientRing T>
std::vector<T> newton_coeffs(std::span<const T> e)
{
    std::vector<T> c;
    c.reserve(e.size());
    for (std::size_t j = 1; j <= e.size(); ++j) {
        c.push_back(j % 2 == 1 ? e[j - 1] : T(-e[j - 1]));
    }
    return c;
}

template <CoefficientRing T>
Seq<T> power_sums_newton(std::span<const T> e, std::size_t n_max)
{
    const std::size_t d = e.size();
    const std::vector<T> c = newton_coeffs(e);
    std::vector<T> s;
    s.reserve(n_max + 1);
    s.push_back(from_integer<T>(Integer(static_cast<unsigned long>(d))));
    for (std::size_t n = 1; n <= n_max; ++n) {
        T acc = ring_traits<T>::zero();
        for (std::size_t j = 1; j <= d && j < n; ++j) {
            acc = acc + c[j - 1] * s[n - j];
        }
        if (n <= d) {
            acc = acc + from_integer<T>(Integer(static_cast<unsigned long>(n))) * c[n - 1];
        }
        s.push_back(std::move(acc));
    }
    return {std::move(s), Method::direct_recurrence};
}

namespace {

// sum_{k=1}^n sign(n,k) (k-1)!/(n-1)! B_{n,k}(args) for n >= 1, s_0 = d.
template <CoefficientRing T, class Sign>
std::vector<T> girard_waring(std::vector<T> args, std::size_t d, std::size_t n_max, Exec exec, Sign sign)
{
    using F = field_t<T>;
    const BellTable<T> table(std::move(args), n_max, exec);
    std::vector<T> s(n_max + 1, ring_traits<T>::zero());
    s[0] = from_integer<T>(Integer(static_cast<unsigned long>(d)));
    parallel_for(exec, n_max, [&](std::size_t idx) {
        const std::size_t n = idx + 1;
        const Integer nm1_fact = factorial(n - 1);
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
            const Integer num = sign(n, k) ? Integer(-km1_fact) : km1_fact;
            sum = sum + scale(ring_traits<T>::to_field(b), make_rational(num, nm1_fact));
        }
        s[n] = ring_traits<T>::from_field(sum);
    });
    return s;
}

}  // namespace

template <CoefficientRing T>
Seq<T> power_sums_bell(std::span<const T> e, std::size_t n_max, Exec exec)
{
    auto negative = [](std::size_t n, std::size_t k) { return (n + k) % 2 == 1; };
    return {girard_waring<T>(scale_inputs<T>(e), e.size(), n_max, exec, negative), Method::bell_formula};
}

template <CoefficientRing T>
Seq<T> power_sums_bell_signed_coeffs(std::span<const T> e, std::size_t n_max, Exec exec)
{
    const std::vector<T> c = newton_coeffs(e);
    auto never = [](std::size_t, std::size_t) { return false; };
    return {girard_waring<T>(scale_inputs<T>(c), e.size(), n_max, exec, never), Method::bell_formula};
}

template <CoefficientRing T>
RecurrenceSpec<T> power_sum_recurrence(std::span<const T> e)
{
    if (e.empty()) {
        throw std::invalid_argument("power sums need at least one variable");
    }
    const Seq<T> s = power_sums_newton(e, e.size() - 1);
    return make_recurrence<T>(newton_coeffs(e), s.values);
}

#define BELLREC_INSTANTIATE(T)                                                           \
    template std::vector<T> newton_coeffs<T>(std::span<const T>);                       \
    template Seq<T> power_sums_newton<T>(std::span<const T>, std::size_t);              \
    template Seq<T> power_sums_bell<T>(std::span<const T>, std::size_t, Exec);          \
    template Seq<T> power_sums_bell_signed_coeffs<T>(std::span<const T>, std::size_t, Exec); \
    template RecurrenceSpec<T> power_sum_recurrence<T>(std::span<const T>);

BELLREC_INSTANTIATE(Integer)
BELLREC_INSTANTIATE(Rational)
BELLREC_INSTANTIATE(Poly)

#undef BELLREC_INSTANTIATE

}  // namespace bellrec
