#include "bellrec/symfun.hpp"
#include "bellrec/verify.hpp"
#include "oracles.hpp"

#include "doctest.h"

using namespace bellrec;

namespace {

std::vector<Rational> rats(std::initializer_list<Rational> v) { return v; }

}  // namespace

TEST_SUITE("symfun")
{
    TEST_CASE("elementary symmetric functions")
    {
        CHECK(elem_from_roots(rats({1, 2})) == rats({3, 2}));
        CHECK(elem_from_roots(rats({1, 1, 1})) == rats({3, 3, 1}));
        CHECK(elem_from_roots(rats({make_rational(1, 2), -2, 3})) ==
              rats({make_rational(3, 2), make_rational(-11, 2), -3}));

        Rng rng(401);
        for (int trial = 0; trial < 10; ++trial) {
            const auto roots = random_rationals(rng, random_size(rng, 1, 7), -9, 9, 5);
            CHECK(elem_from_roots(roots) == oracle::elementary_by_subsets(roots));
        }
        const SymSpec s = sym_from_roots(rats({2, 5}));
        CHECK(s.d() == 2);
        CHECK(s.elems == rats({7, 10}));
        CHECK_THROWS_AS(sym_from_roots({}), std::invalid_argument);
        CHECK_FALSE(sym_from_elems(rats({1})).roots.has_value());
    }

    TEST_CASE("direct power sums")
    {
        const auto s = power_sums_direct(rats({1, 2}), 3);
        CHECK(s.values == rats({2, 3, 5, 9}));
        CHECK(power_sums_direct(rats({4, 5, 6}), 0).values == rats({3}));
        CHECK(power_sums_direct(rats({make_rational(1, 2), -2, 3}), 4).values[4] == make_rational(1553, 16));
    }

    TEST_CASE("Newton identities")
    {
        CHECK(power_sums_newton<Rational>(rats({3, 2}), 4).values == rats({2, 3, 5, 9, 17}));
        const Rational q = make_rational(-5, 3);
        const auto geo = power_sums_newton<Rational>(rats({q}), 10);
        for (std::size_t n = 0; n <= 10; ++n) {
            CHECK(geo.values[n] == ring_pow(q, n));
        }
        // e = (x, 1): s_n is a polynomial in x; compare with the Bell route coefficient-wise
        const std::vector<Poly> e{Poly::x(), Poly(1)};
        const auto newton = power_sums_newton<Poly>(e, 15);
        CHECK(newton.values == power_sums_bell<Poly>(e, 15).values);
        // x = 2: roots of t^2 - 2t + 1, a double root at 1
        for (const auto& p : newton.values) {
            CHECK(p.eval(2) == 2);
        }
    }

    TEST_CASE("Girard-Waring via Bell polynomials")
    {
        CHECK(power_sums_bell<Rational>(rats({3, 2}), 4).values[4] == 17);
        const auto e = rats({make_rational(7, 3), -4, make_rational(1, 5)});
        CHECK(power_sums_bell<Rational>(e, 1).values[1] == e[0]);
        // roots 1, i, -i
        const auto s = power_sums_bell<Integer>(std::vector<Integer>{1, 1, 1}, 8);
        CHECK(s.values == std::vector<Integer>{3, 1, -1, 1, 3, 1, -1, 1, 3});
        CHECK(s.values == power_sums_newton<Integer>(std::vector<Integer>{1, 1, 1}, 8).values);
        CHECK(power_sums_bell<Rational>(rats({3, 2}), 0).values == rats({2}));
    }

    TEST_CASE("three routes agree and the lambda identity holds")
    {
        Rng rng(409);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t d = random_size(rng, 1, 6);
            const SymSpec spec = sym_from_roots(random_rationals(rng, d, -9, 9, 4));
            const auto direct = power_sums_direct(*spec.roots, 30);
            REQUIRE(power_sums_newton<Rational>(spec.elems, 30).values == direct.values);
            REQUIRE(power_sums_bell<Rational>(spec.elems, 30).values == direct.values);
            REQUIRE(power_sums_bell_signed_coeffs<Rational>(spec.elems, 30).values == direct.values);

            const auto rec = power_sum_recurrence<Rational>(spec.elems);
            const auto dec = decompose(rec);
            CHECK(dec.lambdas[0] == Rational(static_cast<long>(d)));
            for (std::size_t j = 1; j < d; ++j) {
                CHECK(dec.lambdas[j] == Rational(static_cast<long>(j) - static_cast<long>(d)) * rec.coeffs[j - 1]);
            }
            CHECK(eval_recurrence(rec, 30).values == direct.values);
        }
    }
}
