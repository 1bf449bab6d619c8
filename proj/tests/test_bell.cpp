#include "bellrec/bell.hpp"
#include "bellrec/kernels.hpp"
#include "bellrec/verify.hpp"
#include "oracles.hpp"

#include "doctest.h"

using namespace bellrec;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("bell")
{
    TEST_CASE("table examples")
    {
        const auto stirling = bell_table(std::vector<Integer>(4, Integer(1)), 4);
        CHECK(stirling.entry(4, 2) == 7);

        const auto sparse = bell_table(ints({1, 2}), 3);
        CHECK(sparse.entry(3, 2) == 6);

        const Rational x1 = make_rational(-2, 3);
        const auto single = bell_table(std::vector<Rational>{x1}, 9);
        for (std::size_t n = 0; n <= 9; ++n) {
            CHECK(single.entry(n, n) == ring_pow(x1, n));
        }
    }

    TEST_CASE("table invariants")
    {
        Rng rng(3);
        const auto x = random_rationals(rng, 12, -9, 9, 7);
        const auto t = bell_table(x, 12);
        CHECK(t.entry(0, 0) == 1);
        for (std::size_t n = 1; n <= 12; ++n) {
            CHECK(t.entry(n, 0) == 0);
            CHECK(t.entry(n, 1) == x[n - 1]);
            CHECK(t.entry(n, n) == ring_pow(x[0], n));
            CHECK(t.entry(n, n + 3) == 0);
        }
        CHECK(t.raw().size() == 12 * 13 / 2 + 12 + 1);
        CHECK_THROWS_AS(t.entry(13, 1), std::out_of_range);
        CHECK(t.arg(40) == 0);
    }

    TEST_CASE("table agrees with set-partition enumeration")
    {
        Rng rng(17);
        for (int trial = 0; trial < 5; ++trial) {
            const auto x = random_integers(rng, 8, -4, 4);
            const auto t = bell_table(x, 8);
            for (std::size_t n = 0; n <= 8; ++n) {
                for (std::size_t k = 0; k <= n; ++k) {
                    REQUIRE(t.entry(n, k) == oracle::bell_by_partitions(x, n, k, Integer(0), Integer(1)));
                }
            }
        }
    }

    TEST_CASE("homogeneity")
    {
        Rng rng(23);
        for (int trial = 0; trial < 5; ++trial) {
            const auto x = random_rationals(rng, 10, -9, 9, 5);
            const Rational a = random_rational(rng, 1, 9, 5);
            const Rational b = random_rational(rng, -9, -1, 5);
            std::vector<Rational> scaled;
            for (std::size_t j = 1; j <= x.size(); ++j) {
                scaled.push_back(a * ring_pow(b, j) * x[j - 1]);
            }
            const auto t = bell_table(x, 10);
            const auto ts = bell_table(scaled, 10);
            for (std::size_t n = 0; n <= 10; ++n) {
                for (std::size_t k = 0; k <= n; ++k) {
                    REQUIRE(ts.entry(n, k) == ring_pow(a, k) * ring_pow(b, n) * t.entry(n, k));
                }
            }
        }
    }

    TEST_CASE("scale_inputs")
    {
        CHECK(scale_inputs<Integer>(ints({1, 1, 1})) == ints({1, 2, 6}));
        CHECK(scale_inputs<Integer>(std::vector<Integer>{}).empty());
        CHECK(scale_inputs<Integer>(ints({0, 1, 1})) == ints({0, 2, 6}));
    }

    TEST_CASE("key identity")
    {
        const auto ones = bell_table(std::vector<Integer>(6, Integer(1)), 6);
        CHECK(check_key_identity(ones, 4, 2));
        for (std::size_t n = 1; n <= 6; ++n) {
            CHECK(check_key_identity(ones, n, n));
        }
        CHECK_THROWS_AS(check_key_identity(ones, 7, 2), std::out_of_range);
        CHECK_THROWS_AS(check_key_identity(ones, 3, 0), std::out_of_range);
        CHECK_THROWS_AS(check_key_identity(ones, 3, 4), std::out_of_range);

        Rng rng(29);
        const auto t = bell_table(random_rationals(rng, 25, -9, 9, 9), 25);
        CHECK(check_key_identity(t, 10, 4));
        for (std::size_t n = 1; n <= 25; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                REQUIRE(check_key_identity(t, n, k));
            }
        }

        // polynomial arguments
        const auto poly_table = bell_table(std::vector<Poly>{Poly::x(), Poly(3)}, 5);
        CHECK(check_key_identity(poly_table, 5, 3));
    }

    TEST_CASE("two-term closed form")
    {
        CHECK(bell_two_term<Integer>(1, 1, 3, 2) == 6);
        CHECK(bell_two_term<Integer>(1, 1, 4, 2) == 12);
        CHECK(bell_two_term<Integer>(5, 7, 6, 6) == ring_pow(Integer(5), 6));
        CHECK(bell_two_term<Integer>(5, 7, 3, 1) == 0);

        Rng rng(31);
        for (int trial = 0; trial < 4; ++trial) {
            const Rational c1 = random_rational(rng, -9, 9, 4);
            const Rational c2 = random_rational(rng, -9, 9, 4);
            const auto t = bell_table(std::vector<Rational>{c1, 2 * c2}, 30);
            for (std::size_t n = 0; n <= 30; ++n) {
                for (std::size_t k = 0; k <= n; ++k) {
                    REQUIRE(bell_two_term(c1, c2, n, k) == t.entry(n, k));
                }
            }
        }
        const Poly two_x = Poly{Rational(0), Rational(2)};
        const auto tp = bell_table(std::vector<Poly>{two_x, Poly(-2)}, 12);
        for (std::size_t n = 0; n <= 12; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                REQUIRE(bell_two_term(two_x, Poly(-1), n, k) == tp.entry(n, k));
            }
        }
    }

    TEST_CASE("sparse closed forms")
    {
        CHECK(bell_023(2, 1) == 2);
        CHECK(bell_023(1, 1) == 0);
        CHECK(bell_023(5, 2) == 120);
        CHECK(bell_123(3, 1) == 6);
        CHECK(bell_123(7, 7) == 1);
        CHECK(bell_123(4, 2) == 36);

        const auto t023 = bell_table(ints({0, 2, 6}), 30);
        const auto t123 = bell_table(ints({1, 2, 6}), 30);
        for (std::size_t n = 0; n <= 30; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                REQUIRE(bell_023(n, k) == t023.entry(n, k));
                REQUIRE(bell_123(n, k) == t123.entry(n, k));
            }
        }
    }
}
