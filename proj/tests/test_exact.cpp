#include "bellrec/exact.hpp"
#include "bellrec/ring.hpp"
#include "bellrec/verify.hpp"
#include "oracles.hpp"

#include "doctest.h"

using namespace bellrec;

TEST_SUITE("exact")
{
    TEST_CASE("factorial")
    {
        CHECK(factorial(0) == 1);
        CHECK(factorial(5) == 120);
        CHECK(factorial(12) == Integer("479001600"));
        for (unsigned n = 0; n <= 30; ++n) {
            CHECK(factorial(n) == oracle::factorial(n));
        }
    }

    TEST_CASE("binomial")
    {
        CHECK(binomial(5, 2) == 10);
        CHECK(binomial(3, 5) == 0);
        CHECK(binomial(3, -1) == 0);
        CHECK(binomial(20, 10) == 184756);
        CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);

        const auto rows = oracle::pascal(40);
        for (long n = 0; n <= 40; ++n) {
            for (long k = 0; k <= n; ++k) {
                REQUIRE(binomial(n, k) == rows[n][k]);
            }
        }
        for (long n = 2; n <= 40; ++n) {
            for (long k = 1; k <= n - 1; ++k) {
                CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    TEST_CASE("generalized binomial")
    {
        CHECK(gen_binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
        CHECK(gen_binomial(make_rational(-7, 3), 0) == 1);
        CHECK(gen_binomial(7, 3) == 35);
        CHECK(gen_binomial(-1, 3) == -1);  // (-1)(-2)(-3)/6
        for (long n = 0; n <= 25; ++n) {
            for (long k = 0; k <= n + 2; ++k) {
                CHECK(gen_binomial(n, static_cast<unsigned long>(k)) == Rational(binomial(n, k)));
            }
        }
    }

    TEST_CASE("rational parsing and printing")
    {
        CHECK(parse_rational("6/4") == make_rational(3, 2));
        CHECK(parse_rational("-3") == -3);
        CHECK(parse_rational("+3/-1") == -3);
        CHECK(to_string(make_rational(6, -4)) == "-3/2");
        CHECK(to_string(Rational(0)) == "0");
        CHECK(make_rational(0, 5).get_den() == 1);
        CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
        CHECK_THROWS_AS(to_integer(make_rational(1, 2)), IntegralityError);
    }

    TEST_CASE("rational arithmetic is exact")
    {
        Rng rng(11);
        for (int i = 0; i < 200; ++i) {
            const Rational a = random_rational(rng, -1000, 1000, 997);
            const Rational b = random_rational(rng, -1000, 1000, 997);
            CHECK(Rational(a + b - b) == a);
            const Rational s = a + b;
            CHECK(s.get_den() > 0);
            Rational copy = s;
            copy.canonicalize();
            CHECK(copy == s);
        }
    }

    TEST_CASE("polynomials")
    {
        const Poly x = Poly::x();
        const Poly p = x * x - Poly(1);
        CHECK(p.degree() == 2);
        CHECK(p.eval(3) == 8);
        CHECK(poly_eval(p, make_rational(1, 2)) == make_rational(-3, 4));
        CHECK((p - p).is_zero());
        CHECK((p - p).degree() == -1);
        CHECK(to_string(p) == "-1,0,1");
        CHECK(to_string(Poly()) == "0");
        CHECK(Poly{Rational(1), Rational(0), Rational(0)}.degree() == 0);
        CHECK((p * make_rational(1, 2))[2] == make_rational(1, 2));
        CHECK((p / Rational(2))[0] == make_rational(-1, 2));

        Rng rng(5);
        auto random_poly = [&] {
            return Poly(random_rationals(rng, random_size(rng, 0, 9), -9, 9, 4));
        };
        for (int i = 0; i < 50; ++i) {
            const Poly a = random_poly();
            const Poly b = random_poly();
            const Poly c = random_poly();
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            const Rational at = random_rational(rng, -5, 5, 3);
            CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
        }
    }
}

TEST_SUITE("ring")
{
    TEST_CASE("ring elements keep their domain")
    {
        const RingElem two = Integer(2);
        const RingElem half = make_rational(1, 2);
        CHECK(domain_of(two) == Domain::integer);
        CHECK(domain_of(half) == Domain::rational);
        CHECK(to_string(two * two) == "4");
        CHECK_THROWS_AS(two + half, DomainMismatch);

        const RingElem promoted = promote(two, Domain::rational);
        CHECK(to_string(promoted + half) == "5/2");
        const RingElem as_poly = promote(half, Domain::polynomial);
        CHECK(std::get<Poly>(as_poly) == Poly(make_rational(1, 2)));
        CHECK_THROWS_AS(promote(half, Domain::integer), std::invalid_argument);
    }

    TEST_CASE("parsing chooses the narrowest domain")
    {
        CHECK(domain_of(parse_ring_elem("-12")) == Domain::integer);
        CHECK(domain_of(parse_ring_elem("1/3")) == Domain::rational);
        const std::vector<RingElem> mixed{parse_ring_elem("1"), parse_ring_elem("1/2")};
        CHECK(common_domain(mixed) == Domain::rational);
        CHECK_THROWS_AS(as_vector<Integer>(mixed), DomainMismatch);
    }

    TEST_CASE("units")
    {
        CHECK(ring_traits<Integer>::inverse(-1).value() == -1);
        CHECK_FALSE(ring_traits<Integer>::inverse(2).has_value());
        CHECK(ring_traits<Rational>::inverse(make_rational(2, 3)).value() == make_rational(3, 2));
        CHECK_FALSE(ring_traits<Poly>::inverse(Poly::x()).has_value());
        CHECK(ring_traits<Poly>::inverse(Poly(4)).value() == Poly(make_rational(1, 4)));
        CHECK(ring_pow(Integer(3), 0) == 1);
        CHECK(ring_pow(Integer(-2), 7) == -128);
    }
}
