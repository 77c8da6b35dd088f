#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "puiseux/errors.hpp"
#include "puiseux/quadext.hpp"
#include "puiseux/rational.hpp"

using namespace puiseux;

TEST_CASE("rational normalization") {
    Rational r(Integer(6), Integer(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational::parse("6/4") == Rational(Integer(3), Integer(2)));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK((Rational(Integer(1), Integer(3)) + Rational(Integer(2), Integer(3))).str() == "1");
    CHECK((Rational(Integer(1), Integer(2)) * Rational(Integer(2), Integer(3))).str() == "1/3");
    CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroPolynomial);
}

TEST_CASE("rational arithmetic keeps gcd one") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-50, 50), dd(1, 30);
    for (int i = 0; i < 500; ++i) {
        Rational a(Integer(d(rng)), Integer(dd(rng)));
        Rational b(Integer(d(rng)), Integer(dd(rng)));
        for (Rational v : {a + b, a - b, a * b}) {
            CHECK(gcd(abs(v.num()), v.den()) == 1);
            CHECK(v.den() > 0);
        }
    }
}

TEST_CASE("quad_sign exact cases") {
    CHECK(QuadExt(0, 0, 2).sign() == 0);
    CHECK(QuadExt(-1, 1, 2).sign() == 1);  // sqrt(2) > 1
    CHECK(QuadExt(3, -2, 2).sign() == 1);  // 9 > 8
    CHECK(QuadExt(-3, 2, 2).sign() == -1);
    CHECK(QuadExt(1, -1, 2).sign() == -1);  // 1 < sqrt(2)
    CHECK(QuadExt(2, -1, 2).sign() == 1);   // 4 > 2
}

TEST_CASE("quad arithmetic") {
    QuadExt a(1, 1, 2), b(-1, -1, 2);
    CHECK((a + b).is_zero());
    QuadExt c(1, 1, 2), conj(1, -1, 2);
    CHECK((c * conj) == QuadExt(Rational(-1)));
    QuadExt half(Rational(-1), Rational(Integer(1), Integer(2)), 2);
    CHECK((half * QuadExt(Rational(2))) == QuadExt(Rational(-2), Rational(1), 2));
    CHECK_THROWS_AS(QuadExt(1, 1, 2) + QuadExt(1, 1, 3), MismatchedRadicand);
    CHECK_THROWS_AS(QuadExt(1, 1, 4), MismatchedRadicand);  // not square-free
}

TEST_CASE("square is nonnegative") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-20, 20), dd(1, 9);
    for (int i = 0; i < 300; ++i) {
        QuadExt u(Rational(Integer(d(rng)), Integer(dd(rng))),
                  Rational(Integer(d(rng)), Integer(dd(rng))), 2);
        int s = (u * u).sign();
        CHECK(s >= 0);
        CHECK((s == 0) == u.is_zero());
    }
}

TEST_CASE("quad_sign agrees with interval arithmetic away from zero") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> d(-100, 100), dd(1, 40);
    int checked = 0;
    for (int i = 0; i < 5000 && checked < 1000; ++i) {
        Rational a(Integer(d(rng)), Integer(dd(rng)));
        Rational b(Integer(d(rng)), Integer(dd(rng)));
        QuadExt u(a, b, 2);
        double approx = a.to_double() + b.to_double() * std::sqrt(2.0);
        double slack = 1e-9 * (std::abs(a.to_double()) + std::abs(b.to_double()) + 1.0);
        if (std::abs(approx) <= slack) continue;  // interval may straddle zero
        ++checked;
        CHECK(u.sign() == (approx > 0 ? 1 : -1));
    }
    CHECK(checked >= 1000);
}

TEST_CASE("textual forms") {
    CHECK(QuadExt(Rational(-1), Rational(Integer(1), Integer(2)), 2).str() == "-1+1/2*sqrt(2)");
    CHECK(QuadExt(Rational(0), Rational(-1), 2).str() == "-1*sqrt(2)");
    CHECK(QuadExt(Rational(Integer(3), Integer(4))).str() == "3/4");
}
