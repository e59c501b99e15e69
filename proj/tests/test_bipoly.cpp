#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpoly/bipoly.hpp"
#include "dpoly/oracles.hpp"

#include "testutil.hpp"

#include <random>
#include <stdexcept>

using namespace dpoly;

TEST_CASE("term storage is canonical") {
    BiPoly p = BiPoly::monomial(Rational(3), 1, 0) + BiPoly::monomial(Rational(-3), 1, 0);
    CHECK(p.is_zero());
    CHECK(p == BiPoly(0));
    CHECK(p.terms().empty()); // cancelled terms are dropped, not stored as 0

    BiPoly q = BiPoly::x() * BiPoly::lambda();
    CHECK(q.coefficient(1, 1) == Rational(1));
    CHECK(q.coefficient(1, 0) == Rational(0));
    CHECK(q.degree_x() == 1);
    CHECK(q.degree_lambda() == 1);
}

TEST_CASE("arithmetic basics") {
    BiPoly x = BiPoly::x();
    BiPoly lam = BiPoly::lambda();

    CHECK((x + lam) * (x - lam) == x * x - lam * lam);
    CHECK((x + BiPoly(1)).pow(2) == x * x + Rational(2) * x + BiPoly(1));
    CHECK(BiPoly(7).pow(0) == BiPoly(1));
    CHECK((x * lam).pow(3) == BiPoly::monomial(Rational(1), 3, 3));

    // scalar absorption
    CHECK(x * Rational(0) == BiPoly(0));
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(77001);
    for (int i = 0; i < 120; ++i) {
        BiPoly a = random_bipoly(rng, 8, 8);
        BiPoly b = random_bipoly(rng, 8, 8);
        BiPoly c = random_bipoly(rng, 8, 8);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitution and evaluation") {
    // p = 2x^2 - 2x + 1 - λ
    BiPoly p = BiPoly::monomial(Rational(2), 2, 0) + BiPoly::monomial(Rational(-2), 1, 0) +
               BiPoly(1) - BiPoly::lambda();

    CHECK(p.substitute_x(Rational(1)) == BiPoly(1) - BiPoly::lambda());
    CHECK(p.substitute_lambda(Rational(0)) ==
          BiPoly::monomial(Rational(2), 2, 0) + BiPoly::monomial(Rational(-2), 1, 0) + BiPoly(1));
    CHECK(p.at(Rational(1), Rational(1)) == Rational(0));
    CHECK(p.at(Rational(BigInt(1), BigInt(2)), Rational(0)) == Rational(BigInt(1), BigInt(2)));

    // partial evaluation keeps the other variable
    CHECK(p.eval(std::nullopt, Rational(3)) ==
          BiPoly::monomial(Rational(2), 2, 0) + BiPoly::monomial(Rational(-2), 1, 0) +
              BiPoly(-2));

    CHECK_THROWS_AS(p.constant_value(), std::logic_error);
    CHECK(BiPoly(0).constant_value() == Rational(0));
}

TEST_CASE("evaluation commutes with arithmetic (random)") {
    std::mt19937 rng(77002);
    for (int i = 0; i < 100; ++i) {
        BiPoly a = random_bipoly(rng, 5, 5);
        BiPoly b = random_bipoly(rng, 5, 5);
        Rational xv = random_rational(rng, 9);
        Rational lv = random_rational(rng, 9);
        CHECK((a * b).at(xv, lv) == a.at(xv, lv) * b.at(xv, lv));
        CHECK((a + b).at(xv, lv) == a.at(xv, lv) + b.at(xv, lv));
    }
}

TEST_CASE("x-power slices") {
    BiPoly p = BiPoly::monomial(Rational(3), 2, 1) + BiPoly::monomial(Rational(5), 2, 0) +
               BiPoly::monomial(Rational(-1), 0, 2);
    CHECK(p.coeff_of_x(2) == BiPoly::monomial(Rational(3), 0, 1) + BiPoly(5));
    CHECK(p.coeff_of_x(0) == BiPoly::monomial(Rational(-1), 0, 2));
    CHECK(p.coeff_of_x(1).is_zero());
}

TEST_CASE("generalized falling factorial") {
    BiPoly x = BiPoly::x();
    BiPoly one(1);
    BiPoly lam = BiPoly::lambda();

    CHECK(lambda_falling(x, 0, lam) == one);
    CHECK(lambda_falling(x, 1, lam) == x);
    CHECK(lambda_falling(x, 2, lam) == x * x - x * lam);
    CHECK(lambda_falling(one, 2, lam) == one - lam);
    CHECK(lambda_falling(one, 3, lam) == (one - lam) * (one - Rational(2) * lam));

    // step 0 collapses to plain powers
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(lambda_falling(x, n, BiPoly(0)) == BiPoly::monomial(Rational(1), n, 0));
        CHECK(lambda_falling(x, n, lam).substitute_lambda(Rational(0)) ==
              BiPoly::monomial(Rational(1), n, 0));
    }

    // step 1 matches the independently expanded product
    for (unsigned n = 0; n <= 16; ++n) {
        CHECK(lambda_falling(x, n, one) == oracles::expand_falling(n));
        CHECK(lambda_falling(x, n, lam).substitute_lambda(Rational(1)) ==
              oracles::expand_falling(n));
    }
}

TEST_CASE("canonical rendering") {
    CHECK(BiPoly(0).str() == "0");
    CHECK(BiPoly(Rational(BigInt(-1), BigInt(2))).str() == "-1/2");
    CHECK(BiPoly::x().str() == "x");
    CHECK((-BiPoly::lambda()).str() == "-λ");

    BiPoly p = BiPoly(1) - BiPoly::lambda() + BiPoly::monomial(Rational(2), 2, 0) -
               BiPoly::monomial(Rational(2), 1, 0);
    CHECK(p.str() == "1 - λ - 2*x + 2*x^2");

    BiPoly q = BiPoly::monomial(Rational(BigInt(1), BigInt(3)), 1, 2);
    CHECK(q.str() == "1/3*x*λ^2");

    BiPoly r = BiPoly::monomial(Rational(1), 2, 0) - BiPoly::monomial(Rational(1), 0, 1);
    CHECK(r.str() == "-λ + x^2"); // lexicographic term order: λ-only before x terms
}
