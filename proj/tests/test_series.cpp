#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpoly/egf.hpp"
#include "dpoly/errors.hpp"

#include "testutil.hpp"

#include <random>

using namespace dpoly;

namespace {

EgfSeries random_series(std::mt19937& rng, unsigned order, unsigned max_deg = 1) {
    EgfSeries s(order);
    for (unsigned n = 0; n <= order; ++n) {
        s.at(n) = random_bipoly(rng, max_deg, max_deg, 3);
    }
    return s;
}

} // namespace

TEST_CASE("stock series coefficients") {
    EgfSeries e = EgfSeries::exp_t(8);
    EgfSeries em = EgfSeries::exp_t(8, -1);
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(e.coeff(n) == BiPoly(1));
        CHECK(em.coeff(n) == BiPoly(n % 2 == 0 ? 1 : -1));
    }

    // 1/(1 - xt) carries a_n = n! x^n
    EgfSeries g = EgfSeries::geometric(BiPoly::x(), 6);
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(g.coeff(n) == BiPoly::monomial(rat_factorial(n), n, 0));
    }

    // log(1+t) carries a_n = (-1)^{n-1} (n-1)!
    EgfSeries l = EgfSeries::log1p(6);
    CHECK(l.coeff(0).is_zero());
    CHECK(l.coeff(1) == BiPoly(1));
    CHECK(l.coeff(2) == BiPoly(-1));
    CHECK(l.coeff(3) == BiPoly(2));
    CHECK(l.coeff(4) == BiPoly(-6));

    CHECK(EgfSeries::exp_ct(BiPoly::x(), 4).coeff(3) == BiPoly::monomial(Rational(1), 3, 0));
}

TEST_CASE("product follows the binomial convolution") {
    // t * e^t has coefficients a_n = n
    EgfSeries te = EgfSeries::t_term(8) * EgfSeries::exp_t(8);
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(te.coeff(n) == BiPoly(static_cast<long long>(n)));
    }

    // e^t * e^{-t} = 1
    CHECK(EgfSeries::exp_t(10) * EgfSeries::exp_t(10, -1) == EgfSeries::unit(10));

    // e^{xt} * e^{t} = e^{(x+1)t}
    BiPoly xp1 = BiPoly::x() + BiPoly(1);
    CHECK(EgfSeries::exp_ct(BiPoly::x(), 8) * EgfSeries::exp_t(8) ==
          EgfSeries::exp_ct(xp1, 8));
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(99001);
    for (int i = 0; i < 25; ++i) {
        EgfSeries a = random_series(rng, 8);
        EgfSeries b = random_series(rng, 8);
        EgfSeries c = random_series(rng, 8);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("inversion") {
    // 1/(1-t) inverts to 1 - t
    EgfSeries inv = series_invert(EgfSeries::geometric(BiPoly(1), 8));
    CHECK(inv.coeff(0) == BiPoly(1));
    CHECK(inv.coeff(1) == BiPoly(-1));
    for (unsigned n = 2; n <= 8; ++n) CHECK(inv.coeff(n).is_zero());

    CHECK(series_invert(EgfSeries::exp_t(8)) == EgfSeries::exp_t(8, -1));

    std::mt19937 rng(99002);
    for (int i = 0; i < 15; ++i) {
        EgfSeries s = random_series(rng, 8);
        s.at(0) = BiPoly(Rational(1 + (i % 5)));
        CHECK(s * series_invert(s) == EgfSeries::unit(8));
    }

    CHECK_THROWS_AS(series_invert(EgfSeries::t_term(4)), ZeroConstantTerm);
    EgfSeries bad = EgfSeries::constant(BiPoly(1) + BiPoly::x(), 4);
    CHECK_THROWS_AS(series_invert(bad), NonConstantLeadingTerm);
}

TEST_CASE("exp and log invert each other") {
    CHECK(series_exp(EgfSeries::t_term(10)) == EgfSeries::exp_t(10));
    CHECK(series_log(EgfSeries::exp_t(10)) == EgfSeries::t_term(10));

    std::mt19937 rng(99003);
    for (int i = 0; i < 12; ++i) {
        EgfSeries s = random_series(rng, 8);
        s.at(0) = BiPoly(0);
        CHECK(series_log(series_exp(s)) == s);

        EgfSeries u = random_series(rng, 8);
        u.at(0) = BiPoly(1);
        CHECK(series_exp(series_log(u)) == u);
    }

    // exp turns sums into products
    std::mt19937 rng2(99004);
    for (int i = 0; i < 8; ++i) {
        EgfSeries a = random_series(rng2, 7);
        EgfSeries b = random_series(rng2, 7);
        a.at(0) = BiPoly(0);
        b.at(0) = BiPoly(0);
        CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
    }

    CHECK_THROWS_AS(series_exp(EgfSeries::unit(4)), NonzeroConstantTerm);
    CHECK_THROWS_AS(series_log(EgfSeries::t_term(4)), ConstantTermNotOne);
}

TEST_CASE("composition") {
    // exp(log(1+t)) = 1 + t
    EgfSeries recon = series_compose(EgfSeries::exp_t(10), EgfSeries::log1p(10));
    CHECK(recon.coeff(0) == BiPoly(1));
    CHECK(recon.coeff(1) == BiPoly(1));
    for (unsigned n = 2; n <= 10; ++n) CHECK(recon.coeff(n).is_zero());

    // 1/(1 - x(e^t - 1)) composed with log(1+t) collapses to 1/(1 - xt)
    unsigned N = 8;
    EgfSeries em1 = EgfSeries::exp_t(N) - EgfSeries::unit(N);
    EgfSeries sur = series_compose(EgfSeries::geometric(BiPoly::x(), N), em1);
    CHECK(series_compose(sur, EgfSeries::log1p(N)) == EgfSeries::geometric(BiPoly::x(), N));

    // associativity on random data
    std::mt19937 rng(99005);
    for (int i = 0; i < 5; ++i) {
        EgfSeries f = random_series(rng, 6);
        EgfSeries g = random_series(rng, 6);
        EgfSeries h = random_series(rng, 6);
        g.at(0) = BiPoly(0);
        h.at(0) = BiPoly(0);
        CHECK(series_compose(series_compose(f, g), h) ==
              series_compose(f, series_compose(g, h)));
    }

    CHECK_THROWS_AS(series_compose(EgfSeries::exp_t(4), EgfSeries::exp_t(4)),
                    NonzeroInnerConstant);
}

TEST_CASE("division by t") {
    // (t e^t)/t = e^t, with the order dropping by one
    EgfSeries te = EgfSeries::t_term(9) * EgfSeries::exp_t(9);
    EgfSeries q = divide_by_t(te);
    CHECK(q.order() == 8);
    CHECK(q == EgfSeries::exp_t(8));

    CHECK_THROWS_AS(divide_by_t(EgfSeries::exp_t(4)), NonzeroConstantTerm);
    CHECK_THROWS_AS(divide_by_t(EgfSeries(0)), OrderExceeded);
}

TEST_CASE("coefficient access is bounds-checked") {
    EgfSeries s(4);
    CHECK_NOTHROW(s.coeff(4));
    CHECK_THROWS_AS(s.coeff(5), OrderExceeded);
    CHECK_THROWS_AS(s.at(5), OrderExceeded);
}

TEST_CASE("binomial power series in lambda") {
    // (1 + λt)^{1/λ}: a_m = 1(1-λ)(1-2λ)···
    EgfSeries b = binomial_lambda_series(BiPoly(1), +1, 12);
    BiPoly one(1);
    BiPoly lam = BiPoly::lambda();
    CHECK(b.coeff(0) == one);
    CHECK(b.coeff(1) == one);
    CHECK(b.coeff(2) == one - lam);
    CHECK(b.coeff(3) == (one - lam) * (one - Rational(2) * lam));

    // sign -1 alternates: a_m = (-1)^m (1)(1-λ)···
    EgfSeries bm = binomial_lambda_series(BiPoly(1), -1, 12);
    for (unsigned m = 0; m <= 12; ++m) {
        BiPoly expected = lambda_falling(one, m, lam);
        if (m % 2 == 1) expected = -expected;
        CHECK(bm.coeff(m) == expected);
    }

    // λ := 0 recovers e^{ct}
    EgfSeries bx = binomial_lambda_series(BiPoly::x(), +1, 10);
    for (unsigned m = 0; m <= 10; ++m) {
        CHECK(bx.coeff(m).substitute_lambda(Rational(0)) ==
              BiPoly::monomial(Rational(1), m, 0));
        CHECK(b.coeff(m).substitute_lambda(Rational(0)) == one);
    }

    // λ := 1 collapses (1+λt)^{1/λ} to the polynomial 1 + t
    for (unsigned m = 2; m <= 12; ++m) {
        CHECK(b.coeff(m).substitute_lambda(Rational(1)).is_zero());
    }

    // cross-check against the exp∘log construction: for sign +1 the log
    // argument is (1/λ)·log(1+λt), whose coefficients carry λ^{m-1}
    EgfSeries log_arg(12);
    for (unsigned m = 1; m <= 12; ++m) {
        Rational c = rat_factorial(m - 1);
        log_arg.at(m) = BiPoly::monomial(m % 2 == 0 ? -c : c, 0, m - 1);
    }
    CHECK(series_exp(log_arg) == b);
}

TEST_CASE("series scaled by a polynomial factor") {
    EgfSeries s = EgfSeries::exp_t(5);
    s.scale(BiPoly::x());
    for (unsigned n = 0; n <= 5; ++n) {
        CHECK(s.coeff(n) == BiPoly::x());
    }
}

TEST_CASE("multiplying by 1 - xt undoes the geometric factor") {
    // the product (1-λt)^{1/λ} · 1/(1-xt), times (1-xt) again, returns the
    // binomial series — exercises the full mul pipeline on bivariate data
    unsigned N = 12;
    EgfSeries d = binomial_lambda_series(BiPoly(1), -1, N) *
                  EgfSeries::geometric(BiPoly::x(), N);
    EgfSeries one_minus_xt(N);
    one_minus_xt.at(0) = BiPoly(1);
    one_minus_xt.at(1) = -BiPoly::x();
    CHECK(one_minus_xt * d == binomial_lambda_series(BiPoly(1), -1, N));
}
