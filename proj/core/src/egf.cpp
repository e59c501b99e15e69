#include "dpoly/egf.hpp"

#include "dpoly/errors.hpp"

#include <algorithm>
#include <string>

namespace dpoly {

namespace {

Rational binom_rat(unsigned n, unsigned k) {
    return Rational(binomial(n, k));
}

// Truncated ordinary-coefficient product, used by composition.
std::vector<BiPoly> ordinary_mul(const std::vector<BiPoly>& a,
                                 const std::vector<BiPoly>& b,
                                 unsigned order) {
    std::vector<BiPoly> out(order + 1);
    for (unsigned i = 0; i <= order && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= order && j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

} // namespace

const BiPoly& EgfSeries::coeff(unsigned n) const {
    if (n >= coeffs_.size()) {
        throw OrderExceeded("EgfSeries: coefficient " + std::to_string(n) +
                            " beyond truncation order " + std::to_string(order()));
    }
    return coeffs_[n];
}

BiPoly& EgfSeries::at(unsigned n) {
    if (n >= coeffs_.size()) {
        throw OrderExceeded("EgfSeries: coefficient " + std::to_string(n) +
                            " beyond truncation order " + std::to_string(order()));
    }
    return coeffs_[n];
}

EgfSeries EgfSeries::constant(const BiPoly& value, unsigned order) {
    EgfSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

EgfSeries EgfSeries::t_term(unsigned order) {
    EgfSeries s(order);
    if (order >= 1) s.coeffs_[1] = BiPoly(1);
    return s;
}

EgfSeries EgfSeries::exp_t(unsigned order, int sign) {
    EgfSeries s(order);
    for (unsigned n = 0; n <= order; ++n) {
        s.coeffs_[n] = BiPoly((sign < 0 && n % 2 == 1) ? -1 : 1);
    }
    return s;
}

EgfSeries EgfSeries::exp_ct(const BiPoly& c, unsigned order) {
    EgfSeries s(order);
    BiPoly power(1);
    for (unsigned n = 0; n <= order; ++n) {
        s.coeffs_[n] = power;
        power *= c;
    }
    return s;
}

EgfSeries EgfSeries::geometric(const BiPoly& c, unsigned order) {
    EgfSeries s(order);
    BiPoly power(1);
    Rational fact(1);
    for (unsigned n = 0; n <= order; ++n) {
        s.coeffs_[n] = power * fact;
        power *= c;
        fact *= Rational(static_cast<long long>(n) + 1);
    }
    return s;
}

EgfSeries EgfSeries::log1p(unsigned order) {
    EgfSeries s(order);
    for (unsigned n = 1; n <= order; ++n) {
        Rational c = rat_factorial(n - 1);
        s.coeffs_[n] = BiPoly(n % 2 == 0 ? -c : c);
    }
    return s;
}

EgfSeries EgfSeries::operator-() const {
    EgfSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& rhs) {
    unsigned n = std::min(order(), rhs.order());
    coeffs_.resize(n + 1);
    for (unsigned i = 0; i <= n; ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

EgfSeries& EgfSeries::operator-=(const EgfSeries& rhs) {
    unsigned n = std::min(order(), rhs.order());
    coeffs_.resize(n + 1);
    for (unsigned i = 0; i <= n; ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

EgfSeries& EgfSeries::scale(const BiPoly& factor) {
    for (auto& c : coeffs_) c *= factor;
    return *this;
}

EgfSeries series_mul(const EgfSeries& lhs, const EgfSeries& rhs) {
    unsigned order = std::min(lhs.order(), rhs.order());
    EgfSeries out(order);
    for (unsigned n = 0; n <= order; ++n) {
        BiPoly acc;
        for (unsigned k = 0; k <= n; ++k) {
            const BiPoly& a = lhs.coeff(k);
            const BiPoly& b = rhs.coeff(n - k);
            if (a.is_zero() || b.is_zero()) continue;
            acc += binom_rat(n, k) * a * b;
        }
        out.at(n) = std::move(acc);
    }
    return out;
}

EgfSeries series_invert(const EgfSeries& s) {
    const BiPoly& a0 = s.coeff(0);
    Rational c0 = a0.coefficient(0, 0);
    if (c0.is_zero()) {
        throw ZeroConstantTerm("series_invert: constant term is zero");
    }
    if (!a0.is_constant()) {
        throw NonConstantLeadingTerm("series_invert: a_0 must be a pure constant");
    }
    unsigned order = s.order();
    EgfSeries out(order);
    Rational inv0 = c0.reciprocal();
    out.at(0) = BiPoly(inv0);
    // From sum_k C(n,k) a_k b_{n-k} = 0 for n >= 1.
    for (unsigned n = 1; n <= order; ++n) {
        BiPoly acc;
        for (unsigned k = 1; k <= n; ++k) {
            if (s.coeff(k).is_zero()) continue;
            acc += binom_rat(n, k) * s.coeff(k) * out.coeff(n - k);
        }
        out.at(n) = -(acc * inv0);
    }
    return out;
}

EgfSeries series_compose(const EgfSeries& outer, const EgfSeries& inner) {
    if (!inner.coeff(0).is_zero()) {
        throw NonzeroInnerConstant("series_compose: inner series must have zero constant term");
    }
    unsigned order = std::min(outer.order(), inner.order());
    // Work with ordinary coefficients: f_i = a_i / i!. The inner series has
    // no constant term, so Horner evaluation of outer at inner stays exact
    // through the truncation order.
    std::vector<BiPoly> f(order + 1), g(order + 1);
    Rational fact(1);
    for (unsigned i = 0; i <= order; ++i) {
        if (i > 0) fact *= Rational(static_cast<long long>(i));
        Rational inv = fact.reciprocal();
        f[i] = outer.coeff(i) * inv;
        g[i] = inner.coeff(i) * inv;
    }
    std::vector<BiPoly> acc(order + 1);
    acc[0] = f[order];
    for (int i = static_cast<int>(order) - 1; i >= 0; --i) {
        acc = ordinary_mul(acc, g, order);
        acc[0] += f[static_cast<unsigned>(i)];
    }
    EgfSeries out(order);
    Rational back(1);
    for (unsigned n = 0; n <= order; ++n) {
        if (n > 0) back *= Rational(static_cast<long long>(n));
        out.at(n) = acc[n] * back;
    }
    return out;
}

EgfSeries series_exp(const EgfSeries& s) {
    if (!s.coeff(0).is_zero()) {
        throw NonzeroConstantTerm("series_exp: constant term must be zero");
    }
    unsigned order = s.order();
    EgfSeries out(order);
    out.at(0) = BiPoly(1);
    // F' = s'·F gives F_{n+1} = sum_k C(n,k) s_{k+1} F_{n-k}.
    for (unsigned n = 0; n < order; ++n) {
        BiPoly acc;
        for (unsigned k = 0; k <= n; ++k) {
            if (s.coeff(k + 1).is_zero()) continue;
            acc += binom_rat(n, k) * s.coeff(k + 1) * out.coeff(n - k);
        }
        out.at(n + 1) = std::move(acc);
    }
    return out;
}

EgfSeries series_log(const EgfSeries& s) {
    if (!(s.coeff(0) == BiPoly(1))) {
        throw ConstantTermNotOne("series_log: constant term must be one");
    }
    unsigned order = s.order();
    EgfSeries out(order);
    // s' = s·L' gives L_{n+1} = s_{n+1} - sum_{k>=1} C(n,k) s_k L_{n+1-k}.
    for (unsigned n = 0; n < order; ++n) {
        BiPoly acc = s.coeff(n + 1);
        for (unsigned k = 1; k <= n; ++k) {
            if (s.coeff(k).is_zero()) continue;
            acc -= binom_rat(n, k) * s.coeff(k) * out.coeff(n + 1 - k);
        }
        out.at(n + 1) = std::move(acc);
    }
    return out;
}

EgfSeries divide_by_t(const EgfSeries& s) {
    if (!s.coeff(0).is_zero()) {
        throw NonzeroConstantTerm("divide_by_t: constant term must be zero");
    }
    if (s.order() == 0) {
        throw OrderExceeded("divide_by_t: order 0 series has no quotient coefficients");
    }
    EgfSeries out(s.order() - 1);
    for (unsigned n = 0; n < s.order(); ++n) {
        out.at(n) = s.coeff(n + 1) * Rational(1, static_cast<long long>(n) + 1);
    }
    return out;
}

EgfSeries binomial_lambda_series(const BiPoly& c, int sign, unsigned order) {
    EgfSeries out(order);
    BiPoly lambda = BiPoly::lambda();
    BiPoly product(1);
    BiPoly factor = c;
    for (unsigned m = 0; m <= order; ++m) {
        out.at(m) = (sign < 0 && m % 2 == 1) ? -product : product;
        product *= factor;
        factor -= lambda;
    }
    return out;
}

} // namespace dpoly
