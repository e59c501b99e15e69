#pragma once

#include "dpoly/bipoly.hpp"

#include <vector>

namespace dpoly {

inline constexpr unsigned kDefaultSeriesOrder = 16;

// Truncated exponential generating function: coefficients a_0..a_N of
// sum a_n t^n / n!, with a_n in Q[x, λ]. Truncation order N is fixed per
// instance; binary operations truncate to the smaller order.
class EgfSeries {
public:
    explicit EgfSeries(unsigned order) : coeffs_(order + 1) {}

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    // Throws OrderExceeded past the truncation order.
    const BiPoly& coeff(unsigned n) const;
    BiPoly& at(unsigned n);

    // --- stock series -----------------------------------------------------
    static EgfSeries constant(const BiPoly& value, unsigned order);
    static EgfSeries unit(unsigned order) { return constant(BiPoly(1), order); }
    static EgfSeries t_term(unsigned order);        // the series "t"
    static EgfSeries exp_t(unsigned order, int sign = +1); // e^{±t}: a_n = (±1)^n
    static EgfSeries exp_ct(const BiPoly& c, unsigned order); // e^{ct}: a_n = c^n
    // 1/(1 - c t) laid out directly as a_n = n! * c^n, rather than through
    // generic inversion (the closed form is exact at every order).
    static EgfSeries geometric(const BiPoly& c, unsigned order);
    static EgfSeries log1p(unsigned order);         // log(1+t): a_n = (-1)^{n-1} (n-1)!

    EgfSeries operator-() const;
    EgfSeries& operator+=(const EgfSeries& rhs);
    EgfSeries& operator-=(const EgfSeries& rhs);
    friend EgfSeries operator+(EgfSeries lhs, const EgfSeries& rhs) { return lhs += rhs; }
    friend EgfSeries operator-(EgfSeries lhs, const EgfSeries& rhs) { return lhs -= rhs; }

    EgfSeries& scale(const BiPoly& factor); // multiply every coefficient

    bool operator==(const EgfSeries& rhs) const = default;

private:
    std::vector<BiPoly> coeffs_;
};

// Product of EGFs: c_n = sum_k C(n,k) a_k b_{n-k}.
EgfSeries series_mul(const EgfSeries& lhs, const EgfSeries& rhs);
inline EgfSeries operator*(const EgfSeries& lhs, const EgfSeries& rhs) {
    return series_mul(lhs, rhs);
}

// Multiplicative inverse. Requires a_0 to be a pure nonzero constant:
// throws ZeroConstantTerm when the constant part is zero and
// NonConstantLeadingTerm when a_0 depends on x or λ.
EgfSeries series_invert(const EgfSeries& s);

// Composition outer(inner). Requires inner a_0 == 0 (NonzeroInnerConstant).
EgfSeries series_compose(const EgfSeries& outer, const EgfSeries& inner);

// exp of a series with a_0 == 0 (NonzeroConstantTerm otherwise).
EgfSeries series_exp(const EgfSeries& s);

// log of a series with a_0 == 1 (ConstantTermNotOne otherwise).
EgfSeries series_log(const EgfSeries& s);

// Divide by t with EGF reweighting: b_n = a_{n+1} / (n+1). Requires
// a_0 == 0; the result has order one lower than the input.
EgfSeries divide_by_t(const EgfSeries& s);

// (1 + sign·λt)^{c/λ} as a_m = sign^m · c(c-λ)(c-2λ)···(c-(m-1)λ). This
// product form is the primary construction; the exp∘log route exists only
// as a cross-check in tests, since 1/λ never appears in the coefficients.
EgfSeries binomial_lambda_series(const BiPoly& c, int sign, unsigned order);

// Coefficient accessor mirroring EgfSeries::coeff (OrderExceeded past N).
inline const BiPoly& egf_coeff(const EgfSeries& s, unsigned n) { return s.coeff(n); }

} // namespace dpoly
