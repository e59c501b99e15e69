#pragma once

#include "dpoly/bipoly.hpp"
#include "dpoly/ratfunc.hpp"

namespace dpoly::abel {

// A function of the shape rat(t) * e^{-t}. This family is closed under the
// operator θ = t·d/dt, which is all the regularized summation needs.
struct ExpRational {
    RatFunc rat;

    bool operator==(const ExpRational&) const = default;
};

// e^{-t} / (1 - t): the generating function whose θ-orbit, evaluated at
// t = -1, produces the regularized values of the divergent alternating
// sums sum_m (-1)^m d_m m^k / m! (each equal to a rational multiple of e).
ExpRational derangement_egf();

// θ applied k times: θ(R e^{-t}) = t (R' - R) e^{-t}.
ExpRational theta_apply(const ExpRational& f, unsigned k);

// rat(-1), i.e. the value of f at t = -1 with the factor e^{+1} split off.
// Throws PoleAtEvaluationPoint if the reduced denominator vanishes there.
Rational eval_at_minus_one(const ExpRational& f);

// A regularized sum, recorded as the exact coefficient of e:
// value = e_coefficient * e. The coefficient is a polynomial in λ.
struct RegularizedValue {
    BiPoly e_coefficient;

    bool operator==(const RegularizedValue&) const = default;
};

// Regularized value of (1/e) * sum_m (-1)^m d_m p(m) / m!, where p is a
// polynomial in the summation index with λ-polynomial coefficients (the
// index variable is x). Expands p in the monomial basis and evaluates each
// θ^k orbit of derangement_egf() at t = -1.
RegularizedValue regularized_derangement_sum(const BiPoly& p);

} // namespace dpoly::abel
