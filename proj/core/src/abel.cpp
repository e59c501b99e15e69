#include "dpoly/abel.hpp"

namespace dpoly::abel {

ExpRational derangement_egf() {
    // 1 / (1 - t), with the e^{-t} factor implicit in the type.
    UniPoly denominator(std::vector<Rational>{Rational(1), Rational(-1)});
    return {RatFunc(UniPoly(Rational(1)), std::move(denominator))};
}

ExpRational theta_apply(const ExpRational& f, unsigned k) {
    ExpRational result = f;
    RatFunc t{UniPoly::t()};
    for (unsigned i = 0; i < k; ++i) {
        // t * d/dt (R e^{-t}) = t (R' - R) e^{-t}
        result.rat = t * (result.rat.derivative() - result.rat);
    }
    return result;
}

Rational eval_at_minus_one(const ExpRational& f) {
    return f.rat.eval(Rational(-1));
}

RegularizedValue regularized_derangement_sum(const BiPoly& p) {
    BiPoly total;
    ExpRational orbit = derangement_egf();
    unsigned degree = p.degree_x();
    for (unsigned k = 0; k <= degree; ++k) {
        BiPoly weight = p.coeff_of_x(k); // λ-polynomial coefficient of the k-th power
        if (!weight.is_zero()) {
            total += weight * BiPoly(eval_at_minus_one(orbit));
        }
        if (k < degree) {
            orbit = theta_apply(orbit, 1);
        }
    }
    return {total};
}

} // namespace dpoly::abel
