#pragma once

#include "dpoly/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace dpoly {

// Exponent pair of one monomial. The comparison gives the canonical
// lexicographic term order (x-degree first, then λ-degree).
struct ExponentPair {
    unsigned deg_x = 0;
    unsigned deg_lambda = 0;

    friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;
};

// Sparse bivariate polynomial in x and λ over Rational.
//
// Invariants:
//   - no zero coefficient is ever stored
//   - terms are kept in lexicographic (deg_x, deg_lambda) order, which makes
//     equality structural and iteration/printing deterministic
class BiPoly {
public:
    using TermMap = std::map<ExponentPair, Rational>;

    BiPoly() = default;
    BiPoly(Rational constant);
    BiPoly(long long constant) : BiPoly(Rational(constant)) {}

    static BiPoly x();
    static BiPoly lambda();
    static BiPoly monomial(Rational coeff, unsigned deg_x, unsigned deg_lambda);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    // Value of a constant polynomial (zero polynomial gives 0).
    // Throws std::logic_error if the polynomial has x/λ terms.
    Rational constant_value() const;

    Rational coefficient(unsigned deg_x, unsigned deg_lambda) const;

    // All terms of x-degree deg_x, with the x factor stripped: a polynomial
    // in λ alone.
    BiPoly coeff_of_x(unsigned deg_x) const;

    unsigned degree_x() const;
    unsigned degree_lambda() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs);
    BiPoly& operator*=(const Rational& scalar);

    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
    friend BiPoly operator*(BiPoly lhs, const BiPoly& rhs) { return lhs *= rhs; }
    friend BiPoly operator*(BiPoly lhs, const Rational& scalar) { return lhs *= scalar; }
    friend BiPoly operator*(const Rational& scalar, BiPoly rhs) { return rhs *= scalar; }

    BiPoly pow(unsigned e) const;

    // Partial or full evaluation. Substituting one variable leaves a
    // polynomial in the other; substituting both leaves a constant.
    BiPoly substitute_x(const Rational& value) const;
    BiPoly substitute_lambda(const Rational& value) const;
    BiPoly eval(const std::optional<Rational>& x_value,
                const std::optional<Rational>& lambda_value) const;
    Rational at(const Rational& x_value, const Rational& lambda_value) const;

    bool operator==(const BiPoly& rhs) const = default;

    // Canonical rendering, e.g. "1 - 2*x + 2*x^2" or "1 - λ". Terms appear
    // in map (lexicographic) order; unit coefficients on nontrivial
    // monomials are folded into the sign.
    std::string str() const;

private:
    void add_term(const ExponentPair& exponents, const Rational& coeff);

    TermMap terms_;
};

// Generalized falling factorial with polynomial argument and step:
//   arg * (arg - step) * (arg - 2*step) * ... * (arg - (n-1)*step)
// n = 0 gives 1. Step λ yields the λ-falling factorial; step 1 the ordinary
// falling factorial; step 0 the plain power.
BiPoly lambda_falling(const BiPoly& arg, unsigned n, const BiPoly& step);

} // namespace dpoly
