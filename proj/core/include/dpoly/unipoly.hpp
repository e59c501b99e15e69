#pragma once

#include "dpoly/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dpoly {

// Dense univariate polynomial in t over Rational. Degrees stay small here
// (numerators/denominators of the regularized-sum machinery), so a dense
// coefficient vector with trailing zeros trimmed is the simplest exact
// representation.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Rational constant);
    UniPoly(long long constant) : UniPoly(Rational(constant)) {}
    explicit UniPoly(std::vector<Rational> coeffs); // coeffs[i] multiplies t^i

    static UniPoly t();

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(unsigned i) const;
    Rational leading() const; // zero polynomial gives 0

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& scalar);

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
    friend UniPoly operator*(UniPoly lhs, const Rational& scalar) { return lhs *= scalar; }
    friend UniPoly operator*(const Rational& scalar, UniPoly rhs) { return rhs *= scalar; }

    // Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    UniPoly derivative() const;
    Rational eval(const Rational& point) const;

    UniPoly monic() const; // zero polynomial stays zero

    // Monic gcd via the Euclidean algorithm; gcd(0, 0) == 0.
    static UniPoly gcd(UniPoly a, UniPoly b);

    bool operator==(const UniPoly& rhs) const = default;

    std::string str() const; // e.g. "1 - 2*t + t^2"

private:
    void trim();

    std::vector<Rational> coeffs_;
};

} // namespace dpoly
