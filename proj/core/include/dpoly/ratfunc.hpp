#pragma once

#include "dpoly/unipoly.hpp"

#include <string>

namespace dpoly {

// Rational function in t over Rational, kept in reduced canonical form:
//   - denominator is monic and nonzero
//   - gcd(numerator, denominator) == 1
//   - zero is 0/1
// Canonical form makes equality structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(UniPoly numerator);
    RatFunc(long long constant) : RatFunc(UniPoly(constant)) {}
    RatFunc(UniPoly numerator, UniPoly denominator);

    const UniPoly& numerator() const { return num_; }
    const UniPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& rhs);
    RatFunc& operator-=(const RatFunc& rhs);
    RatFunc& operator*=(const RatFunc& rhs);

    friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
    friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
    friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }

    RatFunc derivative() const; // quotient rule, then reduce

    // Throws PoleAtEvaluationPoint when the (reduced) denominator vanishes.
    Rational eval(const Rational& point) const;

    bool operator==(const RatFunc& rhs) const = default;

    std::string str() const; // "num" or "(num)/(den)"

private:
    void normalize();

    UniPoly num_;
    UniPoly den_;
};

} // namespace dpoly
