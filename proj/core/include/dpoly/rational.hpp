#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dpoly {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar over arbitrary-precision integers.
//
// Invariants (canonical form, maintained by every operation):
//   - denominator > 0
//   - gcd(|numerator|, denominator) == 1
//   - zero is represented as 0/1
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs); // throws std::domain_error on /0

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    bool operator==(const Rational& rhs) const = default;
    std::strong_ordering operator<=>(const Rational& rhs) const;

    Rational reciprocal() const; // throws std::domain_error on zero
    Rational abs() const;

    // Exponent 0 always yields 1, including for a zero base.
    Rational pow(unsigned e) const;

    // Canonical rendering: "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    // Parses the same shapes str() produces (optional sign, optional "/q").
    static Rational from_string(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void reduce();

    BigInt num_;
    BigInt den_;
};

// Exact integer helpers used throughout the series and identity code.
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

inline Rational rat_factorial(unsigned n) { return Rational(factorial(n)); }
inline Rational rat_binomial(unsigned n, unsigned k) { return Rational(binomial(n, k)); }

} // namespace dpoly
