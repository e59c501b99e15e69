#include "dpoly/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace dpoly {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw std::domain_error("Rational: zero denominator");
    }
    reduce();
}

void Rational::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    reduce();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    // Denominators are positive, so cross-multiplication preserves order.
    BigInt lhs_scaled = num_ * rhs.den_;
    BigInt rhs_scaled = rhs.num_ * den_;
    if (lhs_scaled < rhs_scaled) return std::strong_ordering::less;
    if (lhs_scaled > rhs_scaled) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("Rational: reciprocal of zero");
    }
    return Rational(den_, num_);
}

Rational Rational::abs() const {
    return num_.sign() < 0 ? -*this : *this;
}

Rational Rational::pow(unsigned e) const {
    Rational result(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

std::string Rational::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Rational Rational::from_string(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("Rational: empty string");
    }
    auto slash = text.find('/');
    auto parse_int = [](std::string_view part) {
        if (part.empty()) throw std::invalid_argument("Rational: malformed number");
        std::size_t start = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (start == part.size()) throw std::invalid_argument("Rational: malformed number");
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw std::invalid_argument("Rational: malformed number");
            }
        }
        return BigInt(std::string(part));
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1); // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

} // namespace dpoly
