#include "dpoly/ratfunc.hpp"

#include "dpoly/errors.hpp"

#include <stdexcept>
#include <utility>

namespace dpoly {

RatFunc::RatFunc(UniPoly numerator) : num_(std::move(numerator)), den_(Rational(1)) {}

RatFunc::RatFunc(UniPoly numerator, UniPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) {
        throw std::domain_error("RatFunc: zero denominator");
    }
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.leading();
    if (!(lead == Rational(1))) {
        Rational inv = lead.reciprocal();
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

RatFunc RatFunc::derivative() const {
    // (n/d)' = (n'd - nd') / d^2; normalize() strips any common factor.
    UniPoly numerator = num_.derivative() * den_ - num_ * den_.derivative();
    return RatFunc(std::move(numerator), den_ * den_);
}

Rational RatFunc::eval(const Rational& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) {
        throw PoleAtEvaluationPoint("RatFunc: denominator vanishes at evaluation point");
    }
    return num_.eval(point) / d;
}

std::string RatFunc::str() const {
    if (den_ == UniPoly(Rational(1))) {
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace dpoly
