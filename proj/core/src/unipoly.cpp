#include "dpoly/unipoly.hpp"

#include <stdexcept>

namespace dpoly {

UniPoly::UniPoly(Rational constant) {
    if (!constant.is_zero()) {
        coeffs_.push_back(std::move(constant));
    }
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::t() {
    return UniPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational UniPoly::coefficient(unsigned i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> product(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            product[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(product);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) {
        throw std::domain_error("UniPoly: division by zero polynomial");
    }
    UniPoly remainder = *this;
    if (remainder.degree() < divisor.degree()) {
        return {UniPoly(), remainder};
    }
    std::vector<Rational> quotient(remainder.degree() - divisor.degree() + 1);
    Rational lead_inv = divisor.leading().reciprocal();
    while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
        unsigned shift = static_cast<unsigned>(remainder.degree() - divisor.degree());
        Rational factor = remainder.leading() * lead_inv;
        quotient[shift] = factor;
        // remainder -= factor * t^shift * divisor
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) {
            remainder.coeffs_[i + shift] -= factor * divisor.coeffs_[i];
        }
        remainder.trim();
    }
    return {UniPoly(std::move(quotient)), remainder};
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
    }
    return UniPoly(std::move(d));
}

Rational UniPoly::eval(const Rational& point) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * point + *it;
    }
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    UniPoly m = *this;
    m *= leading().reciprocal();
    return m;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    // Keep remainders monic to control coefficient growth.
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::string UniPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        Rational coeff = coeffs_[i];
        if (first) {
            if (coeff.sign() < 0) {
                out += "-";
                coeff = -coeff;
            }
        } else {
            out += coeff.sign() < 0 ? " - " : " + ";
            if (coeff.sign() < 0) coeff = -coeff;
        }
        std::string var;
        if (i > 0) {
            var = "t";
            if (i > 1) var += "^" + std::to_string(i);
        }
        if (var.empty()) {
            out += coeff.str();
        } else if (coeff == Rational(1)) {
            out += var;
        } else {
            out += coeff.str() + "*" + var;
        }
        first = false;
    }
    return out.empty() ? "0" : out;
}

} // namespace dpoly
