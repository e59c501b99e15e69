#include "dpoly/bipoly.hpp"

#include <stdexcept>
#include <utility>

namespace dpoly {

BiPoly::BiPoly(Rational constant) {
    if (!constant.is_zero()) {
        terms_.emplace(ExponentPair{0, 0}, std::move(constant));
    }
}

BiPoly BiPoly::x() {
    return monomial(Rational(1), 1, 0);
}

BiPoly BiPoly::lambda() {
    return monomial(Rational(1), 0, 1);
}

BiPoly BiPoly::monomial(Rational coeff, unsigned deg_x, unsigned deg_lambda) {
    BiPoly p;
    if (!coeff.is_zero()) {
        p.terms_.emplace(ExponentPair{deg_x, deg_lambda}, std::move(coeff));
    }
    return p;
}

bool BiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == ExponentPair{0, 0};
}

Rational BiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) {
        throw std::logic_error("BiPoly: constant_value on non-constant polynomial");
    }
    return terms_.begin()->second;
}

Rational BiPoly::coefficient(unsigned deg_x, unsigned deg_lambda) const {
    auto it = terms_.find(ExponentPair{deg_x, deg_lambda});
    return it == terms_.end() ? Rational(0) : it->second;
}

BiPoly BiPoly::coeff_of_x(unsigned deg_x) const {
    BiPoly slice;
    for (const auto& [e, c] : terms_) {
        if (e.deg_x == deg_x) {
            slice.terms_.emplace(ExponentPair{0, e.deg_lambda}, c);
        }
    }
    return slice;
}

unsigned BiPoly::degree_x() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.deg_x);
    return d;
}

unsigned BiPoly::degree_lambda() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.deg_lambda);
    return d;
}

void BiPoly::add_term(const ExponentPair& exponents, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
    BiPoly product;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            product.add_term(ExponentPair{ea.deg_x + eb.deg_x, ea.deg_lambda + eb.deg_lambda},
                             ca * cb);
        }
    }
    terms_ = std::move(product.terms_);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly result(1);
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

BiPoly BiPoly::substitute_x(const Rational& value) const {
    BiPoly result;
    for (const auto& [e, c] : terms_) {
        result.add_term(ExponentPair{0, e.deg_lambda}, c * value.pow(e.deg_x));
    }
    return result;
}

BiPoly BiPoly::substitute_lambda(const Rational& value) const {
    BiPoly result;
    for (const auto& [e, c] : terms_) {
        result.add_term(ExponentPair{e.deg_x, 0}, c * value.pow(e.deg_lambda));
    }
    return result;
}

BiPoly BiPoly::eval(const std::optional<Rational>& x_value,
                    const std::optional<Rational>& lambda_value) const {
    BiPoly result = *this;
    if (x_value) result = result.substitute_x(*x_value);
    if (lambda_value) result = result.substitute_lambda(*lambda_value);
    return result;
}

Rational BiPoly::at(const Rational& x_value, const Rational& lambda_value) const {
    return substitute_x(x_value).substitute_lambda(lambda_value).constant_value();
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (coeff.sign() < 0) {
                out += "-";
                coeff = -coeff;
            }
        } else {
            out += coeff.sign() < 0 ? " - " : " + ";
            if (coeff.sign() < 0) coeff = -coeff;
        }
        std::string vars;
        if (e.deg_x > 0) {
            vars += "x";
            if (e.deg_x > 1) vars += "^" + std::to_string(e.deg_x);
        }
        if (e.deg_lambda > 0) {
            if (!vars.empty()) vars += "*";
            vars += "λ";
            if (e.deg_lambda > 1) vars += "^" + std::to_string(e.deg_lambda);
        }
        if (vars.empty()) {
            out += coeff.str();
        } else if (coeff == Rational(1)) {
            out += vars;
        } else {
            out += coeff.str() + "*" + vars;
        }
        first = false;
    }
    return out;
}

BiPoly lambda_falling(const BiPoly& arg, unsigned n, const BiPoly& step) {
    BiPoly result(1);
    BiPoly factor = arg;
    for (unsigned j = 0; j < n; ++j) {
        result *= factor;
        factor -= step;
    }
    return result;
}

} // namespace dpoly
