#include "dpoly/sequences.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dpoly {

namespace {

Rational alternating_sign(unsigned n) {
    return Rational(n % 2 == 0 ? 1 : -1);
}

struct FamilyInfo {
    FamilyTag tag;
    std::string_view id;
};

constexpr FamilyInfo kFamilies[] = {
    {FamilyTag::DerangementNumber, "derangement"},
    {FamilyTag::DerangementPoly, "derangement-poly"},
    {FamilyTag::DegenDerangementPoly, "derangement-poly-degenerate"},
    {FamilyTag::Stirling1, "stirling1"},
    {FamilyTag::Stirling2, "stirling2"},
    {FamilyTag::DegenStirling2, "stirling2-degenerate"},
    {FamilyTag::FubiniPoly, "fubini-poly"},
    {FamilyTag::BellPoly, "bell-poly"},
    {FamilyTag::DegenBellPoly, "bell-poly-degenerate"},
    {FamilyTag::BernoulliPoly, "bernoulli-poly"},
    {FamilyTag::DegenBernoulli, "bernoulli-degenerate"},
    {FamilyTag::DegenEuler, "euler-degenerate"},
};

struct RouteInfo {
    Route route;
    std::string_view id;
};

constexpr RouteInfo kRoutes[] = {
    {Route::Canonical, "canonical"},
    {Route::Formula, "formula"},
    {Route::Closed, "closed"},
    {Route::Rec, "rec"},
    {Route::RecA, "recA"},
    {Route::RecB, "recB"},
    {Route::Egf, "egf"},
};

} // namespace

std::string_view family_id(FamilyTag tag) {
    for (const auto& f : kFamilies) {
        if (f.tag == tag) return f.id;
    }
    return "?";
}

std::optional<FamilyTag> parse_family(std::string_view id) {
    for (const auto& f : kFamilies) {
        if (f.id == id) return f.tag;
    }
    return std::nullopt;
}

std::string_view route_id(Route route) {
    for (const auto& r : kRoutes) {
        if (r.route == route) return r.id;
    }
    return "?";
}

std::optional<Route> parse_route(std::string_view id) {
    for (const auto& r : kRoutes) {
        if (r.id == id) return r.route;
    }
    return std::nullopt;
}

bool family_supports(FamilyTag tag, Route route) {
    if (route == Route::Canonical) return true;
    switch (tag) {
        case FamilyTag::DerangementNumber:
            return route == Route::Formula || route == Route::RecA ||
                   route == Route::RecB || route == Route::Egf;
        case FamilyTag::DerangementPoly:
            return route == Route::Closed || route == Route::Rec || route == Route::Egf;
        case FamilyTag::DegenDerangementPoly:
            return route == Route::Closed || route == Route::RecA ||
                   route == Route::RecB || route == Route::Egf;
        case FamilyTag::FubiniPoly:
        case FamilyTag::BellPoly:
        case FamilyTag::DegenBellPoly:
            return route == Route::Closed || route == Route::Egf;
        case FamilyTag::BernoulliPoly:
        case FamilyTag::DegenBernoulli:
        case FamilyTag::DegenEuler:
            return route == Route::Egf;
        case FamilyTag::Stirling1:
        case FamilyTag::Stirling2:
        case FamilyTag::DegenStirling2:
            return false; // single (recurrence) evaluation strategy
    }
    return false;
}

namespace {

void require_route(FamilyTag tag, Route route) {
    if (!family_supports(tag, route)) {
        throw std::invalid_argument("route '" + std::string(route_id(route)) +
                                    "' not available for family '" +
                                    std::string(family_id(tag)) + "'");
    }
}

} // namespace

BiPoly Catalog::finish(FamilyTag tag, unsigned n, unsigned k, BiPoly value) const {
    auto it = offsets_.find({tag, n, k});
    if (it != offsets_.end()) {
        value += BiPoly(it->second);
    }
    return value;
}

void Catalog::inject_offset(FamilyTag tag, unsigned n, unsigned k, const Rational& delta) {
    std::lock_guard<std::mutex> lock(mutex_);
    offsets_[{tag, n, k}] += delta;
}

// --- derangement numbers ----------------------------------------------------

Rational Catalog::derangement_number_impl(unsigned n, Route route) {
    switch (route) {
        case Route::Formula: {
            // n! * sum_{k<=n} (-1)^k / k!
            Rational total(0);
            Rational term(factorial(n)); // n!/k! at k = 0
            for (unsigned k = 0; k <= n; ++k) {
                total += alternating_sign(k) * term;
                if (k < n) term /= Rational(static_cast<long long>(k) + 1);
            }
            return total;
        }
        case Route::RecA: {
            // a_i = i * a_{i-1} + (-1)^i
            Rational value(1);
            for (unsigned i = 1; i <= n; ++i) {
                value = Rational(static_cast<long long>(i)) * value + alternating_sign(i);
            }
            return value;
        }
        case Route::RecB: {
            // a_i = (i-1) * (a_{i-1} + a_{i-2}), seeds a_0 = 1, a_1 = 0
            if (n == 0) return Rational(1);
            Rational prev2(1), prev1(0);
            for (unsigned i = 2; i <= n; ++i) {
                Rational cur = Rational(static_cast<long long>(i) - 1) * (prev1 + prev2);
                prev2 = std::exchange(prev1, cur);
            }
            return prev1;
        }
        case Route::Egf:
            return family_series(FamilyTag::DerangementNumber, n).coeff(n).constant_value();
        default:
            break;
    }
    throw std::invalid_argument("derangement_number: unsupported route");
}

Rational Catalog::derangement_number(unsigned n, Route route) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (route == Route::Canonical) route = Route::Formula;
    require_route(FamilyTag::DerangementNumber, route);
    std::tuple<FamilyTag, unsigned, unsigned> key{FamilyTag::DerangementNumber, n, 0};
    if (route == Route::Formula) {
        auto it = memo_.find(key);
        if (it == memo_.end()) {
            it = memo_.emplace(key, BiPoly(derangement_number_impl(n, route))).first;
        }
        return finish(FamilyTag::DerangementNumber, n, 0, it->second).constant_value();
    }
    return finish(FamilyTag::DerangementNumber, n, 0, BiPoly(derangement_number_impl(n, route)))
        .constant_value();
}

// --- derangement polynomials ------------------------------------------------

BiPoly Catalog::derangement_poly_impl(unsigned n, Route route) {
    switch (route) {
        case Route::Closed: {
            // n! * sum_k (-1)^k / k! * x^{n-k}
            BiPoly total;
            Rational coeff(factorial(n));
            for (unsigned k = 0; k <= n; ++k) {
                total += BiPoly::monomial(alternating_sign(k) * coeff, n - k, 0);
                if (k < n) coeff /= Rational(static_cast<long long>(k) + 1);
            }
            return total;
        }
        case Route::Rec: {
            // p_i = i*x*p_{i-1} + (-1)^i
            BiPoly value(1);
            BiPoly x = BiPoly::x();
            for (unsigned i = 1; i <= n; ++i) {
                value = Rational(static_cast<long long>(i)) * x * value +
                        BiPoly(alternating_sign(i));
            }
            return value;
        }
        case Route::Egf:
            return family_series(FamilyTag::DerangementPoly, n).coeff(n);
        default:
            break;
    }
    throw std::invalid_argument("derangement_poly: unsupported route");
}

BiPoly Catalog::derangement_poly(unsigned n, Route route) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (route == Route::Canonical) route = Route::Closed;
    require_route(FamilyTag::DerangementPoly, route);
    std::tuple<FamilyTag, unsigned, unsigned> key{FamilyTag::DerangementPoly, n, 0};
    if (route == Route::Closed) {
        auto it = memo_.find(key);
        if (it == memo_.end()) {
            it = memo_.emplace(key, derangement_poly_impl(n, route)).first;
        }
        return finish(FamilyTag::DerangementPoly, n, 0, it->second);
    }
    return finish(FamilyTag::DerangementPoly, n, 0, derangement_poly_impl(n, route));
}

// --- degenerate derangement polynomials --------------------------------------

BiPoly Catalog::degen_derangement_poly_impl(unsigned n, Route route) {
    BiPoly one(1);
    BiPoly lambda = BiPoly::lambda();
    switch (route) {
        case Route::Closed: {
            // n! * sum_k (-1)^k / k! * (1)_{k,λ} * x^{n-k}
            BiPoly total;
            Rational coeff(factorial(n));
            BiPoly falling(1); // (1)_{k,λ}, updated incrementally
            BiPoly factor = one;
            for (unsigned k = 0; k <= n; ++k) {
                total += BiPoly::monomial(alternating_sign(k) * coeff, n - k, 0) * falling;
                if (k < n) {
                    coeff /= Rational(static_cast<long long>(k) + 1);
                    falling *= factor;
                    factor -= lambda;
                }
            }
            return total;
        }
        case Route::RecA: {
            // p_i = i*x*p_{i-1} + (-1)^i (1)_{i,λ}
            BiPoly value(1);
            BiPoly x = BiPoly::x();
            BiPoly falling(1);
            BiPoly factor = one;
            for (unsigned i = 1; i <= n; ++i) {
                falling *= factor;
                factor -= lambda;
                BiPoly tail = (i % 2 == 0) ? falling : -falling;
                value = Rational(static_cast<long long>(i)) * x * value + tail;
            }
            return value;
        }
        case Route::RecB: {
            // p_i = (i*x - 1)(p_{i-1} + p_{i-2}) + (1 - x) p_{i-2}
            //       + (-1)^{i-1} (1)_{i-1,λ} (i-1) λ
            if (n == 0) return BiPoly(1);
            BiPoly x = BiPoly::x();
            if (n == 1) return x - one;
            BiPoly prev2(1);
            BiPoly prev1 = x - one;
            BiPoly falling(1); // (1)_{i-1,λ} for i = 2 is (1)_{1,λ} = 1
            BiPoly factor = one - lambda;
            for (unsigned i = 2; i <= n; ++i) {
                Rational im1(static_cast<long long>(i) - 1);
                BiPoly ix_minus_1 = Rational(static_cast<long long>(i)) * x - one;
                BiPoly tail = falling * lambda * im1;
                if (i % 2 == 0) tail = -tail; // sign (-1)^{i-1}
                BiPoly cur = ix_minus_1 * (prev1 + prev2) + (one - x) * prev2 + tail;
                prev2 = std::exchange(prev1, cur);
                falling *= factor;
                factor -= lambda;
            }
            return prev1;
        }
        case Route::Egf:
            return family_series(FamilyTag::DegenDerangementPoly, n).coeff(n);
        default:
            break;
    }
    throw std::invalid_argument("degen_derangement_poly: unsupported route");
}

BiPoly Catalog::degen_derangement_poly(unsigned n, Route route) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (route == Route::Canonical) route = Route::Closed;
    require_route(FamilyTag::DegenDerangementPoly, route);
    std::tuple<FamilyTag, unsigned, unsigned> key{FamilyTag::DegenDerangementPoly, n, 0};
    if (route == Route::Closed) {
        auto it = memo_.find(key);
        if (it == memo_.end()) {
            it = memo_.emplace(key, degen_derangement_poly_impl(n, route)).first;
        }
        return finish(FamilyTag::DegenDerangementPoly, n, 0, it->second);
    }
    return finish(FamilyTag::DegenDerangementPoly, n, 0, degen_derangement_poly_impl(n, route));
}

// --- Stirling triangles -------------------------------------------------------

const BiPoly& Catalog::stirling_raw(StirlingKind kind, unsigned n, unsigned k) {
    static const BiPoly kZero;
    if (k > n) return kZero;
    auto& triangle = triangles_[kind];
    if (triangle.empty()) {
        triangle.push_back({BiPoly(1)}); // row 0: single entry at k = 0
    }
    BiPoly lambda = BiPoly::lambda();
    while (triangle.size() <= n) {
        unsigned row_n = static_cast<unsigned>(triangle.size()); // building row row_n
        const auto& prev = triangle.back();
        std::vector<BiPoly> row(row_n + 1);
        auto prev_at = [&](unsigned j) -> const BiPoly& {
            return j < prev.size() ? prev[j] : kZero;
        };
        Rational nm1(static_cast<long long>(row_n) - 1);
        for (unsigned j = 0; j <= row_n; ++j) {
            const BiPoly& up = prev_at(j);          // entry (row_n - 1, j)
            const BiPoly& up_left = j > 0 ? prev_at(j - 1) : kZero;
            switch (kind) {
                case StirlingKind::First:
                    // signed: s(n,k) = s(n-1,k-1) - (n-1) * s(n-1,k)
                    row[j] = up_left - nm1 * up;
                    break;
                case StirlingKind::Second:
                    // S(n,k) = k * S(n-1,k) + S(n-1,k-1)
                    row[j] = Rational(static_cast<long long>(j)) * up + up_left;
                    break;
                case StirlingKind::SecondDegenerate:
                    // S(n,k) = (k - (n-1)λ) * S(n-1,k) + S(n-1,k-1)
                    row[j] = (BiPoly(Rational(static_cast<long long>(j))) - nm1 * lambda) * up +
                             up_left;
                    break;
            }
        }
        triangle.push_back(std::move(row));
    }
    return triangle[n][k];
}

BiPoly Catalog::stirling(StirlingKind kind, unsigned n, unsigned k) {
    std::lock_guard<std::mutex> lock(mutex_);
    FamilyTag tag = kind == StirlingKind::First
                        ? FamilyTag::Stirling1
                        : (kind == StirlingKind::Second ? FamilyTag::Stirling2
                                                        : FamilyTag::DegenStirling2);
    return finish(tag, n, k, stirling_raw(kind, n, k));
}

// --- Fubini / Bell ------------------------------------------------------------

BiPoly Catalog::fubini_poly_impl(unsigned n, Route route) {
    switch (route) {
        case Route::Closed: {
            // sum_k S2(n,k) * k! * x^k
            BiPoly total;
            for (unsigned k = 0; k <= n; ++k) {
                total += stirling_raw(StirlingKind::Second, n, k) *
                         BiPoly::monomial(rat_factorial(k), k, 0);
            }
            return total;
        }
        case Route::Egf:
            return family_series(FamilyTag::FubiniPoly, n).coeff(n);
        default:
            break;
    }
    throw std::invalid_argument("fubini_poly: unsupported route");
}

BiPoly Catalog::fubini_poly(unsigned n, Route route) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (route == Route::Canonical) route = Route::Closed;
    require_route(FamilyTag::FubiniPoly, route);
    std::tuple<FamilyTag, unsigned, unsigned> key{FamilyTag::FubiniPoly, n, 0};
    if (route == Route::Closed) {
        auto it = memo_.find(key);
        if (it == memo_.end()) {
            it = memo_.emplace(key, fubini_poly_impl(n, route)).first;
        }
        return finish(FamilyTag::FubiniPoly, n, 0, it->second);
    }
    return finish(FamilyTag::FubiniPoly, n, 0, fubini_poly_impl(n, route));
}

BiPoly Catalog::bell_poly_impl(unsigned n, bool degenerate, Route route) {
    switch (route) {
        case Route::Closed: {
            if (!degenerate) {
                // sum_k S2(n,k) x^k
                BiPoly total;
                for (unsigned k = 0; k <= n; ++k) {
                    total += stirling_raw(StirlingKind::Second, n, k) *
                             BiPoly::monomial(Rational(1), k, 0);
                }
                return total;
            }
            // sum_{k<=n} sum_{m<=k} S2(k,m) s(n,k) λ^{n-k} x^m
            BiPoly total;
            for (unsigned k = 0; k <= n; ++k) {
                const BiPoly& first = stirling_raw(StirlingKind::First, n, k);
                if (first.is_zero()) continue;
                for (unsigned m = 0; m <= k; ++m) {
                    const BiPoly& second = stirling_raw(StirlingKind::Second, k, m);
                    if (second.is_zero()) continue;
                    total += first * second * BiPoly::monomial(Rational(1), m, n - k);
                }
            }
            return total;
        }
        case Route::Egf: {
            FamilyTag tag = degenerate ? FamilyTag::DegenBellPoly : FamilyTag::BellPoly;
            return family_series(tag, n).coeff(n);
        }
        default:
            break;
    }
    throw std::invalid_argument("bell_poly: unsupported route");
}

BiPoly Catalog::bell_poly(unsigned n, bool degenerate, Route route) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (route == Route::Canonical) route = Route::Closed;
    FamilyTag tag = degenerate ? FamilyTag::DegenBellPoly : FamilyTag::BellPoly;
    require_route(tag, route);
    std::tuple<FamilyTag, unsigned, unsigned> key{tag, n, 0};
    if (route == Route::Closed) {
        auto it = memo_.find(key);
        if (it == memo_.end()) {
            it = memo_.emplace(key, bell_poly_impl(n, degenerate, route)).first;
        }
        return finish(tag, n, 0, it->second);
    }
    return finish(tag, n, 0, bell_poly_impl(n, degenerate, route));
}

// --- Bernoulli / degenerate Bernoulli / degenerate Euler ----------------------

BiPoly Catalog::bernoulli_poly(unsigned n) {
    std::lock_guard<std::mutex> lock(mutex_);
    std::tuple<FamilyTag, unsigned, unsigned> key{FamilyTag::BernoulliPoly, n, 0};
    auto it = memo_.find(key);
    if (it == memo_.end()) {
        it = memo_.emplace(key, family_series(FamilyTag::BernoulliPoly, n).coeff(n)).first;
    }
    return finish(FamilyTag::BernoulliPoly, n, 0, it->second);
}

BiPoly Catalog::degen_bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(mutex_);
    std::tuple<FamilyTag, unsigned, unsigned> key{FamilyTag::DegenBernoulli, n, 0};
    auto it = memo_.find(key);
    if (it == memo_.end()) {
        it = memo_.emplace(key, family_series(FamilyTag::DegenBernoulli, n).coeff(n)).first;
    }
    return finish(FamilyTag::DegenBernoulli, n, 0, it->second);
}

BiPoly Catalog::degen_euler(unsigned n) {
    std::lock_guard<std::mutex> lock(mutex_);
    std::tuple<FamilyTag, unsigned, unsigned> key{FamilyTag::DegenEuler, n, 0};
    auto it = memo_.find(key);
    if (it == memo_.end()) {
        it = memo_.emplace(key, family_series(FamilyTag::DegenEuler, n).coeff(n)).first;
    }
    return finish(FamilyTag::DegenEuler, n, 0, it->second);
}

// --- generating-function cache -------------------------------------------------

const EgfSeries& Catalog::family_series(FamilyTag tag, unsigned order) {
    unsigned want = std::max(order, kDefaultSeriesOrder);
    auto it = series_.find(tag);
    if (it != series_.end() && it->second.order() >= order) {
        return it->second;
    }
    BiPoly x = BiPoly::x();
    BiPoly one(1);
    EgfSeries built(want);
    switch (tag) {
        case FamilyTag::DerangementNumber:
            // e^{-t} / (1-t)
            built = series_mul(EgfSeries::geometric(one, want), EgfSeries::exp_t(want, -1));
            break;
        case FamilyTag::DerangementPoly:
            // e^{-t} / (1-xt)
            built = series_mul(EgfSeries::geometric(x, want), EgfSeries::exp_t(want, -1));
            break;
        case FamilyTag::DegenDerangementPoly:
            // (1-λt)^{1/λ} / (1-xt)
            built = series_mul(EgfSeries::geometric(x, want),
                               binomial_lambda_series(one, -1, want));
            break;
        case FamilyTag::FubiniPoly:
            // 1 / (1 - x(e^t - 1))
            built = series_compose(EgfSeries::geometric(x, want),
                                   EgfSeries::exp_t(want) - EgfSeries::unit(want));
            break;
        case FamilyTag::BellPoly: {
            // e^{x(e^t - 1)}
            EgfSeries inner = EgfSeries::exp_t(want) - EgfSeries::unit(want);
            built = series_exp(inner.scale(x));
            break;
        }
        case FamilyTag::DegenBellPoly: {
            // e^{x((1+λt)^{1/λ} - 1)}
            EgfSeries inner = binomial_lambda_series(one, +1, want) - EgfSeries::unit(want);
            built = series_exp(inner.scale(x));
            break;
        }
        case FamilyTag::BernoulliPoly: {
            // t/(e^t - 1) * e^{xt}; the division by t costs one order.
            EgfSeries numer = EgfSeries::exp_t(want + 1) - EgfSeries::unit(want + 1);
            EgfSeries base = series_invert(divide_by_t(numer));
            built = series_mul(base, EgfSeries::exp_ct(x, want));
            break;
        }
        case FamilyTag::DegenBernoulli: {
            // t / ((1+λt)^{1/λ} - 1)
            EgfSeries numer =
                binomial_lambda_series(one, +1, want + 1) - EgfSeries::unit(want + 1);
            built = series_invert(divide_by_t(numer));
            break;
        }
        case FamilyTag::DegenEuler: {
            // 2 / ((1+λt)^{1/λ} + 1)
            EgfSeries denom = binomial_lambda_series(one, +1, want) + EgfSeries::unit(want);
            built = series_invert(denom);
            built.scale(BiPoly(2));
            break;
        }
        default:
            throw std::invalid_argument("family_series: family has no generating function");
    }
    auto [pos, inserted] = series_.insert_or_assign(tag, std::move(built));
    return pos->second;
}

} // namespace dpoly
