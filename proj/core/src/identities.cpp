#include "dpoly/identities.hpp"

#include "dpoly/abel.hpp"
#include "dpoly/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace dpoly::identities {

namespace {

constexpr Id kAllIds[] = {
    Id::L2_1, Id::T2_2, Id::T2_3, Id::T2_4a, Id::T2_4b, Id::T2_5, Id::T2_6, Id::T2_7,
    Id::T3_1, Id::T3_2, Id::T3_3, Id::T3_4,  Id::T3_5,  Id::T3_6, Id::T3_7, Id::C3_8,
    Id::E03,  Id::E07,  Id::E12,  Id::E14,   Id::E15,   Id::E33,  Id::E37,  Id::E50,
};

struct IdInfo {
    Id id;
    std::string_view name;
    unsigned min_n;
};

constexpr IdInfo kIdInfo[] = {
    {Id::L2_1, "L2.1", 0}, {Id::T2_2, "T2.2", 0},  {Id::T2_3, "T2.3", 0},
    {Id::T2_4a, "T2.4a", 1}, {Id::T2_4b, "T2.4b", 2}, {Id::T2_5, "T2.5", 0},
    {Id::T2_6, "T2.6", 0}, {Id::T2_7, "T2.7", 1},  {Id::T3_1, "T3.1", 1},
    {Id::T3_2, "T3.2", 0}, {Id::T3_3, "T3.3", 0},  {Id::T3_4, "T3.4", 2},
    {Id::T3_5, "T3.5", 1}, {Id::T3_6, "T3.6", 0},  {Id::T3_7, "T3.7", 0},
    {Id::C3_8, "C3.8", 0}, {Id::E03, "E03", 0},    {Id::E07, "E07", 0},
    {Id::E12, "E12", 0},  {Id::E14, "E14", 1},     {Id::E15, "E15", 2},
    {Id::E33, "E33", 1},  {Id::E37, "E37", 0},     {Id::E50, "E50", 0},
};

const IdInfo& info(Id id) {
    for (const auto& entry : kIdInfo) {
        if (entry.id == id) return entry;
    }
    throw UnknownIdentity("unregistered identity id");
}

Rational sign_rat(unsigned k) {
    return Rational(k % 2 == 0 ? 1 : -1);
}

Witness make_witness(unsigned n, const BiPoly& lhs, const BiPoly& rhs,
                     std::optional<unsigned> m = std::nullopt) {
    return Witness{n, m, lhs.str(), rhs.str()};
}

Witness make_witness(unsigned n, const Rational& lhs, const Rational& rhs,
                     std::optional<unsigned> m = std::nullopt) {
    return Witness{n, m, lhs.str(), rhs.str()};
}

BiPoly bell_number(Catalog& cat, unsigned j, bool degenerate) {
    return cat.bell_poly(j, degenerate).substitute_x(Rational(1));
}

// --- individual checks -------------------------------------------------------
// Every check compares exact polynomials (or exact rationals); nothing is
// sampled. The loops return the first counterexample.

using MaybeWitness = std::optional<Witness>;

// n! x^n = sum_m F_m(x) s(n,m)
MaybeWitness check_l21(Catalog& cat, unsigned n_max) {
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs = BiPoly::monomial(rat_factorial(n), n, 0);
        BiPoly rhs;
        for (unsigned m = 0; m <= n; ++m) {
            rhs += cat.fubini_poly(m) * cat.stirling(StirlingKind::First, n, m);
        }
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// sum_l C(n,l) d_l(x) = sum_m F_m(x) s(n,m)
MaybeWitness check_t22(Catalog& cat, unsigned n_max) {
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs;
        for (unsigned l = 0; l <= n; ++l) {
            lhs += rat_binomial(n, l) * cat.derangement_poly(l);
        }
        BiPoly rhs;
        for (unsigned m = 0; m <= n; ++m) {
            rhs += cat.fubini_poly(m) * cat.stirling(StirlingKind::First, n, m);
        }
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// closed form n! sum_k (-1)^k/k! x^{n-k}, checked against the EGF route
MaybeWitness check_t23(Catalog& cat, unsigned n_max) {
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs = cat.derangement_poly(n, Route::Egf);
        BiPoly rhs;
        Rational coeff(factorial(n));
        for (unsigned k = 0; k <= n; ++k) {
            rhs += BiPoly::monomial(sign_rat(k) * coeff, n - k, 0);
            if (k < n) coeff /= Rational(static_cast<long long>(k) + 1);
        }
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// d_n(x) = n x d_{n-1}(x) + (-1)^n
MaybeWitness check_t24a(Catalog& cat, unsigned n_max) {
    BiPoly x = BiPoly::x();
    for (unsigned n = 1; n <= n_max; ++n) {
        BiPoly lhs = cat.derangement_poly(n);
        BiPoly rhs = Rational(static_cast<long long>(n)) * x * cat.derangement_poly(n - 1) +
                     BiPoly(sign_rat(n));
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// d_n(x) = (nx-1)(d_{n-1}(x) + d_{n-2}(x)) + (1-x) d_{n-2}(x)
MaybeWitness check_t24b(Catalog& cat, unsigned n_max) {
    BiPoly x = BiPoly::x();
    BiPoly one(1);
    for (unsigned n = 2; n <= n_max; ++n) {
        BiPoly lhs = cat.derangement_poly(n);
        BiPoly prev1 = cat.derangement_poly(n - 1);
        BiPoly prev2 = cat.derangement_poly(n - 2);
        BiPoly rhs = (Rational(static_cast<long long>(n)) * x - one) * (prev1 + prev2) +
                     (one - x) * prev2;
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// F_n(x) = sum_k sum_m C(n,k) d_m(x) S(k,m) Bel_{n-k}
MaybeWitness check_t25(Catalog& cat, unsigned n_max) {
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs = cat.fubini_poly(n);
        BiPoly rhs;
        for (unsigned k = 0; k <= n; ++k) {
            BiPoly bell = bell_number(cat, n - k, false);
            for (unsigned m = 0; m <= k; ++m) {
                rhs += rat_binomial(n, k) * cat.derangement_poly(m) *
                       cat.stirling(StirlingKind::Second, k, m) * bell;
            }
        }
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// d_n(x) = sum_k sum_m C(n,k) F_m(x) s(k,m) (-1)^{n-k}, the coefficient of
// t^n/n! in [sum_k (sum_m F_m(x) s(k,m)) t^k/k!]·e^{-t}; the inner sum's EGF
// is 1/(1-xt), so the product is the derangement-polynomial EGF.
MaybeWitness check_t26(Catalog& cat, unsigned n_max) {
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs = cat.derangement_poly(n);
        BiPoly rhs;
        for (unsigned k = 0; k <= n; ++k) {
            Rational outer = rat_binomial(n, k) * sign_rat(n - k);
            for (unsigned m = 0; m <= k; ++m) {
                rhs += outer * cat.fubini_poly(m) * cat.stirling(StirlingKind::First, k, m);
            }
        }
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// n! (B_{n+1}(m) - B_{n+1}) = (n+1) sum_{k<m} sum_l C(n,l) d_l(k)
//                           = (n+1) sum_{k<m} sum_l F_l(k) s(n,l)
// (the original statement divided by (n+1) and 1/n!; cleared here)
MaybeWitness check_t27(Catalog& cat, unsigned n_max) {
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly bernoulli = cat.bernoulli_poly(n + 1);
        Rational b_at_zero = bernoulli.substitute_x(Rational(0)).constant_value();
        for (unsigned m = 1; m <= n_max; ++m) {
            Rational lhs = rat_factorial(n) *
                           (bernoulli.substitute_x(Rational(m)).constant_value() - b_at_zero);
            Rational sum_d(0), sum_f(0);
            for (unsigned k = 0; k < m; ++k) {
                Rational point(static_cast<long long>(k));
                for (unsigned l = 0; l <= n; ++l) {
                    sum_d += rat_binomial(n, l) *
                             cat.derangement_poly(l).substitute_x(point).constant_value();
                    sum_f += cat.fubini_poly(l).substitute_x(point).constant_value() *
                             cat.stirling(StirlingKind::First, n, l).constant_value();
                }
            }
            Rational np1(static_cast<long long>(n) + 1);
            if (!(lhs == np1 * sum_d)) return make_witness(n, lhs, np1 * sum_d, m);
            if (!(lhs == np1 * sum_f)) return make_witness(n, lhs, np1 * sum_f, m);
        }
    }
    return std::nullopt;
}

// d_{n,λ}(x) = n x d_{n-1,λ}(x) + (-1)^n (1)_{n,λ}
MaybeWitness check_t31(Catalog& cat, unsigned n_max) {
    BiPoly x = BiPoly::x();
    BiPoly one(1);
    BiPoly lambda = BiPoly::lambda();
    for (unsigned n = 1; n <= n_max; ++n) {
        BiPoly lhs = cat.degen_derangement_poly(n);
        BiPoly rhs = Rational(static_cast<long long>(n)) * x *
                         cat.degen_derangement_poly(n - 1) +
                     sign_rat(n) * lambda_falling(one, n, lambda);
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// closed form n! sum_k (-1)^k/k! (1)_{k,λ} x^{n-k} vs. the EGF route
MaybeWitness check_t32(Catalog& cat, unsigned n_max) {
    BiPoly one(1);
    BiPoly lambda = BiPoly::lambda();
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs = cat.degen_derangement_poly(n, Route::Egf);
        BiPoly rhs;
        Rational coeff(factorial(n));
        BiPoly falling(1);
        BiPoly factor = one;
        for (unsigned k = 0; k <= n; ++k) {
            rhs += BiPoly::monomial(sign_rat(k) * coeff, n - k, 0) * falling;
            if (k < n) {
                coeff /= Rational(static_cast<long long>(k) + 1);
                falling *= factor;
                factor -= lambda;
            }
        }
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// n! x^n = sum_l C(n,l) d_{l,λ}(x) (1)_{n-l,-λ}
MaybeWitness check_t33(Catalog& cat, unsigned n_max) {
    BiPoly one(1);
    BiPoly neg_lambda = -BiPoly::lambda();
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs = BiPoly::monomial(rat_factorial(n), n, 0);
        BiPoly rhs;
        for (unsigned l = 0; l <= n; ++l) {
            rhs += rat_binomial(n, l) * cat.degen_derangement_poly(l) *
                   lambda_falling(one, n - l, neg_lambda);
        }
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// d_{n,λ}(x) = (nx-1)(d_{n-1,λ} + d_{n-2,λ}) + (1-x) d_{n-2,λ}
//              + (-1)^{n-1} (1)_{n-1,λ} (n-1) λ
MaybeWitness check_t34(Catalog& cat, unsigned n_max) {
    BiPoly x = BiPoly::x();
    BiPoly one(1);
    BiPoly lambda = BiPoly::lambda();
    for (unsigned n = 2; n <= n_max; ++n) {
        BiPoly lhs = cat.degen_derangement_poly(n);
        BiPoly prev1 = cat.degen_derangement_poly(n - 1);
        BiPoly prev2 = cat.degen_derangement_poly(n - 2);
        BiPoly tail = sign_rat(n - 1) * lambda_falling(one, n - 1, lambda) * lambda *
                      Rational(static_cast<long long>(n) - 1);
        BiPoly rhs = (Rational(static_cast<long long>(n)) * x - one) * (prev1 + prev2) +
                     (one - x) * prev2 + tail;
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// sum_m λ^{n-m} s(n,m) = (1)_{n,λ}
MaybeWitness check_t35(Catalog& cat, unsigned n_max) {
    BiPoly one(1);
    BiPoly lambda = BiPoly::lambda();
    for (unsigned n = 1; n <= n_max; ++n) {
        BiPoly lhs;
        for (unsigned m = 0; m <= n; ++m) {
            lhs += BiPoly::monomial(Rational(1), 0, n - m) *
                   cat.stirling(StirlingKind::First, n, m);
        }
        BiPoly rhs = lambda_falling(one, n, lambda);
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// sum_m C(n,m) Bel_{m,λ} E_{n-m,λ} = 2 * [regularized sum over (m)_{n,λ}]
MaybeWitness check_t36(Catalog& cat, unsigned n_max) {
    BiPoly x = BiPoly::x();
    BiPoly lambda = BiPoly::lambda();
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs;
        for (unsigned m = 0; m <= n; ++m) {
            lhs += rat_binomial(n, m) * bell_number(cat, m, true) * cat.degen_euler(n - m);
        }
        BiPoly rhs =
            Rational(2) *
            abel::regularized_derangement_sum(lambda_falling(x, n, lambda)).e_coefficient;
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// sum_m S_λ(n,m) = regularized sum over (m)_{n,λ} + (m+1)_{n,λ}
MaybeWitness check_t37(Catalog& cat, unsigned n_max) {
    BiPoly x = BiPoly::x();
    BiPoly one(1);
    BiPoly lambda = BiPoly::lambda();
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs;
        for (unsigned m = 0; m <= n; ++m) {
            lhs += cat.stirling(StirlingKind::SecondDegenerate, n, m);
        }
        BiPoly weight = lambda_falling(x, n, lambda) + lambda_falling(x + one, n, lambda);
        BiPoly rhs = abel::regularized_derangement_sum(weight).e_coefficient;
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// Bel_{n,λ} = regularized sum over (m)_{n,λ} + (m+1)_{n,λ}
MaybeWitness check_c38(Catalog& cat, unsigned n_max) {
    BiPoly x = BiPoly::x();
    BiPoly one(1);
    BiPoly lambda = BiPoly::lambda();
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs = bell_number(cat, n, true);
        BiPoly weight = lambda_falling(x, n, lambda) + lambda_falling(x + one, n, lambda);
        BiPoly rhs = abel::regularized_derangement_sum(weight).e_coefficient;
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// x^n = sum_l S(n,l) (x)_l
MaybeWitness check_e03(Catalog& cat, unsigned n_max) {
    BiPoly x = BiPoly::x();
    BiPoly one(1);
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs = BiPoly::monomial(Rational(1), n, 0);
        BiPoly rhs;
        for (unsigned l = 0; l <= n; ++l) {
            rhs += cat.stirling(StirlingKind::Second, n, l) * lambda_falling(x, l, one);
        }
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// (x)_n = sum_l s(n,l) x^l
MaybeWitness check_e07(Catalog& cat, unsigned n_max) {
    BiPoly x = BiPoly::x();
    BiPoly one(1);
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs = lambda_falling(x, n, one);
        BiPoly rhs;
        for (unsigned l = 0; l <= n; ++l) {
            rhs += cat.stirling(StirlingKind::First, n, l) *
                   BiPoly::monomial(Rational(1), l, 0);
        }
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// d_n = sum_k C(n,k) (n-k)! (-1)^k = n! sum_k (-1)^k / k!
MaybeWitness check_e12(Catalog& cat, unsigned n_max) {
    for (unsigned n = 0; n <= n_max; ++n) {
        Rational lhs = cat.derangement_number(n);
        Rational sum_a(0);
        for (unsigned k = 0; k <= n; ++k) {
            sum_a += rat_binomial(n, k) * rat_factorial(n - k) * sign_rat(k);
        }
        Rational sum_b(0);
        for (unsigned k = 0; k <= n; ++k) {
            sum_b += sign_rat(k) / rat_factorial(k);
        }
        sum_b *= rat_factorial(n);
        if (!(lhs == sum_a)) return make_witness(n, lhs, sum_a);
        if (!(lhs == sum_b)) return make_witness(n, lhs, sum_b);
    }
    return std::nullopt;
}

// d_n = n d_{n-1} + (-1)^n
MaybeWitness check_e14(Catalog& cat, unsigned n_max) {
    for (unsigned n = 1; n <= n_max; ++n) {
        Rational lhs = cat.derangement_number(n);
        Rational rhs = Rational(static_cast<long long>(n)) * cat.derangement_number(n - 1) +
                       sign_rat(n);
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// d_n = (n-1)(d_{n-1} + d_{n-2})
MaybeWitness check_e15(Catalog& cat, unsigned n_max) {
    for (unsigned n = 2; n <= n_max; ++n) {
        Rational lhs = cat.derangement_number(n);
        Rational rhs = Rational(static_cast<long long>(n) - 1) *
                       (cat.derangement_number(n - 1) + cat.derangement_number(n - 2));
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

// sum_{k<m} k^n = (B_{n+1}(m) - B_{n+1}) / (n+1), with 0^0 = 1
MaybeWitness check_e33(Catalog& cat, unsigned n_max) {
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly bernoulli = cat.bernoulli_poly(n + 1);
        Rational b_at_zero = bernoulli.substitute_x(Rational(0)).constant_value();
        Rational np1(static_cast<long long>(n) + 1);
        for (unsigned m = 1; m <= n_max; ++m) {
            Rational lhs(0);
            for (unsigned k = 0; k < m; ++k) {
                lhs += Rational(static_cast<long long>(k)).pow(n);
            }
            Rational rhs =
                (bernoulli.substitute_x(Rational(m)).constant_value() - b_at_zero) / np1;
            if (!(lhs == rhs)) return make_witness(n, lhs, rhs, m);
        }
    }
    return std::nullopt;
}

// a_m of (1-λt)^{1/λ}: the product form, the literal falling factorial, and
// the exp((1/λ)log(1-λt)) expansion must agree coefficientwise.
MaybeWitness check_e37(Catalog&, unsigned n_max) {
    BiPoly one(1);
    BiPoly lambda = BiPoly::lambda();
    EgfSeries product_form = binomial_lambda_series(one, -1, n_max);
    EgfSeries log_arg(n_max);
    for (unsigned k = 1; k <= n_max; ++k) {
        // ordinary coefficient of (1/λ)log(1-λt) is -λ^{k-1}/k
        log_arg.at(k) = BiPoly::monomial(-rat_factorial(k - 1), 0, k - 1);
    }
    EgfSeries exp_form = series_exp(log_arg);
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly direct = sign_rat(n) * lambda_falling(one, n, lambda);
        if (!(product_form.coeff(n) == direct)) {
            return make_witness(n, product_form.coeff(n), direct);
        }
        if (!(product_form.coeff(n) == exp_form.coeff(n))) {
            return make_witness(n, product_form.coeff(n), exp_form.coeff(n));
        }
    }
    return std::nullopt;
}

// Bel_{n,λ} = sum_m S_λ(n,m)
MaybeWitness check_e50(Catalog& cat, unsigned n_max) {
    for (unsigned n = 0; n <= n_max; ++n) {
        BiPoly lhs = bell_number(cat, n, true);
        BiPoly rhs;
        for (unsigned m = 0; m <= n; ++m) {
            rhs += cat.stirling(StirlingKind::SecondDegenerate, n, m);
        }
        if (!(lhs == rhs)) return make_witness(n, lhs, rhs);
    }
    return std::nullopt;
}

MaybeWitness dispatch(Id id, Catalog& cat, unsigned n_max) {
    switch (id) {
        case Id::L2_1: return check_l21(cat, n_max);
        case Id::T2_2: return check_t22(cat, n_max);
        case Id::T2_3: return check_t23(cat, n_max);
        case Id::T2_4a: return check_t24a(cat, n_max);
        case Id::T2_4b: return check_t24b(cat, n_max);
        case Id::T2_5: return check_t25(cat, n_max);
        case Id::T2_6: return check_t26(cat, n_max);
        case Id::T2_7: return check_t27(cat, n_max);
        case Id::T3_1: return check_t31(cat, n_max);
        case Id::T3_2: return check_t32(cat, n_max);
        case Id::T3_3: return check_t33(cat, n_max);
        case Id::T3_4: return check_t34(cat, n_max);
        case Id::T3_5: return check_t35(cat, n_max);
        case Id::T3_6: return check_t36(cat, n_max);
        case Id::T3_7: return check_t37(cat, n_max);
        case Id::C3_8: return check_c38(cat, n_max);
        case Id::E03: return check_e03(cat, n_max);
        case Id::E07: return check_e07(cat, n_max);
        case Id::E12: return check_e12(cat, n_max);
        case Id::E14: return check_e14(cat, n_max);
        case Id::E15: return check_e15(cat, n_max);
        case Id::E33: return check_e33(cat, n_max);
        case Id::E37: return check_e37(cat, n_max);
        case Id::E50: return check_e50(cat, n_max);
    }
    throw UnknownIdentity("unregistered identity id");
}

unsigned canonical_index(Id id) {
    for (unsigned i = 0; i < std::size(kAllIds); ++i) {
        if (kAllIds[i] == id) return i;
    }
    throw UnknownIdentity("unregistered identity id");
}

} // namespace

std::span<const Id> all_ids() {
    return kAllIds;
}

std::string_view id_name(Id id) {
    return info(id).name;
}

Id parse_id(std::string_view name) {
    for (const auto& entry : kIdInfo) {
        if (entry.name == name) return entry.id;
    }
    throw UnknownIdentity("unknown identity id '" + std::string(name) + "'");
}

unsigned min_n(Id id) {
    return info(id).min_n;
}

Report verify(Id id, unsigned n_max, Catalog& catalog) {
    if (n_max < min_n(id)) {
        throw InvalidRange("identity " + std::string(id_name(id)) + " needs n_max >= " +
                           std::to_string(min_n(id)));
    }
    auto start = std::chrono::steady_clock::now();
    MaybeWitness witness = dispatch(id, catalog, n_max);
    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return Report{id, n_max, !witness.has_value(), std::move(witness), elapsed};
}

std::vector<Report> run_suite(std::span<const Id> ids, unsigned n_max, Catalog& catalog) {
    std::vector<Id> ordered(ids.begin(), ids.end());
    std::sort(ordered.begin(), ordered.end(),
              [](Id a, Id b) { return canonical_index(a) < canonical_index(b); });
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
    std::vector<Report> reports;
    reports.reserve(ordered.size());
    for (Id id : ordered) {
        reports.push_back(verify(id, n_max, catalog));
    }
    return reports;
}

} // namespace dpoly::identities
