#include "dpoly/oracles.hpp"

#include "dpoly/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace dpoly::oracles {

namespace {

[[noreturn]] void too_big(const char* what, unsigned n, unsigned cap) {
    throw SizeLimit(std::string(what) + ": n = " + std::to_string(n) +
                    " exceeds enumeration cap " + std::to_string(cap));
}

} // namespace

OracleResult count_derangements(unsigned n) {
    constexpr unsigned kCap = 9;
    if (n > kCap) too_big("count_derangements", n, kCap);
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::uint64_t enumerated = 0;
    std::uint64_t hits = 0;
    do {
        ++enumerated;
        bool fixed_point = false;
        for (unsigned i = 0; i < n; ++i) {
            if (perm[i] == i) {
                fixed_point = true;
                break;
            }
        }
        if (!fixed_point) ++hits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {Rational(static_cast<long long>(hits)), enumerated};
}

OracleResult count_partitions(unsigned n, unsigned k) {
    constexpr unsigned kCap = 10;
    if (n > kCap) too_big("count_partitions", n, kCap);
    std::uint64_t enumerated = 0;
    std::uint64_t hits = 0;
    // Depth-first walk over restricted-growth strings: position i may take
    // any value up to (max of previous values) + 1.
    std::vector<unsigned> code(n);
    auto walk = [&](auto&& self, unsigned i, unsigned max_used) -> void {
        if (i == n) {
            ++enumerated;
            unsigned blocks = n == 0 ? 0 : max_used + 1;
            if (blocks == k) ++hits;
            return;
        }
        unsigned limit = i == 0 ? 0 : max_used + 1;
        for (unsigned v = 0; v <= limit; ++v) {
            code[i] = v;
            self(self, i + 1, i == 0 ? v : std::max(max_used, v));
        }
    };
    walk(walk, 0, 0);
    return {Rational(static_cast<long long>(hits)), enumerated};
}

OracleResult count_surjections(unsigned n, unsigned k) {
    constexpr unsigned kCap = 8;
    if (n > kCap) too_big("count_surjections", n, kCap);
    if (k == 0) {
        // Only the empty map exists, and it is onto the empty set.
        return {Rational(n == 0 ? 1 : 0), n == 0 ? 1ull : 0ull};
    }
    std::vector<unsigned> digits(n, 0);
    std::uint64_t enumerated = 0;
    std::uint64_t hits = 0;
    bool done = false;
    while (!done) {
        ++enumerated;
        unsigned covered = 0;
        unsigned mask = 0;
        for (unsigned i = 0; i < n; ++i) {
            unsigned bit = 1u << digits[i];
            if (!(mask & bit)) {
                mask |= bit;
                ++covered;
            }
        }
        if (covered == k) ++hits;
        // mixed-radix increment, base k per digit
        done = true;
        for (unsigned i = 0; i < n; ++i) {
            if (++digits[i] < k) {
                done = false;
                break;
            }
            digits[i] = 0;
        }
    }
    return {Rational(static_cast<long long>(hits)), enumerated};
}

BiPoly expand_falling(unsigned n) {
    constexpr unsigned kCap = 16;
    if (n > kCap) too_big("expand_falling", n, kCap);
    // Dense coefficients of the running product; multiply by (x - j) via
    // shift-and-subtract so nothing here depends on the sparse multiply.
    std::vector<Rational> coeffs{Rational(1)};
    for (unsigned j = 0; j < n; ++j) {
        std::vector<Rational> next(coeffs.size() + 1);
        Rational minus_j(-static_cast<long long>(j));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] += coeffs[i] * minus_j;
        }
        coeffs = std::move(next);
    }
    BiPoly result;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        result += BiPoly::monomial(coeffs[i], static_cast<unsigned>(i), 0);
    }
    return result;
}

} // namespace dpoly::oracles
