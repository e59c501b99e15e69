#pragma once

#include "dpoly/bipoly.hpp"
#include "dpoly/egf.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

namespace dpoly {

// Every sequence/polynomial family the library computes. The string ids are
// the stable names used by the command-line tool and reports.
enum class FamilyTag {
    DerangementNumber,      // "derangement"
    DerangementPoly,        // "derangement-poly"
    DegenDerangementPoly,   // "derangement-poly-degenerate"
    Stirling1,              // "stirling1" (signed, first kind)
    Stirling2,              // "stirling2"
    DegenStirling2,         // "stirling2-degenerate"
    FubiniPoly,             // "fubini-poly"
    BellPoly,               // "bell-poly"
    DegenBellPoly,          // "bell-poly-degenerate"
    BernoulliPoly,          // "bernoulli-poly"
    DegenBernoulli,         // "bernoulli-degenerate"
    DegenEuler,             // "euler-degenerate"
};

std::string_view family_id(FamilyTag tag);
std::optional<FamilyTag> parse_family(std::string_view id);

// Independent evaluation strategies. Each family accepts a subset; Canonical
// picks the family's primary strategy. Multi-route agreement is what the
// test-suite leans on, so routes deliberately share no code beyond the
// scalar/polynomial arithmetic layer.
enum class Route {
    Canonical,
    Formula, // alternating factorial sum (derangement numbers)
    Closed,  // explicit finite sum
    Rec,     // two-term recurrence (derangement polynomials)
    RecA,    // first recurrence form
    RecB,    // second recurrence form
    Egf,     // coefficient of a generating-function product
};

std::string_view route_id(Route route);
std::optional<Route> parse_route(std::string_view id);
bool family_supports(FamilyTag tag, Route route);

enum class StirlingKind { First, Second, SecondDegenerate };

// Memoizing catalog of all families. Results are exact polynomials in
// Q[x, λ] (plain numbers come back as constant polynomials via the scalar
// accessors). A single mutex serializes computation, so concurrent readers
// always observe fully-built entries.
//
// inject_offset() shifts one stored value by a constant — a fault-injection
// hook used to prove the identity checks actually bite. Offsets apply to
// every route of the family at that index, so route agreement stays intact
// while cross-family identities break.
class Catalog {
public:
    Catalog() = default;
    Catalog(const Catalog&) = delete;
    Catalog& operator=(const Catalog&) = delete;

    Rational derangement_number(unsigned n, Route route = Route::Canonical);
    BiPoly derangement_poly(unsigned n, Route route = Route::Canonical);
    BiPoly degen_derangement_poly(unsigned n, Route route = Route::Canonical);
    BiPoly stirling(StirlingKind kind, unsigned n, unsigned k);
    BiPoly fubini_poly(unsigned n, Route route = Route::Canonical);
    BiPoly bell_poly(unsigned n, bool degenerate, Route route = Route::Canonical);
    BiPoly bernoulli_poly(unsigned n);
    BiPoly degen_bernoulli(unsigned n);
    BiPoly degen_euler(unsigned n);

    void inject_offset(FamilyTag tag, unsigned n, unsigned k, const Rational& delta);

private:
    BiPoly finish(FamilyTag tag, unsigned n, unsigned k, BiPoly value) const;

    Rational derangement_number_impl(unsigned n, Route route);
    BiPoly derangement_poly_impl(unsigned n, Route route);
    BiPoly degen_derangement_poly_impl(unsigned n, Route route);
    BiPoly fubini_poly_impl(unsigned n, Route route);
    BiPoly bell_poly_impl(unsigned n, bool degenerate, Route route);
    const BiPoly& stirling_raw(StirlingKind kind, unsigned n, unsigned k);
    const EgfSeries& family_series(FamilyTag tag, unsigned order);

    mutable std::mutex mutex_;
    std::map<std::tuple<FamilyTag, unsigned, unsigned>, BiPoly> memo_;
    std::map<std::tuple<FamilyTag, unsigned, unsigned>, Rational> offsets_;
    std::map<FamilyTag, EgfSeries> series_;
    std::map<StirlingKind, std::vector<std::vector<BiPoly>>> triangles_;
};

} // namespace dpoly
