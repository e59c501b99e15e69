#pragma once

#include "dpoly/sequences.hpp"

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dpoly::identities {

// Registry of verified identities. Labels are stable public names (they are
// the `--id` values of the command-line verifier); the mathematical content
// of each check lives next to its implementation.
enum class Id {
    L2_1,  // n!·x^n expanded over Fubini polynomials and Stirling-1 numbers
    T2_2,  // binomial sum of derangement polynomials vs. the same expansion
    T2_3,  // derangement polynomial closed form vs. its generating function
    T2_4a, // derangement polynomial first recurrence
    T2_4b, // derangement polynomial second recurrence
    T2_5,  // Fubini polynomial expanded over derangement polynomials
    T2_6,  // derangement polynomial expanded over Fubini polynomials
    T2_7,  // Bernoulli difference vs. double sums of derangement/Fubini values
    T3_1,  // degenerate derangement polynomial first recurrence
    T3_2,  // degenerate derangement polynomial closed form vs. generating function
    T3_3,  // n!·x^n expanded over degenerate derangement polynomials
    T3_4,  // degenerate derangement polynomial second recurrence
    T3_5,  // λ-weighted Stirling-1 row sums vs. the λ-falling factorial of 1
    T3_6,  // degenerate Bell/Euler convolution vs. a regularized derangement sum
    T3_7,  // degenerate Stirling-2 row sums vs. a regularized derangement sum
    C3_8,  // degenerate Bell numbers vs. the same regularized sum
    E03,   // x^n expanded over falling factorials (Stirling-2)
    E07,   // falling factorial expanded over powers (Stirling-1)
    E12,   // derangement number alternating-sum formulas
    E14,   // derangement number first recurrence
    E15,   // derangement number second recurrence
    E33,   // power sums vs. Bernoulli polynomial differences
    E37,   // product form of (1-λt)^{1/λ} vs. its exp∘log expansion
    E50,   // degenerate Bell numbers vs. degenerate Stirling-2 row sums
};

// All ids in canonical report order.
std::span<const Id> all_ids();

std::string_view id_name(Id id);
// Throws UnknownIdentity for labels not in the registry.
Id parse_id(std::string_view name);

// Smallest n at which the check is defined.
unsigned min_n(Id id);

// First counterexample found, with both sides rendered canonically.
struct Witness {
    unsigned n = 0;
    std::optional<unsigned> m; // only for the double-indexed checks
    std::string lhs;
    std::string rhs;
};

struct Report {
    Id id;
    unsigned n_max = 0;
    bool pass = false;
    std::optional<Witness> witness;
    std::chrono::microseconds elapsed{0};
};

// Checks one identity for every valid index up to n_max (inclusive).
// Throws InvalidRange when n_max < min_n(id).
Report verify(Id id, unsigned n_max, Catalog& catalog);

// Runs a set of checks and returns reports in canonical id order,
// independent of the order ids were passed in.
std::vector<Report> run_suite(std::span<const Id> ids, unsigned n_max, Catalog& catalog);

// JSON rendering of reports (an array of objects with keys id, n_max,
// status, witness, elapsed_ms). Timing is wall-clock and therefore varies
// run to run; with_timing=false emits elapsed_ms as null so the rest of the
// document is byte-reproducible.
std::string reports_to_json(std::span<const Report> reports, bool with_timing = true);

} // namespace dpoly::identities
