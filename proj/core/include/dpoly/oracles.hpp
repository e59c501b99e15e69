#pragma once

#include "dpoly/bipoly.hpp"

#include <cstdint>

namespace dpoly::oracles {

// Result of a brute-force count. `enumerated` is the size of the search
// space actually walked (n! permutations, all restricted-growth strings,
// k^n maps), so tests can assert nothing was skipped.
struct OracleResult {
    Rational value;
    std::uint64_t enumerated = 0;
};

// Permutations of n elements with no fixed point, by walking all n!
// permutations in lexicographic order. Throws SizeLimit for n > 9.
OracleResult count_derangements(unsigned n);

// Partitions of an n-set into exactly k nonempty blocks, by walking every
// restricted-growth string. Throws SizeLimit for n > 10.
OracleResult count_partitions(unsigned n, unsigned k);

// Surjections from an n-set onto a k-set, by walking all k^n maps with a
// mixed-radix counter. Throws SizeLimit for n > 8.
OracleResult count_surjections(unsigned n, unsigned k);

// The product x(x-1)(x-2)...(x-n+1) expanded term by term over a dense
// coefficient vector (no shared polynomial machinery), returned as a
// polynomial in x. Throws SizeLimit for n > 16.
BiPoly expand_falling(unsigned n);

} // namespace dpoly::oracles
