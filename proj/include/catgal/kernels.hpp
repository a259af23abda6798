#pragma once

#include <cstdint>
#include <vector>

// Hot scan loops, each in a serial reference version and an OpenMP version.
// The serial versions are the oracles: tests assert the pair agrees, and
// tools/bench compares their runtimes.

namespace catgal::kernels {

// Returns -1 if associativity holds for all triples of the n x n table,
// otherwise the encoded witness a*n*n + b*n + c of the first failure found.
// The parallel version may report a different witness but agrees on -1.
std::int64_t assoc_violation_serial(const int* table, int n);
std::int64_t assoc_violation_parallel(const int* table, int n);

// Counts multiplicative maps A -> B among all |B|^|A| index maps.  This is
// the brute-force oracle for hom enumeration; feasible for |B|^|A| <= ~10^8.
std::int64_t hom_filter_count_serial(const int* ta, int na, const int* tb, int nb);
std::int64_t hom_filter_count_parallel(const int* ta, int na, const int* tb, int nb);

}  // namespace catgal::kernels
