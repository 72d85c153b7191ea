#pragma once

#include <vector>

#include "cayham/abelian.hpp"

namespace cayham {

enum class MultiCase { HCLift, LaminatedParity, LengthTwo, OracleFallback, OpenUndecided };

const char* to_string(MultiCase c);

// Arc-disjoint hamiltonian path pair in a product of r >= 3 directed cycles.
// Vertices are coordinate tuples; consecutive tuples differ by +1 in one
// coordinate.  Empty paths with caseUsed == OpenUndecided mean the (only
// open) all-odd three-factor situation without a two-factor cycle.
struct MultiCertificate {
    std::vector<long long> lengths;
    std::vector<std::vector<long long>> pathA, pathB;
    MultiCase caseUsed = MultiCase::OpenUndecided;
};

MultiCertificate multicycle_pair(const std::vector<long long>& lengths);

// Both paths hamiltonian in the product digraph and arc-disjoint.
bool verify_multi(const MultiCertificate& cert);

}  // namespace cayham
