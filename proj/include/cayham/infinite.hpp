#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayham/abelian.hpp"

namespace cayham {

// Two-way infinite hamiltonian paths in Cay(G; a, b) for G = Z or Z x Z_m.
// A periodic path is determined by which cosets of <a-b> travel by a: with
// k of them by a and l = I - k by b, the walk advances by
// drift = k*a + l*b every I steps, and is a spanning path iff
// <drift> = <a-b>.  An arc-disjoint mate exists iff the complementary
// assignment (l by a, k by b) also satisfies the criterion.

struct PeriodicPathSpec {
    GroupSpec group;
    GroupElement a, b;
    long long I = 0;
    std::vector<uint8_t> byA;  // coset j (= j*a + <a-b>) travels by a
    long long k = 0, l = 0;
    GroupElement drift;
};

// |G : <g>|; nullopt when infinite.
std::optional<long long> cyclic_subgroup_index(const GroupSpec& g, GroupElement x);

bool same_cyclic_subgroup(const GroupSpec& g, GroupElement x, GroupElement y);

// First (k, l) with k + l = I and both k*a + l*b and l*a + k*b generating
// the same subgroup as a - b; nullopt when none (or I infinite).
std::optional<std::pair<long long, long long>> infinite_criterion_search(
    const GroupSpec& g, GroupElement a, GroupElement b);

struct InfiniteDecision {
    bool pairExists = false;
    std::optional<std::pair<long long, long long>> witness;
};

// Closed-form answer: over Z a pair needs a, b odd with {a,b} = {1,-1} or
// a + b = +-2; over Z x Z_m the connection set must be {(1,x), (-1,y)} with
// x + y generating Z_m, or m = 2 with {(0,1), (+-1, *)}.
InfiniteDecision decide_infinite_pair(const GroupSpec& g, GroupElement a,
                                      GroupElement b);

std::optional<std::pair<PeriodicPathSpec, PeriodicPathSpec>> build_periodic_pair(
    const GroupSpec& g, GroupElement a, GroupElement b);

// Single spanning path criterion (no mate required).
std::optional<PeriodicPathSpec> build_periodic_path(const GroupSpec& g,
                                                    GroupElement a, GroupElement b,
                                                    long long k);

struct WindowReport {
    bool ok = true;
    std::string reason;  // "collision detected", "periodicity violation", ...
};

// Simulates the walk over the given number of drift periods in both
// directions from 0, checking injectivity, the periodic recurrence and that
// the central band of the group is fully covered.
WindowReport verify_window(const PeriodicPathSpec& spec, long long periods = 10);

}  // namespace cayham
