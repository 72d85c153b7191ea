#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cayham/abelian.hpp"
#include "cayham/quasipath.hpp"

namespace cayham {

struct CapExceeded : std::runtime_error {
    CapExceeded() : std::runtime_error("instance too large for exhaustive search") {}
};

// Exhaustive search over the two-out-regular digraph.  These are the
// independent reference implementations that the closed-form machinery is
// checked against; they know nothing about cosets or spectra.

// Number of hamiltonian paths (any endpoints).  Optionally collects each as
// a quasi-path descriptor.
long long oracle_enumerate_hp(const DigraphInstance& inst, long long cap = 24,
                              std::vector<QuasiPath>* listing = nullptr);

// Number of hamiltonian cycles.
long long oracle_enumerate_hc(const DigraphInstance& inst, long long cap = 24);

// Distinct b-arc counts over all hamiltonian paths.
std::set<long long> oracle_delta_b_set(const DigraphInstance& inst, long long cap = 24);

// Some pair of arc-disjoint hamiltonian paths, found by pairwise comparison
// of the full listing.
std::optional<std::pair<QuasiPath, QuasiPath>> oracle_pair_search(
    const DigraphInstance& inst, long long cap = 16);

// Whether two arc-disjoint hamiltonian cycles exist.
bool oracle_two_disjoint_hc(const DigraphInstance& inst, long long cap = 16);

struct ScanReport {
    long long bound = 0;
    long long instancesTried = 0;
    std::map<std::string, long long> succeededByStrategy;
    std::vector<std::string> failures;
    double wallTimeSeconds = 0;
};

// Constructs and verifies an arc-disjoint hamiltonian path pair on every
// 2-generated instance with |G| <= maxOrder, generating pairs taken up to
// swap and simultaneous negation (plus unit rescaling on cyclic groups).
ScanReport scan_conjecture(long long maxOrder, bool useOracleFallback = false,
                           int jobs = 1);

}  // namespace cayham
