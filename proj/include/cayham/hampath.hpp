#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cayham/abelian.hpp"
#include "cayham/lattice.hpp"
#include "cayham/quasipath.hpp"

namespace cayham {

using BigInt = boost::multiprecision::cpp_int;

struct NotACycle : std::runtime_error {
    NotACycle() : std::runtime_error("coset assignment does not close a single cycle") {}
};

// All (t, d) for which the standard family member is a hamiltonian path:
// d must be one of the partial sums u_t(k), k < f_t, of row t.
struct HPSpectrum {
    std::vector<std::pair<long long, long long>> validTD;
    std::set<long long> deltas;  // b-arc counts t*N + d
};
HPSpectrum hp_spectrum(const DigraphInstance& inst);
HPSpectrum hp_spectrum(const TriangleProfile& tp);

// Number of hamiltonian paths in the instance: for each valid (t, d) any t of
// the I-1 non-terminal cosets may be the b-travelling ones, and each of the
// |G| translates is distinct.
BigInt count_hp(const DigraphInstance& inst);

// Hamiltonian cycle facts for the torus digraph C_m x C_n.  A cycle exists
// iff gcd(m, n) splits as alpha + beta with gcd(alpha, m) = gcd(beta, n) = 1;
// two arc-disjoint cycles need the stronger gcd(alpha*beta, m*n) = 1.
struct HCStatus {
    bool hasHC = false;
    std::optional<std::pair<long long, long long>> hcSplit;
    bool hasTwoDisjointHC = false;
    std::optional<std::pair<long long, long long>> disjointSplit;
};
HCStatus product_hc_status(long long m, long long n);

// The cycle through C_m x C_n determined by a split: diagonals 0..alpha-1
// (classified by (x+y) mod gcd) step in the first coordinate, the rest in
// the second.  Returns the vertex cycle; throws NotACycle if it closes early.
std::vector<std::pair<long long, long long>> build_product_hc(long long m, long long n,
                                                              long long alpha,
                                                              long long beta);

// General cycle existence: some choice of k cosets travelling by a (and
// I - k by b) closes into one cycle iff <k*a + (I-k)*b> = <a-b>.
bool has_hc(const DigraphInstance& inst);

}  // namespace cayham
