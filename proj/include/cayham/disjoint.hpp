#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayham/abelian.hpp"
#include "cayham/quasipath.hpp"

namespace cayham {

struct DeltaGapTooLarge : InvalidInput {
    DeltaGapTooLarge() : InvalidInput("arc-disjoint mates need |k - l'| <= 1") {}
};

// From the quasi-path P with b-arc count k (terminal coset -a + <a-b>),
// carves a quasi-path with a-arc count l' out of the complement of P by
// removing two arcs (or one, when the complement already has the right
// shape).  Requires |k - l'| <= 1.  Returns (P, mate).
std::pair<QuasiPath, QuasiPath> make_disjoint(const DigraphInstance& inst,
                                              long long k, long long lPrime);

enum class PairStrategy { EvenIndex, SpectrumSearch, LabelDisjoint, OracleFallback };

const char* to_string(PairStrategy s);

struct PairCertificate {
    QuasiPath p, pPrime;
    PairStrategy strategy = PairStrategy::SpectrumSearch;
    bool verified = false;
};

// Two arc-disjoint hamiltonian paths, or nullopt if the b-arc spectrum has
// no two values summing to |G|, |G|-1 or |G|-2 (with an optional exhaustive
// fallback for very small instances).
std::optional<PairCertificate> arc_disjoint_hp_pair(const DigraphInstance& inst,
                                                    bool oracleFallback = false);

// Reduction of an odd-index instance to a cyclic one with consecutive
// connection set.  With I = 2t+1 and c = t*a + t*b, either c+a and c+b are
// both nonzero and generate the same digraph as Cay(Z_k; l, l+1), or one of
// them vanishes and the instance is Cay(Z_k; -alpha, alpha+1) in disguise.
struct ReduceResult {
    enum class Kind { EvenIndexCase, PosFamily, NegFamily } kind;
    long long k = 0;      // cyclic group order
    long long gen = 0;    // l (PosFamily) or alpha (NegFamily)
};
ReduceResult reduce_to_cyclic(const DigraphInstance& inst);

struct PairReport {
    bool ok = true;
    std::vector<std::string> checked;
    std::vector<std::string> failed;
    void record(const std::string& name, bool pass) {
        checked.push_back(name);
        if (!pass) {
            failed.push_back(name);
            ok = false;
        }
    }
};
PairReport verify_pair(const DigraphInstance& inst, const PairCertificate& cert);

// Certified lower bound for the number of unordered arc-disjoint hamiltonian
// path pairs in C_m x C_n: b-arc counts coming from interior spectrum points
// are pairwise >= 2 apart, so thickening the set R of such counts by one on
// each side and intersecting with its reflection at |G|-1 yields, after
// halving, discarding the few values near |G|/2 and multiplying by the |G|
// translates, a count of genuinely distinct pairs.
struct BoundResult {
    long long rSize = 0;
    long long intersectSize = 0;
    long long excluded = 0;
    long long lowerBoundPairs = 0;
};
BoundResult pair_count_bound(long long m, long long n);

}  // namespace cayham
