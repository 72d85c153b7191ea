#pragma once

#include <optional>
#include <vector>

#include "cayham/abelian.hpp"

namespace cayham {

struct TerminalCosetInByB : InvalidInput {
    TerminalCosetInByB()
        : InvalidInput("terminal coset cannot travel uniformly by b") {}
};

// Spanning subdigraph with out-degree 1 everywhere except a single terminal
// vertex tau, determined by tau, a cut position d in [0, N), and the set of
// cosets of <a-b> that travel by b.  Vertices of the terminal coset travel by
// b at offsets 1..d from tau and by a beyond; the unique source is
// iota = tau + a + d*(a-b).  Such a subdigraph is a path from iota to tau
// plus possibly some disjoint cycles.
struct QuasiPath {
    const DigraphInstance* inst = nullptr;
    GroupElement tau;
    long long d = 0;
    std::vector<uint8_t> byB;  // indexed by coset, terminal coset must be 0

    GroupElement iota() const;
    long long deltaB() const;  // number of b-arcs: N * |byB| + d
    long long deltaA() const { return inst->order - 1 - deltaB(); }
    // Travel generator of v; nullopt for tau.
    std::optional<bool> travels_by_b(GroupElement v) const;
};

// The standard one-parameter family: terminal coset -a + <a-b>, cosets
// 0..t-1 travel by b, initial vertex 0, terminal vertex -a + d*(b-a).
QuasiPath build_htd(const DigraphInstance& inst, long long t, long long d);

QuasiPath build_quasipath(const DigraphInstance& inst, GroupElement tau,
                          long long d, const std::vector<uint8_t>& byB);

struct Classification {
    bool isHamPath = false;
    long long visited = 0;  // vertices on the path component
    long long deltaA = 0, deltaB = 0;
    GroupElement iota, tau;
};
Classification classify_and_deltas(const QuasiPath& qp);

// One out-arc flag pair per vertex index; a quasi-path has exactly one flag
// set per non-terminal vertex, its complement has two set at tau.
struct ArcSet {
    std::vector<uint8_t> outA, outB;
    long long countA() const;
    long long countB() const;
};
ArcSet materialize(const QuasiPath& qp);
ArcSet complement_arcs(const QuasiPath& qp);

// Recovers the symbolic form from an explicit arc set, or nullopt if the
// degree profile is not that of a quasi-path.
std::optional<QuasiPath> quasipath_from_arcs(const DigraphInstance& inst,
                                             const ArcSet& arcs);

// Walk of the path component, from iota to tau.
std::vector<GroupElement> vertex_sequence(const QuasiPath& qp);

}  // namespace cayham
