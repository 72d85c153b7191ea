#include "cayham/disjoint.hpp"

#include <algorithm>
#include <cassert>

#include "cayham/hampath.hpp"
#include "cayham/lattice.hpp"
#include "cayham/oracle.hpp"

namespace cayham {

namespace {

void remove_out(const DigraphInstance& inst, ArcSet& s, GroupElement v, bool byB) {
    auto& flags = byB ? s.outB : s.outA;
    long long idx = inst.index(v);
    assert(flags[idx]);
    flags[idx] = 0;
}

void remove_in(const DigraphInstance& inst, ArcSet& s, GroupElement v, bool byB) {
    remove_out(inst, s, sub(inst.group, v, byB ? inst.b : inst.a), byB);
}

// Arc of the given label with the smallest source index.
long long find_arc(const ArcSet& s, bool byB) {
    const auto& flags = byB ? s.outB : s.outA;
    for (long long idx = 0; idx < static_cast<long long>(flags.size()); ++idx)
        if (flags[idx]) return idx;
    return -1;
}

}  // namespace

std::pair<QuasiPath, QuasiPath> make_disjoint(const DigraphInstance& inst,
                                              long long k, long long lPrime) {
    if (k < 0 || k >= inst.order || lPrime < 0 || lPrime >= inst.order)
        throw InvalidInput("b-arc counts lie in [0, |G|-1]");
    if (std::abs(k - lPrime) > 1) throw DeltaGapTooLarge();

    QuasiPath p = build_htd(inst, k / inst.N, k % inst.N);
    ArcSet comp = complement_arcs(p);  // a-arc count k+1, both out-arcs at tau
    GroupElement iota = p.iota(), tau = p.tau;
    long long removeA = k + 1 - lPrime;  // 0, 1 or 2

    int arcTauIota = -1;  // -1 none, 0 labelled a, 1 labelled b
    if (add(inst.group, tau, inst.a) == iota)
        arcTauIota = 0;
    else if (add(inst.group, tau, inst.b) == iota)
        arcTauIota = 1;

    if (arcTauIota < 0) {
        // Drop one out-arc of tau and one in-arc of iota; the label pair is
        // forced except in the mixed case, where the in-arc with the smaller
        // source index is removed.
        bool s1, s2;  // true = b-labelled
        if (removeA == 2)
            s1 = s2 = false;
        else if (removeA == 0)
            s1 = s2 = true;
        else {
            long long srcA = inst.index(sub(inst.group, iota, inst.a));
            long long srcB = inst.index(sub(inst.group, iota, inst.b));
            s2 = srcB < srcA;
            s1 = !s2;
        }
        remove_out(inst, comp, tau, s1);
        remove_in(inst, comp, iota, s2);
    } else if (removeA == 2 && arcTauIota == 1) {
        remove_out(inst, comp, tau, false);
        remove_in(inst, comp, iota, false);
    } else if (removeA == 0 && arcTauIota == 0) {
        remove_out(inst, comp, tau, true);
        remove_in(inst, comp, iota, true);
    } else {
        // Removing the arc tau -> iota leaves a union of cycles; one more
        // deletion of the right label opens it into a quasi-path.
        remove_out(inst, comp, tau, arcTauIota == 1);
        bool extraByB = removeA - (arcTauIota == 0 ? 1 : 0) == 0;
        long long src = find_arc(comp, extraByB);
        assert(src >= 0);
        remove_out(inst, comp, inst.vertex(src), extraByB);
    }

    std::optional<QuasiPath> mate = quasipath_from_arcs(inst, comp);
    assert(mate);
    assert(mate->deltaA() == lPrime);
    return {p, *mate};
}

const char* to_string(PairStrategy s) {
    switch (s) {
        case PairStrategy::EvenIndex: return "even-index";
        case PairStrategy::SpectrumSearch: return "spectrum-search";
        case PairStrategy::LabelDisjoint: return "label-disjoint";
        case PairStrategy::OracleFallback: return "oracle-fallback";
    }
    return "?";
}

std::optional<PairCertificate> arc_disjoint_hp_pair(const DigraphInstance& inst,
                                                    bool oracleFallback) {
    TriangleProfile tp = triangle_partition(inst.m, inst.n, inst.e);
    HPSpectrum sp = hp_spectrum(tp);
    std::vector<long long> D(sp.deltas.begin(), sp.deltas.end());

    long long x = -1, y = -1;
    PairStrategy strategy = PairStrategy::SpectrumSearch;
    if (inst.I % 2 == 0) {
        long long t = inst.I / 2;
        long long u = tp.rows[t].u[0];
        x = t * inst.N + u;
        y = (t - 1) * inst.N + (inst.N - 1 - u);
        assert(sp.deltas.count(x) && sp.deltas.count(y));
        strategy = PairStrategy::EvenIndex;
    } else {
        for (long long target : {inst.order - 1, inst.order, inst.order - 2}) {
            long long lo = 0, hi = static_cast<long long>(D.size()) - 1;
            while (lo <= hi) {
                long long s = D[lo] + D[hi];
                if (s == target) {
                    x = D[lo];
                    y = D[hi];
                    break;
                }
                if (s < target)
                    ++lo;
                else
                    --hi;
            }
            if (x >= 0) break;
        }
        if (x == 0 && y == inst.order - 1) strategy = PairStrategy::LabelDisjoint;
    }

    PairCertificate cert;
    if (x < 0) {
        if (!oracleFallback || inst.order > 64) return std::nullopt;
        auto found = oracle_pair_search(inst);
        if (!found) return std::nullopt;
        cert.p = found->first;
        cert.pPrime = found->second;
        cert.strategy = PairStrategy::OracleFallback;
    } else {
        auto [p, q] = make_disjoint(inst, x, inst.order - 1 - y);
        cert.p = p;
        cert.pPrime = q;
        cert.strategy = strategy;
    }
    cert.verified = verify_pair(inst, cert).ok;
    return cert;
}

ReduceResult reduce_to_cyclic(const DigraphInstance& inst) {
    if (inst.I % 2 == 0) return {ReduceResult::Kind::EvenIndexCase};
    long long t = (inst.I - 1) / 2;
    const GroupSpec& g = inst.group;
    GroupElement c = scale(g, t, add(g, inst.a, inst.b));
    GroupElement ca = add(g, c, inst.a), cb = add(g, c, inst.b);
    if (!is_zero(g, ca) && !is_zero(g, cb)) {
        for (long long l = 0; l < inst.N; ++l)
            if (scale(g, l, inst.amb) == cb)
                return {ReduceResult::Kind::PosFamily, inst.N, l};
        assert(false && "c + b must lie in <a-b> when I is odd");
    }
    return {ReduceResult::Kind::NegFamily, inst.order, t};
}

PairReport verify_pair(const DigraphInstance& inst, const PairCertificate& cert) {
    PairReport rep;
    Classification cp = classify_and_deltas(cert.p);
    Classification cq = classify_and_deltas(cert.pPrime);
    rep.record("first path hamiltonian", cp.isHamPath);
    rep.record("second path hamiltonian", cq.isHamPath);

    ArcSet ap = materialize(cert.p), aq = materialize(cert.pPrime);
    bool disjoint = true;
    for (long long i = 0; i < inst.order; ++i)
        if ((ap.outA[i] && aq.outA[i]) || (ap.outB[i] && aq.outB[i])) disjoint = false;
    rep.record("arc sets disjoint", disjoint);

    rep.record("b-count of first within one of a-count of second",
               std::abs(cp.deltaB - cq.deltaA) <= 1);

    if (!rep.ok) return rep;

    bool arcTauIota = add(inst.group, cp.tau, inst.a) == cp.iota ||
                      add(inst.group, cp.tau, inst.b) == cp.iota;
    if (!arcTauIota) {
        rep.record("second source adjacent to first terminal",
                   cq.iota == add(inst.group, cp.tau, inst.a) ||
                       cq.iota == add(inst.group, cp.tau, inst.b));
        rep.record("second terminal adjacent to first source",
                   cq.tau == sub(inst.group, cp.iota, inst.a) ||
                       cq.tau == sub(inst.group, cp.iota, inst.b));
        // Both generators advance the coset by one, so adjacency at both
        // ends forces the two sources into one coset and the two terminals
        // into another.
        rep.record("sources share a coset and terminals share a coset",
                   coset_index(inst, cp.iota) == coset_index(inst, cq.iota) &&
                       coset_index(inst, cp.tau) == coset_index(inst, cq.tau));
    }
    if (inst.order % 2 == 0 && inst.I % 2 == 1 && !has_hc(inst))
        rep.record("endpoint sums agree",
                   add(inst.group, cp.iota, cp.tau) == add(inst.group, cq.iota, cq.tau));
    return rep;
}

BoundResult pair_count_bound(long long m, long long n) {
    TriangleProfile tp = triangle_partition(m, n, 0);
    long long order = m * n;
    BoundResult res;
    std::vector<char> inR(order + 2, 0);
    for (long long t = 0; t < tp.I; ++t) {
        const TriangleRow& row = tp.rows[t];
        for (size_t k = 0; k + 1 < row.A.size(); ++k) {
            LatticePoint p = row.A[k];
            if (p.y < 1 || p.x < 1 || m * p.x + n * p.y >= order) continue;
            long long v = t * tp.N + row.u[k];
            if (!inR[v]) {
                inR[v] = 1;
                ++res.rSize;
            }
        }
    }
    for (long long v = 0; v <= order; ++v) {
        bool plus = inR[v] || (v >= 1 && inR[v - 1]);
        if (!plus) continue;
        long long w = order - 1 - v;
        if (w < 0 || w > order) continue;
        bool minus = inR[w] || (w + 1 <= order && inR[w + 1]);
        if (!minus) continue;
        ++res.intersectSize;
        if (std::abs(2 * v - order) <= 2) ++res.excluded;
    }
    res.lowerBoundPairs = (res.intersectSize - res.excluded) / 2 * order;
    return res;
}

}  // namespace cayham
