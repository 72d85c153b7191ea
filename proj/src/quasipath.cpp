#include "cayham/quasipath.hpp"

#include <cassert>
#include <numeric>

namespace cayham {

GroupElement QuasiPath::iota() const {
    GroupElement v = add(inst->group, tau, inst->a);
    return add(inst->group, v, scale(inst->group, d, inst->amb));
}

long long QuasiPath::deltaB() const {
    long long t = std::accumulate(byB.begin(), byB.end(), 0LL);
    return inst->N * t + d;
}

std::optional<bool> QuasiPath::travels_by_b(GroupElement v) const {
    long long idx = inst->index(reduce(inst->group, v));
    long long j = inst->cosetOf[idx];
    long long tidx = inst->index(tau);
    if (j != inst->cosetOf[tidx]) return byB[j] != 0;
    long long i = inst->shiftOf[idx] - inst->shiftOf[tidx];
    if (i < 0) i += inst->N;
    if (i == 0) return std::nullopt;
    return i <= d;
}

QuasiPath build_htd(const DigraphInstance& inst, long long t, long long d) {
    if (t < 0 || t >= inst.I || d < 0 || d >= inst.N)
        throw InvalidInput("need 0 <= t < I and 0 <= d < N");
    QuasiPath qp;
    qp.inst = &inst;
    qp.tau = sub(inst.group, scale(inst.group, d, sub(inst.group, inst.b, inst.a)),
                 inst.a);
    qp.d = d;
    qp.byB.assign(inst.I, 0);
    for (long long j = 0; j < t; ++j) qp.byB[j] = 1;
    assert(coset_index(inst, qp.tau) == inst.I - 1);
    assert(is_zero(inst.group, qp.iota()));
    return qp;
}

QuasiPath build_quasipath(const DigraphInstance& inst, GroupElement tau,
                          long long d, const std::vector<uint8_t>& byB) {
    if (d < 0 || d >= inst.N || static_cast<long long>(byB.size()) != inst.I)
        throw InvalidInput("need 0 <= d < N and one flag per coset");
    tau = reduce(inst.group, tau);
    if (byB[coset_index(inst, tau)]) throw TerminalCosetInByB();
    return {&inst, tau, d, byB};
}

Classification classify_and_deltas(const QuasiPath& qp) {
    const DigraphInstance& inst = *qp.inst;
    Classification c;
    c.iota = qp.iota();
    c.tau = qp.tau;
    c.deltaB = qp.deltaB();
    c.deltaA = qp.deltaA();
    GroupElement v = c.iota;
    c.visited = 1;
    while (v != qp.tau) {
        v = inst.step(v, *qp.travels_by_b(v));
        ++c.visited;
        assert(c.visited <= inst.order);
    }
    c.isHamPath = c.visited == inst.order;
    return c;
}

ArcSet materialize(const QuasiPath& qp) {
    const DigraphInstance& inst = *qp.inst;
    ArcSet s;
    s.outA.assign(inst.order, 0);
    s.outB.assign(inst.order, 0);
    for (long long idx = 0; idx < inst.order; ++idx) {
        auto byB = qp.travels_by_b(inst.vertex(idx));
        if (!byB) continue;
        (*byB ? s.outB : s.outA)[idx] = 1;
    }
    return s;
}

ArcSet complement_arcs(const QuasiPath& qp) {
    ArcSet s = materialize(qp);
    for (auto& f : s.outA) f = !f;
    for (auto& f : s.outB) f = !f;
    return s;
}

long long ArcSet::countA() const {
    return std::accumulate(outA.begin(), outA.end(), 0LL);
}
long long ArcSet::countB() const {
    return std::accumulate(outB.begin(), outB.end(), 0LL);
}

std::optional<QuasiPath> quasipath_from_arcs(const DigraphInstance& inst,
                                             const ArcSet& arcs) {
    long long tauIdx = -1;
    std::vector<uint8_t> indeg(inst.order, 0);
    for (long long idx = 0; idx < inst.order; ++idx) {
        int out = arcs.outA[idx] + arcs.outB[idx];
        if (out == 2) return std::nullopt;
        if (out == 0) {
            if (tauIdx >= 0) return std::nullopt;
            tauIdx = idx;
            continue;
        }
        GroupElement w = inst.step(inst.vertex(idx), arcs.outB[idx]);
        if (++indeg[inst.index(w)] > 1) return std::nullopt;
    }
    if (tauIdx < 0) return std::nullopt;

    GroupElement tau = inst.vertex(tauIdx);
    long long tcoset = inst.cosetOf[tauIdx];
    std::vector<uint8_t> byB(inst.I, 0);
    std::vector<int8_t> offsetLabel(inst.N, -1);  // terminal coset, by offset
    for (long long idx = 0; idx < inst.order; ++idx) {
        if (idx == tauIdx) continue;
        long long j = inst.cosetOf[idx];
        if (j != tcoset) {
            // uniform travel inside non-terminal cosets
            if (inst.shiftOf[idx] == 0)
                byB[j] = arcs.outB[idx];
            continue;
        }
        long long i = inst.shiftOf[idx] - inst.shiftOf[tauIdx];
        if (i < 0) i += inst.N;
        offsetLabel[i] = arcs.outB[idx];
    }
    long long d = 0;
    while (d + 1 < inst.N && offsetLabel[d + 1] == 1) ++d;
    for (long long i = d + 1; i < inst.N; ++i)
        if (offsetLabel[i] != 0) return std::nullopt;

    QuasiPath qp{&inst, tau, d, byB};
    ArcSet check = materialize(qp);
    if (check.outA != arcs.outA || check.outB != arcs.outB) return std::nullopt;
    return qp;
}

std::vector<GroupElement> vertex_sequence(const QuasiPath& qp) {
    std::vector<GroupElement> seq{qp.iota()};
    while (seq.back() != qp.tau) {
        assert(static_cast<long long>(seq.size()) <= qp.inst->order);
        seq.push_back(qp.inst->step(seq.back(), *qp.travels_by_b(seq.back())));
    }
    return seq;
}

}  // namespace cayham
