#include "cayham/multicycle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "cayham/disjoint.hpp"
#include "cayham/hampath.hpp"
#include "cayham/oracle.hpp"
#include "cayham/quasipath.hpp"

namespace cayham {

const char* to_string(MultiCase c) {
    switch (c) {
        case MultiCase::HCLift: return "hc-lift";
        case MultiCase::LaminatedParity: return "laminated-parity";
        case MultiCase::LengthTwo: return "length-two";
        case MultiCase::OracleFallback: return "oracle-fallback";
        case MultiCase::OpenUndecided: return "open-undecided";
    }
    return "?";
}

namespace {

using Tuple = std::vector<long long>;

// A (possibly contracted) cyclic factor: position v on the cycle corresponds
// to a tuple of original coordinates, consecutive positions differing by +1
// in exactly one coordinate.
struct Factor {
    long long len = 0;
    std::vector<Tuple> ring;
};

Tuple combine(const std::vector<long long>& lengths, const Tuple& s, const Tuple& t) {
    Tuple r(s);
    for (size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + t[i]) % lengths[i];
    return r;
}

Factor merge_by_hc(const std::vector<long long>& lengths, const Factor& f1,
                   const Factor& f2, long long alpha, long long beta) {
    auto cyc = build_product_hc(f1.len, f2.len, alpha, beta);
    Factor merged;
    merged.len = f1.len * f2.len;
    merged.ring.reserve(merged.len);
    for (auto [x, y] : cyc)
        merged.ring.push_back(combine(lengths, f1.ring[x], f2.ring[y]));
    return merged;
}

// Arc-disjoint path pair on the torus C_{f1.len} x C_{f2.len}, already
// expressed as (x, y) position pairs.
struct XYPair {
    std::vector<std::pair<long long, long long>> p, q;
};

XYPair two_factor_pair(long long m, long long n) {
    ProductInstance pi = product_instance(m, n);
    auto cert = arc_disjoint_hp_pair(pi.inst);
    assert(cert && cert->verified);
    XYPair out;
    for (GroupElement v : vertex_sequence(cert->p)) out.p.push_back(pi.toXY[pi.inst.index(v)]);
    for (GroupElement v : vertex_sequence(cert->pPrime))
        out.q.push_back(pi.toXY[pi.inst.index(v)]);
    return out;
}

// One hamiltonian cycle of a three-factor product, by depth-first search.
Factor contract_three(const std::vector<long long>& lengths, const Factor& f1,
                      const Factor& f2, const Factor& f3) {
    long long n1 = f1.len, n2 = f2.len, n3 = f3.len;
    long long total = n1 * n2 * n3;
    if (total > 10000) throw CapExceeded();
    std::vector<char> visited(total, 0);
    std::vector<long long> order;
    order.reserve(total);
    long long budget = 200000000;
    std::function<bool(long long)> dfs = [&](long long v) {
        if (--budget < 0) throw CapExceeded();
        visited[v] = 1;
        order.push_back(v);
        long long x = v / (n2 * n3), y = v / n3 % n2, z = v % n3;
        if (static_cast<long long>(order.size()) == total)
            return ((x + 1) % n1 == 0 && y == 0 && z == 0) ||
                   (x == 0 && (y + 1) % n2 == 0 && z == 0) ||
                   (x == 0 && y == 0 && (z + 1) % n3 == 0);
        for (long long w : {((x + 1) % n1) * n2 * n3 + y * n3 + z,
                            x * n2 * n3 + ((y + 1) % n2) * n3 + z,
                            x * n2 * n3 + y * n3 + (z + 1) % n3})
            if (!visited[w] && dfs(w)) return true;
        visited[v] = 0;
        order.pop_back();
        return false;
    };
    bool found = dfs(0);
    assert(found);
    (void)found;
    Factor merged;
    merged.len = total;
    for (long long v : order) {
        Tuple t = combine(lengths, f1.ring[v / (n2 * n3)], f2.ring[v / n3 % n2]);
        merged.ring.push_back(combine(lengths, t, f3.ring[v % n3]));
    }
    return merged;
}

}  // namespace

MultiCertificate multicycle_pair(const std::vector<long long>& lengths) {
    if (lengths.size() < 3) throw InvalidInput("need at least three cycle factors");
    for (long long l : lengths)
        if (l < 2) throw InvalidInput("cycle lengths must be at least 2");

    MultiCertificate cert;
    cert.lengths = lengths;
    size_t r = lengths.size();

    std::vector<Factor> factors(r);
    for (size_t i = 0; i < r; ++i) {
        factors[i].len = lengths[i];
        for (long long v = 0; v < lengths[i]; ++v) {
            Tuple t(r, 0);
            t[i] = v;
            factors[i].ring.push_back(t);
        }
    }

    bool usedFallback = false;
    while (factors.size() > 2) {
        // contract the first pair (in index order) whose torus has a
        // hamiltonian cycle
        bool mergedOne = false;
        for (size_t i = 0; i < factors.size() && !mergedOne; ++i)
            for (size_t j = i + 1; j < factors.size() && !mergedOne; ++j) {
                HCStatus st = product_hc_status(factors[i].len, factors[j].len);
                if (!st.hasHC) continue;
                Factor merged = merge_by_hc(lengths, factors[i], factors[j],
                                            st.hcSplit->first, st.hcSplit->second);
                factors[i] = std::move(merged);
                factors.erase(factors.begin() + j);
                mergedOne = true;
            }
        if (mergedOne) continue;

        if (factors.size() >= 4) {
            Factor merged = contract_three(lengths, factors[0], factors[1], factors[2]);
            factors.erase(factors.begin() + 1, factors.begin() + 3);
            factors[0] = std::move(merged);
            usedFallback = true;
            continue;
        }

        // three factors, no two of which span a cycle
        auto isEven = [](const Factor& f) { return f.len % 2 == 0; };
        auto itE = std::find_if(factors.begin(), factors.end(), isEven);
        auto itO = std::find_if(factors.begin(), factors.end(),
                                [&](const Factor& f) { return !isEven(f); });
        if (itE == factors.end() || itO == factors.end()) {
            cert.caseUsed = MultiCase::OpenUndecided;
            return cert;
        }
        const Factor &fe = *itE, &fo = *itO;
        const Factor& fl = factors[3 - (itE - factors.begin()) - (itO - factors.begin())];

        XYPair xy = two_factor_pair(fe.len, fo.len);
        long long E = fe.len, O = fo.len, L = fl.len;
        auto tr = [&](std::pair<long long, long long> v, long long w) {
            return std::make_pair((v.first + w) % E, (v.second + w) % O);
        };
        // layer shift: terminal of each layer path must sit under the next
        // layer's source
        auto tau = xy.p.back(), iota = xy.p.front();
        auto tau2 = xy.q.back(), iota2 = xy.q.front();
        long long dx = ((tau.first - iota2.first) % E + E) % E;
        long long dy = ((tau.second - iota2.second) % O + O) % O;
        assert(dx == ((tau2.first - iota.first) % E + E) % E &&
               dy == ((tau2.second - iota.second) % O + O) % O);
        assert(tau != tau2);
        auto trD = [&](std::pair<long long, long long> v, long long w) {
            return std::make_pair((v.first + w * dx) % E, (v.second + w * dy) % O);
        };
        (void)tr;
        auto emit = [&](std::vector<Tuple>& path, bool startWithP) {
            for (long long w = 0; w < L; ++w) {
                const auto& layer = (w % 2 == 0) == startWithP ? xy.p : xy.q;
                for (auto v : layer) {
                    auto [x, y] = trD(v, w);
                    Tuple t = combine(lengths, fe.ring[x], fo.ring[y]);
                    path.push_back(combine(lengths, t, fl.ring[w]));
                }
            }
        };
        emit(cert.pathA, true);
        emit(cert.pathB, false);
        cert.caseUsed = usedFallback ? MultiCase::OracleFallback : MultiCase::LaminatedParity;
        return cert;
    }

    XYPair xy = two_factor_pair(factors[0].len, factors[1].len);
    for (auto [x, y] : xy.p)
        cert.pathA.push_back(combine(lengths, factors[0].ring[x], factors[1].ring[y]));
    for (auto [x, y] : xy.q)
        cert.pathB.push_back(combine(lengths, factors[0].ring[x], factors[1].ring[y]));
    cert.caseUsed = usedFallback ? MultiCase::OracleFallback : MultiCase::HCLift;
    return cert;
}

bool verify_multi(const MultiCertificate& cert) {
    long long total = 1;
    for (long long l : cert.lengths) total *= l;
    auto key = [&](const Tuple& t) {
        long long k = 0;
        for (size_t i = 0; i < t.size(); ++i) k = k * cert.lengths[i] + t[i];
        return k;
    };
    auto checkPath = [&](const std::vector<Tuple>& path,
                         std::set<std::pair<long long, int>>& arcs) {
        if (static_cast<long long>(path.size()) != total) return false;
        std::set<long long> seen;
        for (const Tuple& t : path)
            if (!seen.insert(key(t)).second) return false;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            int step = -1;
            for (size_t c = 0; c < cert.lengths.size(); ++c) {
                if (path[i][c] == path[i + 1][c]) continue;
                if ((path[i][c] + 1) % cert.lengths[c] != path[i + 1][c] || step >= 0)
                    return false;
                step = static_cast<int>(c);
            }
            if (step < 0) return false;
            arcs.insert({key(path[i]), step});
        }
        return true;
    };
    std::set<std::pair<long long, int>> arcsA, arcsB;
    if (!checkPath(cert.pathA, arcsA) || !checkPath(cert.pathB, arcsB)) return false;
    for (const auto& arc : arcsA)
        if (arcsB.count(arc)) return false;
    return true;
}

}  // namespace cayham
