#include "cayham/oracle.hpp"

#include <atomic>
#include <cassert>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "cayham/disjoint.hpp"
#include "cayham/hampath.hpp"
#include "cayham/lattice.hpp"

namespace cayham {

namespace {

struct Succ {
    std::vector<int> a, b;
};

Succ successors(const DigraphInstance& inst) {
    Succ s;
    s.a.resize(inst.order);
    s.b.resize(inst.order);
    for (long long i = 0; i < inst.order; ++i) {
        GroupElement v = inst.vertex(i);
        s.a[i] = static_cast<int>(inst.index(inst.step(v, false)));
        s.b[i] = static_cast<int>(inst.index(inst.step(v, true)));
    }
    return s;
}

// Depth-first enumeration of spanning paths; emit receives the vertex order
// and per-vertex b-labels (label of the arc leaving path[i]).
void enumerate_paths(const DigraphInstance& inst, long long cap,
                     const std::function<void(const std::vector<int>&,
                                              const std::vector<uint8_t>&)>& emit) {
    if (inst.order > cap) throw CapExceeded();
    Succ s = successors(inst);
    std::vector<int> path(inst.order);
    std::vector<uint8_t> labels(inst.order);
    std::function<void(int, uint32_t, int)> dfs = [&](int v, uint32_t mask, int len) {
        path[len - 1] = v;
        if (len == inst.order) {
            emit(path, labels);
            return;
        }
        for (int byB = 0; byB < 2; ++byB) {
            int w = byB ? s.b[v] : s.a[v];
            if (mask & (1u << w)) continue;
            labels[len - 1] = static_cast<uint8_t>(byB);
            dfs(w, mask | (1u << w), len + 1);
        }
    };
    for (int start = 0; start < inst.order; ++start)
        dfs(start, 1u << start, 1);
}

QuasiPath path_to_quasipath(const DigraphInstance& inst, const std::vector<int>& path,
                            const std::vector<uint8_t>& labels) {
    ArcSet arcs;
    arcs.outA.assign(inst.order, 0);
    arcs.outB.assign(inst.order, 0);
    for (size_t i = 0; i + 1 < path.size(); ++i)
        (labels[i] ? arcs.outB : arcs.outA)[path[i]] = 1;
    auto qp = quasipath_from_arcs(inst, arcs);
    assert(qp);
    return *qp;
}

}  // namespace

long long oracle_enumerate_hp(const DigraphInstance& inst, long long cap,
                              std::vector<QuasiPath>* listing) {
    long long count = 0;
    enumerate_paths(inst, cap,
                    [&](const std::vector<int>& path, const std::vector<uint8_t>& labels) {
                        ++count;
                        if (listing) listing->push_back(path_to_quasipath(inst, path, labels));
                    });
    return count;
}

long long oracle_enumerate_hc(const DigraphInstance& inst, long long cap) {
    if (inst.order > cap) throw CapExceeded();
    Succ s = successors(inst);
    long long count = 0;
    std::function<void(int, uint32_t, int)> dfs = [&](int v, uint32_t mask, int len) {
        if (len == inst.order) {
            if (s.a[v] == 0 || s.b[v] == 0) ++count;
            return;
        }
        for (int byB = 0; byB < 2; ++byB) {
            int w = byB ? s.b[v] : s.a[v];
            if (w == 0 || (mask & (1u << w))) continue;
            dfs(w, mask | (1u << w), len + 1);
        }
    };
    dfs(0, 1u, 1);
    return count;
}

std::set<long long> oracle_delta_b_set(const DigraphInstance& inst, long long cap) {
    std::set<long long> deltas;
    enumerate_paths(inst, cap,
                    [&](const std::vector<int>& path, const std::vector<uint8_t>& labels) {
                        long long b = 0;
                        for (size_t i = 0; i + 1 < path.size(); ++i) b += labels[i];
                        deltas.insert(b);
                    });
    return deltas;
}

std::optional<std::pair<QuasiPath, QuasiPath>> oracle_pair_search(
    const DigraphInstance& inst, long long cap) {
    if (inst.order > cap) throw CapExceeded();
    std::vector<QuasiPath> listing;
    std::vector<uint64_t> masks;
    enumerate_paths(inst, cap,
                    [&](const std::vector<int>& path, const std::vector<uint8_t>& labels) {
                        uint64_t m = 0;
                        for (size_t i = 0; i + 1 < path.size(); ++i)
                            m |= 1ull << (2 * path[i] + labels[i]);
                        listing.push_back(path_to_quasipath(inst, path, labels));
                        masks.push_back(m);
                    });
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = i; j < masks.size(); ++j)
            if ((masks[i] & masks[j]) == 0)
                return std::make_pair(listing[i], listing[j]);
    return std::nullopt;
}

bool oracle_two_disjoint_hc(const DigraphInstance& inst, long long cap) {
    if (inst.order > cap) throw CapExceeded();
    Succ s = successors(inst);
    std::vector<uint64_t> masks;
    std::vector<int> path(inst.order);
    std::vector<uint8_t> labels(inst.order);
    std::function<void(int, uint32_t, int)> dfs = [&](int v, uint32_t mask, int len) {
        path[len - 1] = v;
        if (len == inst.order) {
            for (int byB = 0; byB < 2; ++byB)
                if ((byB ? s.b[v] : s.a[v]) == 0) {
                    uint64_t m = 1ull << (2 * v + byB);
                    for (int i = 0; i + 1 < inst.order; ++i)
                        m |= 1ull << (2 * path[i] + labels[i]);
                    masks.push_back(m);
                }
            return;
        }
        for (int byB = 0; byB < 2; ++byB) {
            int w = byB ? s.b[v] : s.a[v];
            if (w == 0 || (mask & (1u << w))) continue;
            labels[len - 1] = static_cast<uint8_t>(byB);
            dfs(w, mask | (1u << w), len + 1);
        }
    };
    dfs(0, 1u, 1);
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = i + 1; j < masks.size(); ++j)
            if ((masks[i] & masks[j]) == 0) return true;
    return false;
}

namespace {

// |Z^2 : <rows>| where the rows always include (n1, 0) and (0, n2); the
// elements generate the group exactly when this is 1.
long long pair_lattice_index(long long n1, long long n2, GroupElement a,
                             GroupElement b) {
    long long r1x = n1, r1y = 0, r2y = n2;
    auto fold = [&](long long vx, long long vy) {
        // bring (vx, vy) into the basis {(r1x, r1y), (0, r2y)}
        long long old_r = r1x, r = vx, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            long long q = old_r / r;
            std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
            std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
            std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
        }
        long long g = old_r == 0 ? 0 : old_r;
        long long newY = old_s * r1y + old_t * vy;
        long long residY = g == 0 ? vy : (r1x / g) * vy - (vx / g) * r1y;
        if (g != 0) {
            r1x = g;
            r1y = newY;
        }
        r2y = std::gcd(r2y, residY < 0 ? -residY : residY);
    };
    fold(a.c[0], a.c[1]);
    fold(b.c[0], b.c[1]);
    if (r2y == 0) return 0;
    r1y %= r2y;
    return r1x * r2y;
}

struct PairChoice {
    long long x = -1, y = -1;
    PairStrategy strategy = PairStrategy::SpectrumSearch;
};

PairChoice choose_deltas(const TriangleProfile& tp) {
    PairChoice c;
    long long order = tp.m * tp.n;
    if (tp.I % 2 == 0) {
        long long t = tp.I / 2;
        long long u = tp.rows[t].u[0];
        c.x = t * tp.N + u;
        c.y = (t - 1) * tp.N + (tp.N - 1 - u);
        c.strategy = PairStrategy::EvenIndex;
        return c;
    }
    HPSpectrum sp = hp_spectrum(tp);
    std::vector<long long> D(sp.deltas.begin(), sp.deltas.end());
    for (long long target : {order - 1, order, order - 2}) {
        long long lo = 0, hi = static_cast<long long>(D.size()) - 1;
        while (lo <= hi) {
            long long s = D[lo] + D[hi];
            if (s == target) {
                c.x = D[lo];
                c.y = D[hi];
                c.strategy = (c.x == 0 && c.y == order - 1)
                                 ? PairStrategy::LabelDisjoint
                                 : PairStrategy::SpectrumSearch;
                return c;
            }
            if (s < target)
                ++lo;
            else
                --hi;
        }
    }
    return c;
}

struct ScanWorkerState {
    std::map<std::array<long long, 3>, PairChoice> cache;
    long long tried = 0;
    std::map<std::string, long long> byStrategy;
    std::vector<std::string> failures;
};

void scan_instance(const GroupSpec& spec, GroupElement a, GroupElement b,
                   bool useOracleFallback, ScanWorkerState& st) {
    DigraphInstance inst = make_instance(spec, a, b);
    ++st.tried;
    auto describe = [&] {
        std::ostringstream os;
        os << (spec.moduli[0] == 1 ? "Z:" : "Z2:");
        if (spec.moduli[0] == 1)
            os << spec.moduli[1];
        else
            os << spec.moduli[0] << "," << spec.moduli[1];
        os << " a=(" << a.c[0] << "," << a.c[1] << ") b=(" << b.c[0] << "," << b.c[1]
           << ")";
        return os.str();
    };

    std::array<long long, 3> key{inst.m, inst.n, inst.e};
    auto it = st.cache.find(key);
    if (it == st.cache.end())
        it = st.cache.emplace(key, choose_deltas(triangle_partition(inst.m, inst.n, inst.e)))
                 .first;
    const PairChoice& choice = it->second;

    PairCertificate cert;
    if (choice.x >= 0) {
        auto [p, q] = make_disjoint(inst, choice.x, inst.order - 1 - choice.y);
        cert.p = p;
        cert.pPrime = q;
        cert.strategy = choice.strategy;
    } else {
        if (!useOracleFallback || inst.order > 64) {
            st.failures.push_back(describe() + ": no spectrum pair");
            return;
        }
        auto found = oracle_pair_search(inst);
        if (!found) {
            st.failures.push_back(describe() + ": exhaustive search found no pair");
            return;
        }
        cert.p = found->first;
        cert.pPrime = found->second;
        cert.strategy = PairStrategy::OracleFallback;
    }
    PairReport rep = verify_pair(inst, cert);
    if (!rep.ok) {
        std::string msg = describe() + ": verification failed:";
        for (const auto& f : rep.failed) msg += " [" + f + "]";
        st.failures.push_back(msg);
        return;
    }
    ++st.byStrategy[to_string(cert.strategy)];
}

void scan_group(long long n1, long long n2, bool useOracleFallback,
                ScanWorkerState& st) {
    GroupSpec spec = GroupSpec::finite(n1, n2);
    long long order = n1 * n2;
    auto elem = [&](long long idx) { return GroupElement{idx / n2, idx % n2}; };
    auto idx_of = [&](GroupElement v) { return v.c[0] * n2 + v.c[1]; };
    for (long long i1 = 1; i1 < order; ++i1)
        for (long long i2 = i1 + 1; i2 < order; ++i2) {
            GroupElement a = elem(i1), b = elem(i2);
            // keep only the representative under simultaneous negation
            long long j1 = idx_of(neg(spec, a)), j2 = idx_of(neg(spec, b));
            if (j1 > j2) std::swap(j1, j2);
            if (std::make_pair(j1, j2) < std::make_pair(i1, i2)) continue;
            if (pair_lattice_index(n1, n2, a, b) != 1) continue;
            scan_instance(spec, a, b, useOracleFallback, st);
        }
}

}  // namespace

ScanReport scan_conjecture(long long maxOrder, bool useOracleFallback, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<long long, long long>> groups;
    for (long long n1 = 1; n1 * n1 <= maxOrder; ++n1)
        for (long long n2 = std::max(n1, 2LL); n1 * n2 <= maxOrder; ++n2)
            if (n2 % n1 == 0) groups.emplace_back(n1, n2);

    ScanReport report;
    report.bound = maxOrder;
    std::atomic<size_t> next{0};
    std::mutex merge;
    auto worker = [&] {
        ScanWorkerState st;
        for (size_t g; (g = next.fetch_add(1)) < groups.size();)
            scan_group(groups[g].first, groups[g].second, useOracleFallback, st);
        std::lock_guard<std::mutex> lock(merge);
        report.instancesTried += st.tried;
        for (const auto& [k, v] : st.byStrategy) report.succeededByStrategy[k] += v;
        report.failures.insert(report.failures.end(), st.failures.begin(),
                               st.failures.end());
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    report.wallTimeSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace cayham
