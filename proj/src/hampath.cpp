#include "cayham/hampath.hpp"

#include <cassert>
#include <numeric>

namespace cayham {

HPSpectrum hp_spectrum(const TriangleProfile& tp) {
    HPSpectrum sp;
    for (long long t = 0; t < tp.I; ++t)
        for (long long u : tp.rows[t].u) {
            sp.validTD.emplace_back(t, u);
            sp.deltas.insert(t * tp.N + u);
        }
    return sp;
}

HPSpectrum hp_spectrum(const DigraphInstance& inst) {
    return hp_spectrum(triangle_partition(inst.m, inst.n, inst.e));
}

static BigInt binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt count_hp(const DigraphInstance& inst) {
    HPSpectrum sp = hp_spectrum(inst);
    BigInt total = 0;
    for (auto [t, d] : sp.validTD) total += binom(inst.I - 1, t);
    return total * inst.order;
}

HCStatus product_hc_status(long long m, long long n) {
    HCStatus st;
    long long g = std::gcd(m, n);
    for (long long alpha = 1; alpha < g; ++alpha) {
        long long beta = g - alpha;
        if (!st.hasHC && std::gcd(alpha, m) == 1 && std::gcd(beta, n) == 1) {
            st.hasHC = true;
            st.hcSplit = {alpha, beta};
        }
        if (!st.hasTwoDisjointHC && std::gcd(alpha * beta, m * n) == 1) {
            st.hasTwoDisjointHC = true;
            st.disjointSplit = {alpha, beta};
        }
    }
    return st;
}

std::vector<std::pair<long long, long long>> build_product_hc(long long m, long long n,
                                                              long long alpha,
                                                              long long beta) {
    long long g = std::gcd(m, n);
    if (alpha < 1 || beta < 1 || alpha + beta != g)
        throw InvalidInput("need alpha, beta >= 1 with alpha + beta = gcd(m, n)");
    std::vector<std::pair<long long, long long>> cyc;
    cyc.reserve(m * n);
    long long x = 0, y = 0;
    do {
        cyc.emplace_back(x, y);
        if ((x + y) % g < alpha)
            x = (x + 1) % m;
        else
            y = (y + 1) % n;
    } while (!(x == 0 && y == 0));
    if (static_cast<long long>(cyc.size()) != m * n) throw NotACycle();
    return cyc;
}

bool has_hc(const DigraphInstance& inst) {
    const GroupSpec& g = inst.group;
    for (long long k = 0; k <= inst.I; ++k) {
        GroupElement drift = add(g, scale(g, k, inst.a), scale(g, inst.I - k, inst.b));
        if (*element_order(g, drift) == inst.N) {
            // drift lies in <a-b> (both sides of a-b agree mod the subgroup),
            // so full order means the generated subgroups coincide
            return true;
        }
    }
    return false;
}

}  // namespace cayham
