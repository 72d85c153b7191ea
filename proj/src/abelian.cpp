#include "cayham/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace cayham {

static long long mod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

GroupSpec GroupSpec::finite(long long n1, long long n2) {
    if (n1 < 1 || n2 < 1 || n2 % n1 != 0)
        throw InvalidInput("invariant factors must satisfy n1 | n2");
    return {GroupKind::Finite, {n1, n2}};
}

GroupSpec GroupSpec::z_cross(long long m) {
    if (m < 2) throw InvalidInput("Z x Z_m needs m >= 2");
    return {GroupKind::ZxZm, {0, m}};
}

long long GroupSpec::order() const {
    if (kind != GroupKind::Finite) throw InvalidInput("infinite group has no order");
    return moduli[0] * moduli[1];
}

GroupElement reduce(const GroupSpec& g, GroupElement x) {
    switch (g.kind) {
        case GroupKind::Finite:
            return {mod(x.c[0], g.moduli[0]), mod(x.c[1], g.moduli[1])};
        case GroupKind::Z:
            return {x.c[0], 0};
        case GroupKind::ZxZm:
            return {x.c[0], mod(x.c[1], g.moduli[1])};
    }
    return x;
}

GroupElement add(const GroupSpec& g, GroupElement x, GroupElement y) {
    return reduce(g, {x.c[0] + y.c[0], x.c[1] + y.c[1]});
}

GroupElement sub(const GroupSpec& g, GroupElement x, GroupElement y) {
    return reduce(g, {x.c[0] - y.c[0], x.c[1] - y.c[1]});
}

GroupElement neg(const GroupSpec& g, GroupElement x) {
    return reduce(g, {-x.c[0], -x.c[1]});
}

GroupElement scale(const GroupSpec& g, long long k, GroupElement x) {
    return reduce(g, {k * x.c[0], k * x.c[1]});
}

bool is_zero(const GroupSpec& g, GroupElement x) {
    return reduce(g, x) == GroupElement{0, 0};
}

GroupSpec canonical_group(const std::vector<long long>& cyclicOrders) {
    std::vector<long long> f;
    for (long long k : cyclicOrders) {
        if (k < 1) throw InvalidInput("cyclic factor orders must be positive");
        if (k > 1) f.push_back(k);
    }
    if (f.empty()) return GroupSpec::finite(1, 1);
    // Repeatedly replace a non-dividing pair (x, y) by (gcd, lcm) until the
    // list forms a divisibility chain, then keep the two largest factors.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j) {
                if (f[i] % f[j] == 0 || f[j] % f[i] == 0) continue;
                long long g = std::gcd(f[i], f[j]);
                long long l = f[i] / g * f[j];
                f[i] = g;
                f[j] = l;
                changed = true;
            }
        std::erase(f, 1);
    }
    std::sort(f.begin(), f.end());
    if (f.size() > 2) throw NotTwoGenerated();
    if (f.size() == 1) return GroupSpec::finite(1, f[0]);
    return GroupSpec::finite(f[0], f[1]);
}

std::optional<long long> element_order(const GroupSpec& g, GroupElement x) {
    x = reduce(g, x);
    switch (g.kind) {
        case GroupKind::Finite: {
            long long o1 = g.moduli[0] / std::gcd(x.c[0], g.moduli[0]);
            long long o2 = g.moduli[1] / std::gcd(x.c[1], g.moduli[1]);
            return std::lcm(o1, o2);
        }
        case GroupKind::Z:
            if (x.c[0] == 0) return 1;
            return std::nullopt;
        case GroupKind::ZxZm:
            if (x.c[0] != 0) return std::nullopt;
            return g.moduli[1] / std::gcd(x.c[1], g.moduli[1]);
    }
    return std::nullopt;
}

DigraphInstance make_instance(const GroupSpec& g, GroupElement a, GroupElement b) {
    if (g.kind != GroupKind::Finite)
        throw InvalidInput("instances are defined for finite groups");
    DigraphInstance inst;
    inst.group = g;
    inst.a = reduce(g, a);
    inst.b = reduce(g, b);
    inst.order = g.order();
    if (is_zero(g, inst.a) || is_zero(g, inst.b)) throw TrivialGenerator();
    if (inst.a == inst.b) throw EqualGenerators();

    // Closure of {a, b} must be everything.
    std::vector<char> seen(inst.order, 0);
    std::vector<GroupElement> stack{{0, 0}};
    seen[0] = 1;
    long long reached = 1;
    while (!stack.empty()) {
        GroupElement v = stack.back();
        stack.pop_back();
        for (GroupElement w : {add(g, v, inst.a), add(g, v, inst.b)}) {
            long long idx = w.c[0] * g.moduli[1] + w.c[1];
            if (!seen[idx]) {
                seen[idx] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != inst.order) throw NotGenerating();

    inst.m = *element_order(g, inst.a);
    inst.n = inst.order / inst.m;
    inst.e = -1;
    GroupElement nb = scale(g, inst.n, inst.b);
    for (long long e = 0; e < inst.m; ++e)
        if (scale(g, e, inst.a) == nb) {
            inst.e = e;
            break;
        }
    assert(inst.e >= 0);
    inst.amb = sub(g, inst.a, inst.b);
    inst.N = *element_order(g, inst.amb);
    inst.I = inst.order / inst.N;
    assert(inst.I == std::gcd(std::abs(inst.n - inst.e), inst.m) ||
           (inst.n == inst.e && inst.I == inst.m));

    inst.cosetOf.assign(inst.order, -1);
    inst.shiftOf.assign(inst.order, -1);
    for (long long j = 0; j < inst.I; ++j) {
        GroupElement v = scale(g, j, inst.a);
        for (long long s = 0; s < inst.N; ++s) {
            long long idx = inst.index(v);
            assert(inst.cosetOf[idx] == -1);
            inst.cosetOf[idx] = static_cast<int32_t>(j);
            inst.shiftOf[idx] = static_cast<int32_t>(s);
            v = add(g, v, inst.amb);
        }
    }
    return inst;
}

long long coset_index(const DigraphInstance& inst, GroupElement x) {
    return inst.cosetOf[inst.index(reduce(inst.group, x))];
}

InstanceInvariants instance_invariants(const DigraphInstance& inst) {
    return {inst.m, inst.n, inst.e, inst.I, inst.N};
}

ProductInstance product_instance(long long m, long long n) {
    if (m < 2 || n < 2) throw InvalidInput("cycle lengths must be at least 2");
    long long g = std::gcd(m, n), l = std::lcm(m, n);
    GroupSpec spec = GroupSpec::finite(g, l);
    // Smith form of diag(m, n): with p*m + q*n = g the unimodular row map
    // (x, y) -> (p*x + q*y mod g, (m/g)*y - (n/g)*x mod l) is an isomorphism
    // Z_m x Z_n -> Z_g x Z_l.
    long long p, q;
    {
        long long old_r = m, r = n, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            long long div = old_r / r;
            std::tie(old_r, r) = std::make_pair(r, old_r - div * r);
            std::tie(old_s, s) = std::make_pair(s, old_s - div * s);
            std::tie(old_t, t) = std::make_pair(t, old_t - div * t);
        }
        p = old_s;
        q = old_t;
    }
    GroupElement A = reduce(spec, {p, -(n / g)});
    GroupElement B = reduce(spec, {q, m / g});

    ProductInstance pi;
    pi.m = m;
    pi.n = n;
    pi.inst = make_instance(spec, A, B);
    pi.toXY.assign(pi.inst.order, {-1, -1});
    for (long long x = 0; x < m; ++x)
        for (long long y = 0; y < n; ++y) {
            GroupElement v = add(spec, scale(spec, x, A), scale(spec, y, B));
            long long idx = pi.inst.index(v);
            assert(pi.toXY[idx].first == -1);
            pi.toXY[idx] = {x, y};
        }
    return pi;
}

GroupElement ProductInstance::embed(long long x, long long y) const {
    const GroupSpec& g = inst.group;
    return add(g, scale(g, x, inst.a), scale(g, y, inst.b));
}

}  // namespace cayham
