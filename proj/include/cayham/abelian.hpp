#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayham {

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotTwoGenerated : InvalidInput {
    NotTwoGenerated() : InvalidInput("group needs more than two generators") {}
};
struct NotGenerating : InvalidInput {
    NotGenerating() : InvalidInput("given elements do not generate the group") {}
};
struct TrivialGenerator : InvalidInput {
    TrivialGenerator() : InvalidInput("generator is the identity") {}
};
struct EqualGenerators : InvalidInput {
    EqualGenerators() : InvalidInput("generators coincide") {}
};

enum class GroupKind { Finite, Z, ZxZm };

// Finite groups are stored in invariant-factor form Z_{n1} x Z_{n2} with
// n1 | n2 (n1 == 1 for cyclic groups).  The infinite kinds are the integers
// and Z x Z_m; for those moduli[0] is unused and moduli[1] is m (0 for Z).
struct GroupSpec {
    GroupKind kind = GroupKind::Finite;
    std::array<long long, 2> moduli{1, 1};

    static GroupSpec finite(long long n1, long long n2);
    static GroupSpec integers() { return {GroupKind::Z, {0, 0}}; }
    static GroupSpec z_cross(long long m);

    long long order() const;  // finite kinds only
    bool operator==(const GroupSpec&) const = default;
};

struct GroupElement {
    std::array<long long, 2> c{0, 0};
    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
};

GroupElement reduce(const GroupSpec& g, GroupElement x);
GroupElement add(const GroupSpec& g, GroupElement x, GroupElement y);
GroupElement sub(const GroupSpec& g, GroupElement x, GroupElement y);
GroupElement neg(const GroupSpec& g, GroupElement x);
GroupElement scale(const GroupSpec& g, long long k, GroupElement x);
bool is_zero(const GroupSpec& g, GroupElement x);

// Invariant-factor decomposition of a direct product of cyclic groups.
// Throws NotTwoGenerated if the result needs three or more factors.
GroupSpec canonical_group(const std::vector<long long>& cyclicOrders);

// nullopt means infinite order.
std::optional<long long> element_order(const GroupSpec& g, GroupElement x);

// A finite 2-generated group together with a connection set {a, b}, the
// derived numeric profile and per-vertex tables for the cyclic subgroup
// generated by a-b:
//   m = ord(a), n = |G : <a>|, e the unique 0 <= e < m with n*b = e*a,
//   I = |G : <a-b>|, N = ord(a-b).
// Every vertex is j*a + s*(a-b) for unique j in [0,I), s in [0,N).
struct DigraphInstance {
    GroupSpec group;
    GroupElement a, b, amb;  // amb = a - b
    long long m = 0, n = 0, e = 0, I = 0, N = 0;
    long long order = 0;
    std::vector<int32_t> cosetOf;
    std::vector<int32_t> shiftOf;

    long long index(GroupElement v) const {
        return v.c[0] * group.moduli[1] + v.c[1];
    }
    GroupElement vertex(long long idx) const {
        return {idx / group.moduli[1], idx % group.moduli[1]};
    }
    GroupElement step(GroupElement v, bool byB) const {
        return add(group, v, byB ? b : a);
    }
};

DigraphInstance make_instance(const GroupSpec& g, GroupElement a, GroupElement b);

long long coset_index(const DigraphInstance& inst, GroupElement x);

struct InstanceInvariants {
    long long m, n, e, I, N;
};
InstanceInvariants instance_invariants(const DigraphInstance& inst);

// The torus digraph C_m x C_n presented on its invariant-factor group:
// an instance on Z_g x Z_l (g = gcd(m,n), l = lcm(m,n), cyclic when g = 1)
// whose generators correspond to the two unit steps, plus lookup tables
// between instance vertices and (x, y) coordinates.
struct ProductInstance {
    long long m, n;
    DigraphInstance inst;
    std::vector<std::pair<long long, long long>> toXY;  // by vertex index
    GroupElement embed(long long x, long long y) const;
};
ProductInstance product_instance(long long m, long long n);

}  // namespace cayham
