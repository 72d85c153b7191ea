#pragma once

#include <numeric>
#include <vector>

namespace cayham {

struct LatticePoint {
    long long x = 0, y = 0;
    bool operator==(const LatticePoint&) const = default;
};

bool is_primitive(LatticePoint p);

// Compares slopes of first-quadrant points; vertical (0, y) counts as the
// largest slope.  Returns <0, 0, >0 like a three-way comparison.
int slope_cmp(LatticePoint p, LatticePoint q);

struct Rational {
    long long num = 0, den = 1;
    void normalize() {
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g) { num /= g; den /= g; }
    }
    bool operator==(const Rational&) const = default;
};

// The triangle with vertices (0,0), (n,0), (e,m) is fanned into I slivers by
// the rays through X_t = (n - t*(n-e)/I, t*m/I), t = 0..I, I = gcd(n-e, m).
// Row t lists the primitive lattice points of the closed sliver between the
// X_t and X_{t+1} rays in increasing slope order, together with the weights
//   h(k) = floor((m*n - 1) / (m*x_k + (n-e)*y_k))
// and the partial sums u(1) = h(1), u(k) = u(k-1) + 2*h(k) for k < f.
struct TriangleRow {
    std::vector<LatticePoint> A;
    std::vector<long long> h;
    std::vector<long long> u;  // size f - 1
    long long f = 0;
};

struct TriangleProfile {
    long long m = 0, n = 0, e = 0, I = 0, N = 0;
    std::vector<LatticePoint> X;  // I + 1 spoke endpoints
    std::vector<TriangleRow> rows;
};

TriangleProfile triangle_partition(long long m, long long n, long long e);

enum class Region { Closed, Interior };

// Number of primitive lattice points of the triangle (boundary included or
// excluded).  Uses a Moebius-sieve row count for large parameters and a
// direct scan otherwise.
long long primitive_count(long long m, long long n, long long e, Region region);

struct DensityResult {
    long long count = 0;   // interior primitive points
    Rational area;         // m*n/2
    Rational ratio;        // count / area
};
DensityResult density_check(long long m, long long n, long long e);

}  // namespace cayham
