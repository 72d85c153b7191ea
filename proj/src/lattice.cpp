#include "cayham/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "cayham/abelian.hpp"

namespace cayham {

bool is_primitive(LatticePoint p) {
    return std::gcd(p.x < 0 ? -p.x : p.x, p.y < 0 ? -p.y : p.y) == 1;
}

int slope_cmp(LatticePoint p, LatticePoint q) {
    long long lhs = p.y * q.x, rhs = q.y * p.x;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

static void check_params(long long m, long long n, long long e) {
    if (m < 1 || n < 1 || e < 0 || e >= m)
        throw InvalidInput("need m, n >= 1 and 0 <= e < m");
}

TriangleProfile triangle_partition(long long m, long long n, long long e) {
    check_params(m, n, e);
    TriangleProfile tp;
    tp.m = m;
    tp.n = n;
    tp.e = e;
    tp.I = n == e ? m : std::gcd(n > e ? n - e : e - n, m);
    tp.N = m * n / tp.I;
    for (long long t = 0; t <= tp.I; ++t)
        tp.X.push_back({n - t * (n - e) / tp.I, t * m / tp.I});
    tp.rows.resize(tp.I);

    long long xmax = std::max(n, e);
    for (long long y = 0; y <= m; ++y)
        for (long long x = (y == 0 ? 1 : 0); x <= xmax; ++x) {
            LatticePoint p{x, y};
            if (!is_primitive(p)) continue;
            if (m * x + (n - e) * y > m * n) continue;
            if (slope_cmp(p, tp.X[tp.I]) > 0) continue;
            // Largest t with slope(X_t) <= slope(p); ties sit on a shared
            // spoke and belong to the rows on both sides.
            long long lo = 0, hi = tp.I;
            while (lo < hi) {
                long long mid = (lo + hi + 1) / 2;
                if (slope_cmp(tp.X[mid], p) <= 0)
                    lo = mid;
                else
                    hi = mid - 1;
            }
            if (lo < tp.I) tp.rows[lo].A.push_back(p);
            if (lo >= 1 && slope_cmp(tp.X[lo], p) == 0)
                tp.rows[lo - 1].A.push_back(p);
        }

    for (auto& row : tp.rows) {
        std::sort(row.A.begin(), row.A.end(),
                  [](LatticePoint a, LatticePoint b) { return slope_cmp(a, b) < 0; });
        row.f = static_cast<long long>(row.A.size());
        assert(row.f >= 2);
        for (LatticePoint p : row.A)
            row.h.push_back((m * n - 1) / (m * p.x + (n - e) * p.y));
        row.u.push_back(row.h[0]);
        for (long long k = 1; k + 1 < row.f; ++k)
            row.u.push_back(row.u.back() + 2 * row.h[k]);
    }
    return tp;
}

static long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return r != 0 && ((r < 0) != (b < 0)) ? q - 1 : q;
}

static long long ceil_div(long long a, long long b) {
    return -floor_div(-a, b);
}

// Lattice points of the (scaled-down by k) triangle, counted row by row.
static long long multiples_count(long long m, long long n, long long e,
                                 long long k, Region region) {
    long long cnt = 0;
    if (region == Region::Closed) {
        for (long long y = 0; y * k <= m; ++y) {
            long long lo = ceil_div(e * y, m);
            long long hi = floor_div(m * n - (n - e) * k * y, k * m);
            if (hi >= lo) cnt += hi - lo + 1;
        }
    } else {
        for (long long y = 1; y * k <= m - 1; ++y) {
            long long lo = floor_div(e * y, m) + 1;
            long long hi = floor_div(m * n - (n - e) * k * y - 1, k * m);
            if (hi >= lo) cnt += hi - lo + 1;
        }
    }
    return cnt;
}

static std::vector<int> moebius_table(long long K) {
    std::vector<int> mu(K + 1, 1);
    std::vector<char> composite(K + 1, 0);
    std::vector<long long> primes;
    for (long long i = 2; i <= K; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (long long p : primes) {
            if (i * p > K) break;
            composite[i * p] = 1;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

long long primitive_count(long long m, long long n, long long e, Region region) {
    check_params(m, n, e);
    long long xmax = std::max(n, e);
    if ((xmax + 1) * (m + 1) <= 1 << 16) {
        long long cnt = 0;
        for (long long y = 0; y <= m; ++y)
            for (long long x = (y == 0 ? 1 : 0); x <= xmax; ++x) {
                LatticePoint p{x, y};
                if (!is_primitive(p)) continue;
                if (region == Region::Closed) {
                    if (m * x + (n - e) * y > m * n) continue;
                    if (m * x < e * y) continue;
                } else {
                    if (y < 1) continue;
                    if (m * x + (n - e) * y >= m * n) continue;
                    if (m * x <= e * y) continue;
                }
                ++cnt;
            }
        return cnt;
    }
    long long K = std::max(m, xmax);
    std::vector<int> mu = moebius_table(K);
    long long total = 0;
    for (long long k = 1; k <= K; ++k) {
        if (mu[k] == 0) continue;
        long long c = multiples_count(m, n, e, k, region);
        if (region == Region::Closed) c -= 1;  // drop the origin
        total += mu[k] * c;
    }
    return total;
}

DensityResult density_check(long long m, long long n, long long e) {
    DensityResult r;
    r.count = primitive_count(m, n, e, Region::Interior);
    r.area = {m * n, 2};
    r.area.normalize();
    r.ratio = {2 * r.count, m * n};
    r.ratio.normalize();
    return r;
}

}  // namespace cayham
