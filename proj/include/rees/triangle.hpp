// The rational triangle with slopes tbar < -1 < ubar < 0 < sbar, base
// (0,0)--(u,-u2), and the two boundary cones
//   S = R>=0 (u,-u2) + R>=0 (s3,s2),   T = R>=0 (-u,u2) + R>=0 (-t3,t).
// Column counts of m*triangle decide the EMU condition; the cone column
// counts a_i, b_{-i} drive the cover sets P_A, P_B and the minimal degree.
#pragma once

#include <rees/herzog.hpp>
#include <rees/rational.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace rees {

struct RationalTriangle {
    Rat tbar, ubar, sbar;
    Int u, u2;  // base endpoint (u, -u2); ubar = -u2/u in lowest terms
    std::pair<Rat, Rat> apex;
};

namespace detail {

inline std::pair<Rat, Rat> triangle_apex(const Rat& tbar, const Rat& sbar, const Int& u, const Int& u2) {
    // Intersection of beta = sbar*alpha with beta = tbar*(alpha-u) - u2.
    Rat x = (Rat(-tbar) * u - u2) / (sbar - tbar);
    return {x, sbar * x};
}

}  // namespace detail

inline RationalTriangle triangle_from_slopes(const Rat& tbar, const Rat& ubar, const Rat& sbar) {
    if (!(tbar < -1 && Rat(-1) < ubar && ubar < 0 && Rat(0) < sbar))
        throw std::invalid_argument("slopes must satisfy tbar < -1 < ubar < 0 < sbar");
    Int u = ubar.get_den();
    Int u2 = -ubar.get_num();
    RationalTriangle tri{tbar, ubar, sbar, u, u2, detail::triangle_apex(tbar, sbar, u, u2)};
    if (!(tri.apex.first > 0 && tri.apex.first < Rat(u)))
        throw std::invalid_argument("degenerate triangle: apex not strictly above the base");
    return tri;
}

inline RationalTriangle triangle_from_generators(const PrimeGenerators& g) {
    return triangle_from_slopes(make_rat(-g.t, g.t3), make_rat(-g.u2, g.u), make_rat(g.s2, g.s3));
}

inline RationalTriangle triangle_of(const MonomialTriple& tr) {
    return triangle_from_generators(herzog_generators(tr));
}

// 1/(sbar-ubar) + 1/(ubar-tbar) < 1; for a triangle coming from (a,b,c)
// this is the integer test u^2*c < a*b.
inline bool negative_curve_holds(const RationalTriangle& tri) {
    return Rat(1) / (tri.sbar - tri.ubar) + Rat(1) / (tri.ubar - tri.tbar) < 1;
}

struct ColumnProfile {
    long m;
    std::vector<Int> counts;  // q_1..q_{mu}
    std::vector<Int> sorted;  // ascending rearrangement
};

// Height of column i of m*triangle: upper edge is the lower envelope of the
// sbar edge through (0,0) and the tbar edge through (mu, -m*u2).
inline Int column_count(const RationalTriangle& tri, long m, long i) {
    Rat right_edge = tri.sbar * i;
    Rat left_edge = tri.tbar * (Rat(i) - Rat(tri.u) * m) - Rat(tri.u2) * m;
    Rat upper = std::min(right_edge, left_edge);
    Rat lower = tri.ubar * i;
    Int q = floor_rat(upper) - ceil_rat(lower) + 1;
    if (q < 0) q = 0;  // cannot happen for 1 <= i <= mu, guard anyway
    return q;
}

inline ColumnProfile column_counts(const RationalTriangle& tri, long m) {
    if (m < 1) throw std::invalid_argument("column_counts: m must be >= 1");
    long mu = m * to_ll(tri.u);
    ColumnProfile p{m, {}, {}};
    p.counts.reserve(mu);
    for (long i = 1; i <= mu; ++i) p.counts.push_back(column_count(tri, m, i));
    p.sorted = p.counts;
    std::sort(p.sorted.begin(), p.sorted.end());
    return p;
}

inline bool emu_from_sorted(const std::vector<Int>& sorted) {
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] < Int(static_cast<long>(i) + 1)) return false;
    return true;
}

inline bool emu(const RationalTriangle& tri, long m) {
    return emu_from_sorted(column_counts(tri, m).sorted);
}

// Memoized column counts of the cones S and T, with the conventions
// a_0 = b_0 = 1, a_i = 0 for i < 0 and b_i = 0 for i > 0.
class ConeProfile {
public:
    explicit ConeProfile(const RationalTriangle& tri)
        : sbar_(tri.sbar), tbar_(tri.tbar), ubar_(tri.ubar) {}

    // Profile given by explicit column counts (a_1..a_k, b_{-1}..b_{-k'})
    // valid for membership queries n+1 <= cap only; larger indices are
    // clamped to cap.  ubar still drives the basis arithmetic elsewhere.
    ConeProfile(const Rat& ubar, std::vector<Int> a_explicit, std::vector<Int> b_explicit, Int cap)
        : ubar_(ubar), a_explicit_(std::move(a_explicit)), b_explicit_(std::move(b_explicit)),
          cap_(std::move(cap)) {}

    Int a(long i) const {
        if (i < 0) return 0;
        if (i == 0) return 1;
        if (!a_explicit_.empty() || cap_ > 0) {
            if (i <= static_cast<long>(a_explicit_.size())) return a_explicit_[i - 1];
            return cap_;
        }
        auto it = a_memo_.find(i);
        if (it != a_memo_.end()) return it->second;
        Int v = floor_rat(sbar_ * i) - ceil_rat(ubar_ * i) + 1;
        a_memo_.emplace(i, v);
        return v;
    }

    // b(i) for i <= 0 is the count of column i of T; callers pass i <= 0.
    Int b(long i) const {
        if (i > 0) return 0;
        if (i == 0) return 1;
        long k = -i;
        if (!b_explicit_.empty() || cap_ > 0) {
            if (k <= static_cast<long>(b_explicit_.size())) return b_explicit_[k - 1];
            return cap_;
        }
        auto it = b_memo_.find(k);
        if (it != b_memo_.end()) return it->second;
        Int v = floor_rat(-tbar_ * k) - ceil_rat(-ubar_ * k) + 1;
        b_memo_.emplace(k, v);
        return v;
    }

    bool in_PA(long alpha, long n) const {
        return alpha >= 0 && n >= 0 && a(alpha) >= n + 1;
    }

    bool in_PB(long alpha, long n) const {
        return n >= 0 && b(alpha - n) >= n + 1;
    }

    const Rat& ubar() const { return ubar_; }

private:
    Rat sbar_, tbar_, ubar_;
    mutable std::map<long, Int> a_memo_, b_memo_;
    std::vector<Int> a_explicit_, b_explicit_;
    Int cap_ = 0;
};

inline ConeProfile cone_profile(const RationalTriangle& tri) { return ConeProfile(tri); }

namespace detail {

// Coverage of Z x [0,mu) by P_A and P_B is monotone outside
// [A_min, A_max]: to the right a_alpha >= mu, to the left b_{alpha-n} >= mu.
inline std::pair<long, long> cover_window(const ConeProfile& cp, long mu) {
    long amax = 0;
    while (cp.a(amax) < mu) ++amax;
    long k = 0;
    while (cp.b(-k) < mu) ++k;
    return {-k, amax};
}

}  // namespace detail

inline bool cover_check(const RationalTriangle& tri, long m) {
    ConeProfile cp(tri);
    long mu = m * to_ll(tri.u);
    auto [lo, hi] = detail::cover_window(cp, mu);
    for (long alpha = lo; alpha <= hi; ++alpha)
        for (long n = 0; n < mu; ++n)
            if (!cp.in_PA(alpha, n) && !cp.in_PB(alpha, n)) return false;
    return true;
}

inline std::vector<std::pair<long, long>> missing_points(const RationalTriangle& tri, long m) {
    ConeProfile cp(tri);
    long mu = m * to_ll(tri.u);
    auto [lo, hi] = detail::cover_window(cp, mu);
    std::vector<std::pair<long, long>> out;
    for (long n = 0; n < mu; ++n)
        for (long alpha = lo; alpha <= hi; ++alpha)
            if (!cp.in_PA(alpha, n) && !cp.in_PB(alpha, n)) out.emplace_back(alpha, n);
    return out;
}

struct MinimalDegreeDatum {
    long d;
    long f, fprime;
    std::pair<long, long> missing_point;  // (f, d)
};

// First stall of the merged ascending sequence 1, a_1, b_{-1}, a_2, b_{-2}, ...
// Requires the EMU condition to fail for m*triangle, which bounds d < mu.
inline MinimalDegreeDatum minimal_degree(const RationalTriangle& tri, long m = 1) {
    ConeProfile cp(tri);
    long mu = m * to_ll(tri.u);
    if (cp.b(-1) == 1) return {1, 0, 1, {0, 1}};
    if (cp.a(1) == 1) return {1, 1, 0, {1, 1}};
    // a_1, b_{-1} >= 2 makes both sequences strictly increasing; walk them
    // in lockstep until the first common value.
    long i = 1, j = 1;
    while (true) {
        Int ai = cp.a(i), bj = cp.b(-j);
        if (ai == bj) {
            if (ai >= mu) throw std::invalid_argument("minimal_degree: EMU holds, no minimal degree below m*u");
            long d = to_ll(ai);
            return {d, i, j, {i, d}};
        }
        if (ai < bj) ++i; else ++j;
        if (cp.a(i) > mu && cp.b(-j) > mu)
            throw std::invalid_argument("minimal_degree: EMU holds, no minimal degree below m*u");
    }
}

struct PickCounts {
    Rat area;      // area of the convex hull of m*triangle lattice points
    Int boundary;  // lattice points on the hull boundary
    Int interior;  // lattice points strictly inside
};

namespace detail {

inline std::vector<std::pair<Int, Int>> triangle_lattice_points(const RationalTriangle& tri, long m) {
    std::vector<std::pair<Int, Int>> pts;
    long mu = m * to_ll(tri.u);
    pts.emplace_back(0, 0);
    for (long i = 1; i <= mu; ++i) {
        Int lo = ceil_rat(tri.ubar * i);
        Int hi = lo + column_count(tri, m, i) - 1;
        for (Int beta = lo; beta <= hi; ++beta) pts.emplace_back(i, beta);
    }
    return pts;
}

inline Int cross(const std::pair<Int, Int>& o, const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Andrew monotone chain; input points are distinct.
inline std::vector<std::pair<Int, Int>> convex_hull(std::vector<std::pair<Int, Int>> pts) {
    std::sort(pts.begin(), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<std::pair<Int, Int>> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace detail

// Column i of the lattice region Gamma(-f', p1, p2; f, q1, q2):
//   alpha <= 0:  -p2*alpha/f' <= beta <= -p1*alpha/f'
//   alpha  > 0:   q2*alpha/f  <  beta <= q1*alpha/f
inline Int gamma_column_count(const Int& fprime, const Int& p1, const Int& p2, const Int& f,
                              const Int& q1, const Int& q2, long i) {
    if (i <= 0) {
        Int hi = floor_div(p1 * -i, fprime);
        Int lo = ceil_div(p2 * -i, fprime);
        Int cnt = hi - lo + 1;
        return cnt < 0 ? Int(0) : cnt;
    }
    Int hi = floor_div(q1 * i, f);
    Int lo = floor_div(q2 * i, f);  // strict lower bound: count = floor(hi) - floor(lo)
    Int cnt = hi - lo;
    return cnt < 0 ? Int(0) : cnt;
}

inline PickCounts pick_counts(const RationalTriangle& tri, long m) {
    auto pts = detail::triangle_lattice_points(tri, m);
    auto hull = detail::convex_hull(pts);
    if (hull.size() < 3) throw std::logic_error("pick_counts: degenerate hull");
    Int twice_area = 0, boundary = 0;
    for (size_t i = 0; i < hull.size(); ++i) {
        const auto& p = hull[i];
        const auto& q = hull[(i + 1) % hull.size()];
        twice_area += p.first * q.second - q.first * p.second;
        Int g;
        Int dx = q.first - p.first, dy = q.second - p.second;
        mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
        boundary += g;
    }
    if (twice_area < 0) twice_area = -twice_area;
    PickCounts pc;
    pc.area = make_rat(twice_area, 2);
    pc.boundary = boundary;
    pc.interior = Int(static_cast<long>(pts.size())) - boundary;
    return pc;
}

}  // namespace rees
