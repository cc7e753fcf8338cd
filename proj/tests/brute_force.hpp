// Test-only oracles: direct lattice enumeration against the closed-form
// column counts, kept deliberately naive.
#pragma once

#include <rees/rational.hpp>
#include <rees/triangle.hpp>

#include <vector>

namespace rees::testing {

// Count lattice points (i, beta) of m*triangle column i by scanning a safe
// beta range and testing the three edge inequalities exactly.
inline Int enumerate_triangle_column(const RationalTriangle& tri, long m, long i) {
    Int lo = floor_rat(tri.ubar * i) - 2;
    Int hi = ceil_rat(tri.sbar * i) + 2;
    Int count = 0;
    for (Int b = lo; b <= hi; ++b) {
        Rat beta(b);
        bool above_base = beta >= tri.ubar * i;
        bool below_s = beta <= tri.sbar * i;
        bool below_t = beta <= tri.tbar * (Rat(i) - Rat(tri.u) * m) - Rat(tri.u2) * m;
        if (above_base && below_s && below_t) ++count;
    }
    return count;
}

// Column i >= 1 of the cone S = R>=0 (u,-u2) + R>=0 (s3,s2).
inline Int enumerate_cone_S_column(const RationalTriangle& tri, long i) {
    Int lo = floor_rat(tri.ubar * i) - 2;
    Int hi = ceil_rat(tri.sbar * i) + 2;
    Int count = 0;
    for (Int b = lo; b <= hi; ++b) {
        Rat beta(b);
        if (beta >= tri.ubar * i && beta <= tri.sbar * i) ++count;
    }
    return count;
}

// Column -i (i >= 1) of the cone T = R>=0 (-u,u2) + R>=0 (-t3,t).
inline Int enumerate_cone_T_column(const RationalTriangle& tri, long i) {
    Rat a(-static_cast<long>(i));
    Int lo = floor_rat(tri.ubar * a) - 2;
    Int hi = ceil_rat(tri.tbar * a) + 2;
    Int count = 0;
    for (Int b = lo; b <= hi; ++b) {
        Rat beta(b);
        if (beta >= tri.ubar * a && beta <= tri.tbar * a) ++count;
    }
    return count;
}

// Lattice points of Gamma(-f', p1, p2; f, q1, q2) in column i.
inline long enumerate_gamma_column(long fp, long p1, long p2, long f,
                                        long q1, long q2, long i) {
    long count = 0;
    auto mag = [](long x) { return x > 0 ? x : -x; };
    long span = (mag(p1) + mag(p2) + mag(q1) + mag(q2) + 4) * (mag(i) + 2);
    for (long b = -span; b <= span; ++b) {
        if (i <= 0) {
            // -p2*i/f' <= b <= -p1*i/f'
            if (make_rat(-p2 * i, fp) <= Rat(b) && Rat(b) <= make_rat(-p1 * i, fp)) ++count;
        } else {
            // q2*i/f < b <= q1*i/f
            if (make_rat(q2 * i, f) < Rat(b) && Rat(b) <= make_rat(q1 * i, f)) ++count;
        }
    }
    return count;
}

}  // namespace rees::testing
