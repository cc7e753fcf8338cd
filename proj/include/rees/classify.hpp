// Classification of EMU-failing triples: the f_i/g_i recurrences, the
// (n, lambda, gamma, delta) datum attached to a failing triple with column
// counts l_1 = n >= 3 and l_{u-1} = 2, the slope/triple correspondence
// (psi and its inverse phi), and a constructive search producing a triple
// realizing a given datum.
#pragma once

#include <rees/herzog.hpp>
#include <rees/rational.hpp>
#include <rees/triangle.hpp>

#include <optional>
#include <variant>
#include <vector>

namespace rees {

// (f_i, g_i) with (f_0,g_0) = (1,1) and the step matrix [[n-2,1],[n-3,1]];
// satisfies f_i = g_i + f_{i-1}, f_i = (n-1) f_{i-1} - f_{i-2} and the
// unimodularity det [[f_i, f_{i-1}], [g_i, g_{i-1}]] = 1.
struct FGSequence {
    long n;
    std::vector<std::pair<Int, Int>> pairs;  // index i = 0..limit
};

inline FGSequence fg_sequence(long n, long limit) {
    if (n < 3) throw std::invalid_argument("fg_sequence: n must be >= 3");
    if (limit < 0) throw std::invalid_argument("fg_sequence: limit must be >= 0");
    FGSequence s{n, {{Int(1), Int(1)}}};
    for (long i = 1; i <= limit; ++i) {
        const auto& [f, g] = s.pairs.back();
        s.pairs.emplace_back((n - 2) * f + g, (n - 3) * f + g);
    }
    return s;
}

// Column i of Gamma(-f_{lambda+1}, 2f_{lambda+1}, g_{lambda+1};
//                   f_lambda, (n-1)f_lambda, -g_lambda),
// the region that the boundary cones of an EMU-failing triple of class
// (n,lambda) trace out between the columns -f_{lambda+1} and f_lambda.
inline Int gamma_counts(long n, long lambda, long i) {
    auto fg = fg_sequence(n, lambda + 1);
    const auto& [fl, gl] = fg.pairs[lambda];
    const auto& [fl1, gl1] = fg.pairs[lambda + 1];
    return gamma_column_count(fl1, 2 * fl1, gl1, fl, (n - 1) * fl, -gl, i);
}

struct SlopeTriple {
    Rat r1, r2, r3;  // r1 < -1 < r2 < 0 < r3
    friend bool operator==(const SlopeTriple&, const SlopeTriple&) = default;
};

inline void check_slopes(const SlopeTriple& s) {
    if (!(s.r1 < -1 && Rat(-1) < s.r2 && s.r2 < 0 && Rat(0) < s.r3))
        throw std::invalid_argument("slopes must satisfy r1 < -1 < r2 < 0 < r3");
}

// The primitive vectors (r_{i1}, r_{i2}) generate Z^2 iff the gcd of the
// three 2x2 minors is 1.
inline bool lattice_span_check(const SlopeTriple& s) {
    check_slopes(s);
    auto vec = [](const Rat& r) { return std::pair<Int, Int>{r.get_num(), r.get_den()}; };
    auto [a1, a2] = vec(s.r1);
    auto [b1, b2] = vec(s.r2);
    auto [c1, c2] = vec(s.r3);
    Int m12 = a1 * b2 - b1 * a2;
    Int m13 = a1 * c2 - c1 * a2;
    Int m23 = b1 * c2 - c1 * b2;
    Int g;
    mpz_gcd(g.get_mpz_t(), m12.get_mpz_t(), m13.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m23.get_mpz_t());
    return g == 1;
}

inline SlopeTriple psi(const MonomialTriple& triple) {
    auto g = herzog_generators(triple);
    return {make_rat(-g.t, g.t3), make_rat(-g.u2, g.u), make_rat(g.s2, g.s3)};
}

// Inverse of psi: the positive primitive solution of
// b (r_{11},r_{12}) - c (r_{21},r_{22}) + a (r_{31},r_{32}) = (0,0).
inline MonomialTriple phi(const SlopeTriple& s) {
    check_slopes(s);
    auto vec = [](const Rat& r) { return std::pair<Int, Int>{r.get_num(), r.get_den()}; };
    auto [t1v, t2v] = vec(s.r1);
    auto [u1v, u2v] = vec(s.r2);
    auto [s1v, s2v] = vec(s.r3);
    // Kernel of the 2x3 matrix with columns C1, C2, C3 is spanned by
    // (det[C2 C3], -det[C1 C3], det[C1 C2]); match against (b, -c, a).
    Int b = u1v * s2v - s1v * u2v;
    Int c = t1v * s2v - s1v * t2v;
    Int a = t1v * u2v - u1v * t2v;
    // The slope ordering makes all three minors negative.
    a = -a; b = -b; c = -c;
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) throw std::invalid_argument("phi: degenerate slope data");
    a /= g; b /= g; c /= g;
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("phi: no positive solution for the slope data");
    MonomialTriple out{a, b, c};
    if (!pairwise_coprime(out))
        throw std::invalid_argument("phi: solution is not pairwise coprime (lattice span fails)");
    return out;
}

inline MonomialTriple mirror(const MonomialTriple& t) { return {t.b, t.a, t.c}; }

struct ClassificationDatum {
    long n = 0;       // l_1 after mirroring
    long lambda = 0;  // minimal degree d = f_lambda + f_{lambda+1}
    Int gamma, delta;      // u = gamma f_lambda + delta f_{lambda+1}, same for u2 with g
    bool mirrored = false;
    friend bool operator==(const ClassificationDatum&, const ClassificationDatum&) = default;
};

enum class NotApplicable {
    emu_holds,       // nothing to classify
    edge_count_one,  // l_1 = 1 or l_{u-1} = 1
    both_two,        // l_1 = l_{u-1} = 2 with u >= 3
};

using ClassifyResult = std::variant<ClassificationDatum, NotApplicable>;

inline bool verify_classification(const ClassificationDatum& datum, const MonomialTriple& triple) {
    if (datum.n < 3 || datum.lambda < 0) return false;
    if (datum.gamma < 1 || datum.delta < 1) return false;
    if (datum.gamma == 1 && datum.delta == 1) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), datum.gamma.get_mpz_t(), datum.delta.get_mpz_t());
    if (g != 1) return false;

    PrimeGenerators gens;
    try {
        gens = herzog_generators(datum.mirrored ? mirror(triple) : triple);
    } catch (const CompleteIntersectionError&) {
        return false;
    }
    auto fg = fg_sequence(datum.n, datum.lambda + 1);
    const auto& [fl, gl] = fg.pairs[datum.lambda];
    const auto& [fl1, gl1] = fg.pairs[datum.lambda + 1];

    if (gens.u != datum.gamma * fl + datum.delta * fl1) return false;
    if (gens.u2 != datum.gamma * gl + datum.delta * gl1) return false;

    Rat sbar = make_rat(gens.s2, gens.s3);
    Rat neg_tbar = make_rat(gens.t, gens.t3);
    if (!(Rat(datum.n - 1) <= sbar && sbar < make_rat((datum.n - 1) * fl + 1, fl))) return false;
    if (!(Rat(2) <= neg_tbar && neg_tbar < make_rat(2 * fl1 + 1, fl1))) return false;
    return negative_curve_holds(triangle_from_generators(gens));
}

inline ClassifyResult classify(const MonomialTriple& triple) {
    auto gens = herzog_generators(triple);
    auto tri = triangle_from_generators(gens);
    if (!negative_curve_holds(tri))
        throw HypothesisError("classify: z^u - x^s3 y^t3 is not a negative curve");

    auto profile = column_counts(tri, 1);
    if (emu_from_sorted(profile.sorted)) return NotApplicable::emu_holds;

    long u = to_ll(gens.u);
    bool mirrored = profile.counts.front() < profile.counts[u - 2];
    if (mirrored) {
        gens = herzog_generators(mirror(triple));
        tri = triangle_from_generators(gens);
        profile = column_counts(tri, 1);
    }
    Int l1 = profile.counts.front();
    Int lu1 = profile.counts[u - 2];

    if (l1 == 1 || lu1 == 1) return NotApplicable::edge_count_one;
    if (l1 == 2 && lu1 == 2) return NotApplicable::both_two;
    if (lu1 != 2 || l1 < 3)
        throw std::logic_error("classify: EMU fails with l_1 and l_{u-1} both >= 3");

    long n = to_ll(l1);
    auto md = minimal_degree(tri, 1);
    auto fg = fg_sequence(n, 1);
    long lambda = 0;
    while (fg.pairs[lambda].first + fg.pairs[lambda + 1].first < md.d) {
        fg = fg_sequence(n, ++lambda + 1);
    }
    if (fg.pairs[lambda].first + fg.pairs[lambda + 1].first != md.d)
        throw std::logic_error("classify: minimal degree is not of the form f_lambda + f_{lambda+1}");

    const auto& [fl, gl] = fg.pairs[lambda];
    const auto& [fl1, gl1] = fg.pairs[lambda + 1];
    // det [[f_lambda, f_{lambda+1}], [g_lambda, g_{lambda+1}]] = -1
    Int gamma = -gl1 * gens.u + fl1 * gens.u2;
    Int delta = gl * gens.u - fl * gens.u2;

    ClassificationDatum datum{n, lambda, gamma, delta, mirrored};
    if (!verify_classification(datum, triple))
        throw std::logic_error("classify: datum failed verification");
    return datum;
}

// Search for a triple realizing the datum.  Slope targets are
// s' = ((n-1) f_lambda + 1)/f_lambda and t' = -(2 f_{lambda+1}+1)/f_{lambda+1};
// candidates walk the Stern-Brocot tree from n-1 up towards s' and from -2
// down towards t', which keeps every mediant in lowest terms.
inline MonomialTriple construct_triple(const ClassificationDatum& datum, const Int& max_den = Int(1000000)) {
    if (datum.n < 3 || datum.lambda < 0 || datum.gamma < 1 || datum.delta < 1)
        throw std::invalid_argument("construct_triple: invalid datum");
    {
        Int g;
        mpz_gcd(g.get_mpz_t(), datum.gamma.get_mpz_t(), datum.delta.get_mpz_t());
        if (g != 1 || (datum.gamma == 1 && datum.delta == 1))
            throw std::invalid_argument("construct_triple: (gamma,delta) must be coprime and != (1,1)");
    }
    auto fg = fg_sequence(datum.n, datum.lambda + 1);
    const auto& [fl, gl] = fg.pairs[datum.lambda];
    const auto& [fl1, gl1] = fg.pairs[datum.lambda + 1];
    Int u = datum.gamma * fl + datum.delta * fl1;
    Int u2 = datum.gamma * gl + datum.delta * gl1;
    Rat ubar = make_rat(-u2, u);

    ClassificationDatum want = datum;
    want.mirrored = false;

    auto mediant = [](const Rat& x, const Rat& y) {
        return make_rat(x.get_num() + y.get_num(), x.get_den() + y.get_den());
    };

    // Ascending candidates n-1 = s_0 < s_1 < ... < s'.
    std::vector<Rat> s_cands{Rat(datum.n - 1)};
    {
        Rat target = make_rat((datum.n - 1) * fl + 1, fl);
        Rat lo = s_cands.front();
        while (true) {
            Rat med = mediant(lo, target);
            if (med.get_den() > max_den) break;
            s_cands.push_back(med);
            lo = med;
        }
    }
    // Descending candidates -2 = t_0 > t_1 > ... > t'.
    std::vector<Rat> t_cands{Rat(-2)};
    {
        Rat target = make_rat(-(2 * fl1 + 1), fl1);
        Rat hi = t_cands.front();
        while (true) {
            Rat med = mediant(target, hi);
            if (med.get_den() > max_den) break;
            t_cands.push_back(med);
            hi = med;
        }
    }

    for (size_t depth = 0; depth < s_cands.size() + t_cands.size(); ++depth) {
        for (size_t i = 0; i <= depth && i < s_cands.size(); ++i) {
            size_t j = depth - i;
            if (j >= t_cands.size()) continue;
            SlopeTriple slopes{t_cands[j], ubar, s_cands[i]};
            if (Rat(1) / (slopes.r3 - slopes.r2) + Rat(1) / (slopes.r2 - slopes.r1) >= 1) continue;
            if (!lattice_span_check(slopes)) continue;
            MonomialTriple cand;
            try {
                cand = phi(slopes);
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (!verify_classification(want, cand)) continue;
            auto back = classify(cand);
            if (std::holds_alternative<ClassificationDatum>(back) &&
                std::get<ClassificationDatum>(back) == want)
                return cand;
        }
    }
    throw std::runtime_error("construct_triple: search exhausted below denominator bound " +
                             max_den.get_str());
}

}  // namespace rees
