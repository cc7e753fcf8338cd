// Herzog presentation of the space monomial prime p(a,b,c):
//   p = (x^s - y^t1 z^u1, y^t - x^s2 z^u2, z^u - x^s3 y^t3)
// with s = s2+s3, t = t1+t3, u = u1+u2 and the degree relations
//   a*s = b*t1 + c*u1,  b*t = a*s2 + c*u2,  c*u = a*s3 + b*t3.
#pragma once

#include <rees/rational.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace rees {

struct CompleteIntersectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MonomialTriple {
    Int a, b, c;
};

inline bool pairwise_coprime(const MonomialTriple& t) {
    Int g1, g2, g3;
    mpz_gcd(g1.get_mpz_t(), t.a.get_mpz_t(), t.b.get_mpz_t());
    mpz_gcd(g2.get_mpz_t(), t.b.get_mpz_t(), t.c.get_mpz_t());
    mpz_gcd(g3.get_mpz_t(), t.a.get_mpz_t(), t.c.get_mpz_t());
    return g1 == 1 && g2 == 1 && g3 == 1;
}

inline void check_triple(const MonomialTriple& t) {
    if (t.a < 1 || t.b < 1 || t.c < 1)
        throw std::invalid_argument("triple coordinates must be positive");
    if (!pairwise_coprime(t))
        throw std::invalid_argument("triple coordinates must be pairwise coprime");
}

struct PrimeGenerators {
    Int s, t, u;
    Int s2, s3, t1, t3, u1, u2;
};

namespace detail {

// Representations k*a = beta*b + gamma*c with beta, gamma >= 0, at the
// minimal k admitting one.  Scans beta in [0, k*a/b] and tests divisibility
// of the remainder by c.
struct MinimalMultiple {
    Int k;
    std::vector<std::pair<Int, Int>> reps;

    bool has_zero_rep() const {
        for (const auto& [beta, gamma] : reps)
            if (beta == 0 || gamma == 0) return true;
        return false;
    }
};

inline MinimalMultiple minimal_multiple(const Int& a, const Int& b, const Int& c) {
    MinimalMultiple out;
    for (Int k = 1;; ++k) {
        Int target = k * a;
        std::vector<std::pair<Int, Int>> reps;
        for (Int beta = 0; beta * b <= target; ++beta) {
            Int rem = target - beta * b;
            if (rem % c == 0) reps.emplace_back(beta, rem / c);
        }
        if (!reps.empty()) {
            out.k = k;
            out.reps = std::move(reps);
            return out;
        }
    }
}

}  // namespace detail

inline bool verify_generators(const MonomialTriple& tr, const PrimeGenerators& g) {
    auto pos = [](const Int& x) { return x >= 1; };
    if (!(pos(g.s2) && pos(g.s3) && pos(g.t1) && pos(g.t3) && pos(g.u1) && pos(g.u2))) return false;
    if (g.s != g.s2 + g.s3 || g.t != g.t1 + g.t3 || g.u != g.u1 + g.u2) return false;
    if (tr.a * g.s != tr.b * g.t1 + tr.c * g.u1) return false;
    if (tr.b * g.t != tr.a * g.s2 + tr.c * g.u2) return false;
    if (tr.c * g.u != tr.a * g.s3 + tr.b * g.t3) return false;
    Int d1, d2, d3;
    mpz_gcd(d1.get_mpz_t(), g.s2.get_mpz_t(), g.s3.get_mpz_t());
    mpz_gcd(d2.get_mpz_t(), g.t1.get_mpz_t(), g.t3.get_mpz_t());
    mpz_gcd(d3.get_mpz_t(), g.u1.get_mpz_t(), g.u2.get_mpz_t());
    return d1 == 1 && d2 == 1 && d3 == 1;
}

inline PrimeGenerators herzog_generators(const MonomialTriple& tr) {
    check_triple(tr);
    // If a coordinate is 1 the semigroup generated by the other two is all
    // of N and p is a complete intersection.
    if (tr.a == 1 || tr.b == 1 || tr.c == 1)
        throw CompleteIntersectionError("complete intersection: a coordinate equals 1");

    auto ms = detail::minimal_multiple(tr.a, tr.b, tr.c);
    auto mt = detail::minimal_multiple(tr.b, tr.a, tr.c);
    auto mu_ = detail::minimal_multiple(tr.c, tr.a, tr.b);
    // A zero coefficient at any minimal multiple means a binomial in two
    // variables generates part of p: complete intersection.
    if (ms.has_zero_rep() || mt.has_zero_rep() || mu_.has_zero_rep())
        throw CompleteIntersectionError("complete intersection: a minimal multiple has a zero coefficient");

    // A minimal multiple can admit several positive representations
    // (consecutive ones differ by (-c, +b)); the Herzog presentation is the
    // unique combination tied together by s = s2+s3, t = t1+t3, u = u1+u2.
    std::optional<PrimeGenerators> found;
    for (const auto& [t1, u1] : ms.reps)
        for (const auto& [s2, u2] : mt.reps)
            for (const auto& [s3, t3] : mu_.reps) {
                PrimeGenerators g{ms.k, mt.k, mu_.k, s2, s3, t1, t3, u1, u2};
                if (!verify_generators(tr, g)) continue;
                if (found)
                    throw std::logic_error("herzog_generators: presentation is not unique");
                found = g;
            }
    if (!found)
        throw std::logic_error("herzog_generators: no consistent presentation");
    return *found;
}

}  // namespace rees
