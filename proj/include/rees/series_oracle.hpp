// Independent representation of F'_l: substitute w = 1 + (v-1)x and work
// with Laurent polynomials in v whose x-degree stays below the level.  The
// map sends x_{alpha,n} to v^alpha (1+(v-1)x)^{ceil(alpha*ubar)} x^n and is
// unitriangular in the x-degree, so it round-trips exactly.  Products and
// inverses on this side use plain polynomial convolution, nothing from the
// basis rewrite, which makes the two routes independent checks of each
// other.
#pragma once

#include <rees/scalars.hpp>
#include <rees/truncring.hpp>

#include <map>
#include <utility>

namespace rees {

// Key (v-exponent, x-degree); x-degree < level.
template <class F>
struct Series {
    using Value = typename F::Value;
    int level = 0;
    std::map<std::pair<long, int>, Value> coeff;

    friend bool operator==(const Series&, const Series&) = default;
};

namespace series {

template <class F>
void prune(const F& K, Series<F>& s) {
    for (auto it = s.coeff.begin(); it != s.coeff.end();) {
        if (K.is_zero(it->second)) it = s.coeff.erase(it);
        else ++it;
    }
}

template <class F>
Series<F> one(const F& K, int level) {
    Series<F> s{level, {}};
    s.coeff[{0, 0}] = K.one();
    return s;
}

template <class F>
Series<F> mul(const F& K, const Series<F>& a, const Series<F>& b) {
    Series<F> out{a.level, {}};
    for (const auto& [pa, ca] : a.coeff)
        for (const auto& [pb, cb] : b.coeff) {
            if (pa.second + pb.second >= a.level) continue;
            auto key = std::make_pair(pa.first + pb.first, pa.second + pb.second);
            auto [it, fresh] = out.coeff.try_emplace(key, K.mul(ca, cb));
            if (!fresh) it->second = K.add(it->second, K.mul(ca, cb));
        }
    prune(K, out);
    return out;
}

// Generalized binomial coefficient C(c, j) for integer c (possibly
// negative); always an integer.
inline Int gen_binom(long c, int j) {
    Int num = 1;
    for (int t = 0; t < j; ++t) num *= Int(c - t);
    Int den = 1;
    for (int t = 2; t <= j; ++t) den *= t;
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// (1 + (v-1)x)^c truncated below the level, any integer c.
template <class F>
Series<F> w_power(const F& K, int level, long c) {
    Series<F> out{level, {}};
    for (int j = 0; j < level; ++j) {
        Int bc = gen_binom(c, j);
        if (bc == 0) continue;
        // ((v-1)x)^j = sum_t C(j,t) (-1)^{j-t} v^t x^j
        for (int t = 0; t <= j; ++t) {
            Int term;
            mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(t));
            term *= bc;
            if ((j - t) % 2 != 0) term = -term;
            auto key = std::make_pair(static_cast<long>(t), j);
            auto [it, fresh] = out.coeff.try_emplace(key, K.from_int(term));
            if (!fresh) it->second = K.add(it->second, K.from_int(term));
        }
    }
    prune(K, out);
    return out;
}

template <class F>
Series<F> inverse(const F& K, const Series<F>& e) {
    auto it0 = e.coeff.find({0, 0});
    if (it0 == e.coeff.end() || K.is_zero(it0->second))
        throw std::domain_error("series inverse: constant term is zero");
    auto c0inv = K.inv(it0->second);
    // h = 1 - e/c0 has x-degree >= 1... not necessarily: it can carry
    // x-degree-0 terms v^a - use the x-grading only, peeling degree by
    // degree is wrong here.  Instead split e = e0(v) + higher, invert the
    // x-degree-0 Laurent part exactly (it must be a monomial times unit for
    // our elements), then Neumann against the rest.
    // All elements arising from F'_l have x-degree-0 part equal to c0, so
    // the plain Neumann series below applies.
    for (const auto& [p, c] : e.coeff)
        if (p.second == 0 && p.first != 0)
            throw std::domain_error("series inverse: x-degree-0 part is not constant");
    Series<F> h{e.level, {}};
    for (const auto& [p, c] : e.coeff) {
        if (p.second == 0) continue;
        h.coeff[p] = K.neg(K.mul(c0inv, c));
    }
    Series<F> acc = one(K, e.level);
    for (int j = 1; j < e.level; ++j) {
        acc = mul(K, h, acc);
        acc.coeff[{0, 0}] = K.add(acc.coeff.count({0, 0}) ? acc.coeff[{0, 0}] : K.zero(), K.one());
        prune(K, acc);
    }
    for (auto& [p, c] : acc.coeff) c = K.mul(c, c0inv);
    return acc;
}

template <class F>
Series<F> pow(const F& K, const Series<F>& e, const Int& k) {
    if (k < 0) return pow(K, inverse(K, e), -k);
    Series<F> acc = one(K, e.level);
    Series<F> base = e;
    Int m = k;
    while (m > 0) {
        if (mpz_odd_p(m.get_mpz_t())) acc = mul(K, acc, base);
        m >>= 1;
        if (m > 0) base = mul(K, base, base);
    }
    return acc;
}

}  // namespace series

// x_{alpha,n} -> v^alpha (1+(v-1)x)^{ceil(alpha*ubar)} x^n
template <class F>
Series<F> to_series(const TruncRing<F>& ring, const Trunc<F>& e) {
    const F& K = ring.field();
    Series<F> out{ring.level(), {}};
    for (const auto& [p, c] : e.coeff) {
        Series<F> wimg = series::w_power(K, ring.level(), ring.ceil_ubar(p.alpha));
        for (const auto& [q, wc] : wimg.coeff) {
            if (q.second + p.n >= ring.level()) continue;
            auto key = std::make_pair(q.first + p.alpha, q.second + p.n);
            auto [it, fresh] = out.coeff.try_emplace(key, K.mul(c, wc));
            if (!fresh) it->second = K.add(it->second, K.mul(c, wc));
        }
    }
    series::prune(K, out);
    return out;
}

// Inverse map, peeling x-degrees from below: the coefficient of v^alpha x^n
// is the coefficient of x_{alpha,n} once lower degrees are cleared.
template <class F>
Trunc<F> from_series(const TruncRing<F>& ring, Series<F> s) {
    const F& K = ring.field();
    Trunc<F> out{ring.level(), {}};
    for (int n = 0; n < ring.level(); ++n) {
        std::vector<std::pair<long, typename F::Value>> layer;
        for (const auto& [p, c] : s.coeff)
            if (p.second == n && !K.is_zero(c)) layer.emplace_back(p.first, c);
        for (const auto& [alpha, c] : layer) {
            if (alpha < 0 || alpha > n)
                throw std::domain_error("from_series: series does not lie in F'_l");
            Trunc<F> basis{ring.level(), {}};
            basis.coeff[{static_cast<int>(alpha), n}] = K.one();
            Series<F> img = to_series(ring, basis);
            for (const auto& [q, ic] : img.coeff) {
                auto [it, fresh] = s.coeff.try_emplace(q, K.neg(K.mul(c, ic)));
                if (!fresh) it->second = K.sub(it->second, K.mul(c, ic));
            }
            out.coeff[{static_cast<int>(alpha), n}] = c;
        }
        series::prune(K, s);
    }
    if (!s.coeff.empty()) throw std::logic_error("from_series: residue after peeling all levels");
    return out;
}

}  // namespace rees
