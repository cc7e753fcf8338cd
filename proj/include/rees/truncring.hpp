// Arithmetic in the truncated ring F'_l with basis
//   x_{alpha,n} = v^alpha w^ceil(alpha*ubar) x^n,   0 <= alpha <= n < l,
// where x = (w-1)/(v-1).  Monomials v^a w^b x^n rewrite into the basis by
// the recursion
//   v^a w^b x^n = v^a w^{b-1} x^n + v^{a+1} w^{b-1} x^{n+1} - v^a w^{b-1} x^{n+1},
// applied until b = ceil(a*ubar).  On top of that sit the embedded elements
// z_{alpha,n} = v^alpha w^{ceil((alpha-n)ubar)} (x + x^2 + ...)^n, the
// transition function xi = (1-x)^u w^{-u2}, and the one-pass reduction that
// clears coefficients with unit multipliers from the A- or B-side whenever
// the cover sets P_A, P_B allow it.
#pragma once

#include <rees/classify.hpp>
#include <rees/scalars.hpp>
#include <rees/triangle.hpp>

#include <cassert>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace rees {

// Basis point, ordered by n then alpha (the reduction's visit order).
struct Pt {
    int alpha = 0;
    int n = 0;
    friend bool operator==(const Pt&, const Pt&) = default;
    friend bool operator<(const Pt& a, const Pt& b) {
        return a.n != b.n ? a.n < b.n : a.alpha < b.alpha;
    }
};

template <class F>
struct Trunc {
    using Value = typename F::Value;
    int level = 0;
    std::map<Pt, Value> coeff;

    friend bool operator==(const Trunc& a, const Trunc& b) {
        return a.level == b.level && a.coeff == b.coeff;
    }
};

// An expansion of a monomial v^a w^b x^n in the basis; coefficients are
// integers in every characteristic.
using Expansion = std::vector<std::tuple<int, int, Int>>;  // (alpha, n, coeff)

template <class F>
class TruncRing {
public:
    using Value = typename F::Value;
    using Elem = Trunc<F>;

    TruncRing(F field, const Rat& ubar, int level)
        : field_(std::move(field)), ubar_(ubar), level_(level) {
        if (!(Rat(-1) < ubar_ && ubar_ < 0)) throw std::invalid_argument("TruncRing: ubar must lie in (-1,0)");
        if (level_ < 1) throw std::invalid_argument("TruncRing: level must be >= 1");
        u_ = ubar_.get_den();
        u2_ = -ubar_.get_num();
    }

    const F& field() const { return field_; }
    int level() const { return level_; }
    const Rat& ubar() const { return ubar_; }
    const Int& u() const { return u_; }
    const Int& u2() const { return u2_; }

    long ceil_ubar(long alpha) const {
        auto it = ceil_memo_.find(alpha);
        if (it != ceil_memo_.end()) return it->second;
        long v = to_ll(ceil_div(Int(alpha) * -u2_, u_));
        ceil_memo_.emplace(alpha, v);
        return v;
    }

    Elem zero() const { return Elem{level_, {}}; }

    Elem one() const {
        Elem e{level_, {}};
        e.coeff[{0, 0}] = field_.one();
        return e;
    }

    Elem basis(int alpha, int n) const {
        Elem e{level_, {}};
        if (n < level_) e.coeff[{alpha, n}] = field_.one();
        return e;
    }

    Value coefficient(const Elem& e, Pt p) const {
        auto it = e.coeff.find(p);
        return it == e.coeff.end() ? field_.zero() : it->second;
    }

    // Expansion of v^alpha w^beta x^n (beta >= alpha*ubar), truncated below
    // level; memoized per ring.
    const Expansion& normal_form(long alpha, long beta, int n) const {
        if (Int(beta) * u_ + Int(alpha) * u2_ < 0)
            throw std::invalid_argument("normal_form: beta < alpha*ubar");
        return nf(alpha, beta, n);
    }

    // Expansion of the basis product x_{a1,n1} x_{a2,n2} with n1+n2 = nsum.
    const Expansion& basis_product(int a1, int a2, int nsum) const {
        return nf(a1 + a2, ceil_ubar(a1) + ceil_ubar(a2), nsum);
    }

    Elem normal_form_element(long alpha, long beta, int n) const {
        Elem e{level_, {}};
        add_expansion(e, normal_form(alpha, beta, n), field_.one());
        return e;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        check_elem(a); check_elem(b);
        Elem out{level_, {}};
        for (const auto& [pa, ca] : a.coeff) {
            if (field_.is_zero(ca)) continue;
            for (const auto& [pb, cb] : b.coeff) {
                if (pa.n + pb.n >= level_) break;  // coeff map is ordered by n
                if (field_.is_zero(cb)) continue;
                const Expansion& ex = basis_product(pa.alpha, pb.alpha, pa.n + pb.n);
                add_expansion(out, ex, field_.mul(ca, cb));
            }
        }
        prune(out);
        return out;
    }

    Elem add(const Elem& a, const Elem& b) const {
        check_elem(a); check_elem(b);
        Elem out = a;
        for (const auto& [p, c] : b.coeff) {
            auto [it, fresh] = out.coeff.try_emplace(p, c);
            if (!fresh) it->second = field_.add(it->second, c);
        }
        prune(out);
        return out;
    }

    Elem scale(const Elem& a, const Value& c) const {
        if (field_.is_zero(c)) return zero();
        Elem out = a;
        for (auto& [p, v] : out.coeff) v = field_.mul(v, c);
        prune(out);
        return out;
    }

    // a - c*b
    Elem sub_scaled(const Elem& a, const Value& c, const Elem& b) const {
        Elem out = a;
        Value nc = field_.neg(c);
        for (const auto& [p, v] : b.coeff) {
            Value delta = field_.mul(nc, v);
            auto [it, fresh] = out.coeff.try_emplace(p, delta);
            if (!fresh) it->second = field_.add(it->second, delta);
        }
        prune(out);
        return out;
    }

    Elem pow(const Elem& e, const Int& k) const {
        if (k < 0) return pow(inverse(e), -k);
        Elem acc = one();
        Elem base = e;
        Int m = k;
        while (m > 0) {
            if (mpz_odd_p(m.get_mpz_t())) acc = mul(acc, base);
            m >>= 1;
            if (m > 0) base = mul(base, base);
        }
        return acc;
    }

    // Neumann series against the nilpotent part; requires an invertible
    // constant term.
    Elem inverse(const Elem& e) const {
        Value c0 = coefficient(e, {0, 0});
        if (field_.is_zero(c0)) throw std::domain_error("inverse: constant term is zero (not a unit)");
        Value c0inv = field_.inv(c0);
        Elem h = sub_scaled(one(), c0inv, e);  // 1 - e/c0, supported in rows n >= 1
        Elem acc = one();
        for (int j = 1; j < level_; ++j) acc = add(one(), mul(h, acc));
        return scale(acc, c0inv);
    }

    // Unique k-th root with constant term 1 (Newton iteration).  Needs k
    // invertible in the field, so characteristic 0 or p with p not
    // dividing k.
    Elem nth_root(const Elem& e, const Int& k) const {
        if (k < 1) throw std::invalid_argument("nth_root: k must be >= 1");
        if (!(coefficient(e, {0, 0}) == field_.one()))
            throw std::domain_error("nth_root: constant term must be 1");
        Value kinv = field_.inv(field_.from_int(k));  // rejects characteristic p | k
        Elem r = one();
        for (int it = 0; it < 64; ++it) {
            Elem rk = pow(r, k);
            if (rk == e) return r;
            // r += (e - r^k) / (k * r^(k-1))
            Elem corr = mul(sub_scaled(e, field_.one(), rk), inverse(pow(r, k - 1)));
            r = add(r, scale(corr, kinv));
        }
        throw std::logic_error("nth_root: Newton iteration failed to converge");
    }

    // (x + x^2 + ... + x^{l-1})^n, supported on the alpha = 0 column.
    const Elem& geom_power(int n) const {
        while (static_cast<int>(geom_memo_.size()) <= n) {
            if (geom_memo_.empty()) {
                geom_memo_.push_back(one());
            } else if (geom_memo_.size() == 1) {
                Elem s{level_, {}};
                for (int kk = 1; kk < level_; ++kk) s.coeff[{0, kk}] = field_.one();
                geom_memo_.push_back(std::move(s));
            } else {
                geom_memo_.push_back(mul(geom_memo_.back(), geom_memo_[1]));
            }
        }
        return geom_memo_[n];
    }

    // z_{alpha,n} = v^alpha w^{ceil((alpha-n)ubar)} (x + x^2 + ...)^n,
    // built along recurrences that only ever multiply by sparse columns:
    //   z_{alpha,n} = z_{alpha-1,n-1} * v(x + x^2 + ...)        (alpha >= 1)
    //   z_{0,n}     = z_{0,n-1} * w^{delta} (x + x^2 + ...)     (delta in {0,1})
    const Elem& z_element(int alpha, int n) const {
        Pt key{alpha, n};
        auto it = z_memo_.find(key);
        if (it != z_memo_.end()) return it->second;
        Elem z;
        if (n == 0) {
            z = alpha == 0 ? one() : normal_form_element(alpha, ceil_ubar(alpha), 0);
        } else if (alpha >= 1) {
            if (vs_elem_.coeff.empty() && level_ > 1) {
                vs_elem_.level = level_;
                for (int k = 1; k < level_; ++k) vs_elem_.coeff[{1, k}] = field_.one();
            }
            z = mul(z_element(alpha - 1, n - 1), vs_elem_);
        } else {
            long delta = ceil_ubar(-n) - ceil_ubar(-(n - 1));
            const Elem& step = delta == 0 ? geom_power(1) : ws_elem();
            z = mul(z_element(0, n - 1), step);
        }
        return z_memo_.emplace(key, std::move(z)).first->second;
    }

    // w * (x + x^2 + ...) = x_{0,1} + x_{1,2} + x_{1,3} + ...
    const Elem& ws_elem() const {
        if (ws_elem_.coeff.empty()) {
            Elem w{level_, {}};
            w.coeff[{0, 0}] = field_.one();
            if (level_ > 1) {
                w.coeff[{0, 1}] = field_.neg(field_.one());
                w.coeff[{1, 1}] = field_.one();
            }
            ws_elem_ = mul(w, geom_power(1));
            ws_elem_.level = level_;
        }
        return ws_elem_;
    }

    // --- dense representation over the cone 0 <= alpha <= n < level --------

    size_t dense_size() const { return static_cast<size_t>(level_) * (level_ + 1) / 2; }

    static size_t dense_index(int alpha, int n) {
        return static_cast<size_t>(n) * (n + 1) / 2 + static_cast<size_t>(alpha);
    }

    std::vector<Value> to_dense(const Elem& e) const {
        check_elem(e);
        std::vector<Value> out(dense_size(), field_.zero());
        for (const auto& [p, c] : e.coeff) out[dense_index(p.alpha, p.n)] = c;
        return out;
    }

    Elem from_dense(const std::vector<Value>& v) const {
        Elem out{level_, {}};
        for (int n = 0; n < level_; ++n)
            for (int alpha = 0; alpha <= n; ++alpha)
                if (!field_.is_zero(v[dense_index(alpha, n)]))
                    out.coeff[{alpha, n}] = v[dense_index(alpha, n)];
        return out;
    }

    // res *= (1 - c * mult), where mult is a sorted expansion with leading
    // row n0 >= 1.  Every write lands strictly above the row being read, so
    // iterating sources from the top row down keeps the update in place.
    void apply_unit_multiplier(std::vector<Value>& res, int n0,
                               const std::vector<std::tuple<int, int, Value>>& mult,
                               const Value& c) const {
        Value nc = field_.neg(c);
        for (int m = level_ - 1 - n0; m >= 0; --m)
            for (int g = m; g >= 0; --g) {
                const Value& src = res[dense_index(g, m)];
                if (field_.is_zero(src)) continue;
                Value w = field_.mul(nc, src);
                for (const auto& [zg, zm, zc] : mult) {
                    if (m + zm >= level_) break;
                    Value wz = field_.mul(w, zc);
                    if (field_.is_zero(wz)) continue;
                    for (const auto& [tg, tm, tc] : basis_product(g, zg, m + zm)) {
                        Value& slot = res[dense_index(tg, tm)];
                        if (tc == 1) slot = field_.add(slot, wz);
                        else if (tc == -1) slot = field_.sub(slot, wz);
                        else slot = field_.add(slot, field_.mul(wz, field_.from_int(tc)));
                    }
                }
            }
    }

    // res /= w, using w = 1 + (v-1)x: ascending over source rows, the
    // quotient row is final once all lower rows have propagated.
    void divide_by_w_inplace(std::vector<Value>& res) const {
        for (int m = 0; m + 1 < level_; ++m)
            for (int g = 0; g <= m; ++g) {
                const Value src = res[dense_index(g, m)];
                if (field_.is_zero(src)) continue;
                // subtract src * (v-1) x * x_{g,m} = src (x_{1,1} - x_{0,1}) x_{g,m}
                for (const auto& [tg, tm, tc] : basis_product(g, 1, m + 1)) {
                    Value& slot = res[dense_index(tg, tm)];
                    Value d = field_.mul(src, field_.from_int(tc));
                    slot = field_.sub(slot, d);
                }
                for (const auto& [tg, tm, tc] : basis_product(g, 0, m + 1)) {
                    Value& slot = res[dense_index(tg, tm)];
                    Value d = field_.mul(src, field_.from_int(tc));
                    slot = field_.add(slot, d);
                }
            }
    }

    // xi^m = (1-x)^{mu} w^{-m*u2}; constant term 1.  The w-power is peeled
    // off by m*u2 exact triangular divisions.
    Elem xi_power(const Int& m = 1) const {
        Elem one_minus_x{level_, {}};
        one_minus_x.coeff[{0, 0}] = field_.one();
        if (level_ > 1) one_minus_x.coeff[{0, 1}] = field_.neg(field_.one());
        auto dense = to_dense(pow(one_minus_x, m * u_));
        for (Int e = 0; e < m * u2_; ++e) divide_by_w_inplace(dense);
        return from_dense(dense);
    }

    Elem xi() const { return xi_power(1); }

private:
    void check_elem(const Elem& e) const {
        if (e.level != level_) throw std::invalid_argument("element level does not match ring level");
    }

    void add_expansion(Elem& out, const Expansion& ex, const Value& c) const {
        for (const auto& [ga, gm, gc] : ex) {
            Value delta = field_.mul(c, field_.from_int(gc));
            auto [it, fresh] = out.coeff.try_emplace(Pt{ga, gm}, delta);
            if (!fresh) it->second = field_.add(it->second, delta);
        }
    }

    void prune(Elem& e) const {
        for (auto it = e.coeff.begin(); it != e.coeff.end();) {
            if (field_.is_zero(it->second)) it = e.coeff.erase(it);
            else ++it;
        }
    }

    static uint64_t nf_key(long alpha, long beta, int n) {
        // disjoint bit fields; the recursion stays within these ranges for
        // any level below a few thousand
        assert(alpha > -(1L << 15) && alpha < (1L << 15));
        assert(beta > -(1L << 19) && beta < (1L << 19));
        return (static_cast<uint64_t>(alpha + (1L << 15)) << 40) |
               (static_cast<uint64_t>(beta + (1L << 19)) << 16) | static_cast<uint64_t>(n);
    }

    const Expansion& nf(long alpha, long beta, int n) const {
        uint64_t key = nf_key(alpha, beta, n);
        auto it = nf_memo_.find(key);
        if (it != nf_memo_.end()) return *it->second;
        auto result = std::make_shared<Expansion>();
        if (n < level_) {
            long gap = beta - ceil_ubar(alpha);
            assert(gap >= 0);
            if (gap == 0) {
                result->emplace_back(static_cast<int>(alpha), n, Int(1));
            } else {
                std::map<Pt, Int> acc;
                auto fold = [&](const Expansion& ex, int sign) {
                    for (const auto& [ga, gm, gc] : ex) acc[{ga, gm}] += sign * gc;
                };
                fold(nf(alpha, beta - 1, n), +1);
                fold(nf(alpha + 1, beta - 1, n + 1), +1);
                fold(nf(alpha, beta - 1, n + 1), -1);
                for (auto& [p, c] : acc)
                    if (c != 0) result->emplace_back(p.alpha, p.n, c);
            }
        }
        return *nf_memo_.emplace(key, std::move(result)).first->second;
    }

    F field_;
    Rat ubar_;
    int level_;
    Int u_, u2_;
    mutable std::map<long, long> ceil_memo_;
    mutable std::unordered_map<uint64_t, std::shared_ptr<Expansion>> nf_memo_;
    mutable std::map<Pt, Elem> z_memo_;
    mutable std::vector<Elem> geom_memo_;
    mutable Elem vs_elem_{0, {}};
    mutable Elem ws_elem_{0, {}};
};

// ---------------------------------------------------------------------------
// Reduction: one pass over the points (alpha,n), 1 <= n < l, 0 <= alpha <= n,
// in (n asc, alpha asc) order.  Covered points get a unit multiplier
// (1 - c x_{alpha,n} from the A-side, with A-priority on the overlap, or
// 1 - c z_{alpha,n} from the B-side); uncovered points record the current
// coefficient as an obstruction and are passed over.

template <class F>
struct ReductionLogEntry {
    char side;  // 'A' or 'B'
    Pt pt;
    typename F::Value coeff;
};

template <class F>
struct ReductionResult {
    Trunc<F> residual;
    std::map<Pt, typename F::Value> obstructions;
    bool factored = false;
    std::vector<ReductionLogEntry<F>> log;
};

// One pass in (n asc, alpha asc) order.  Since a multiplier anchored at
// (alpha,n) only touches row n at alpha itself, a whole row's coefficients
// can be read up front and the row's multipliers merged: the A-side unit
// 1 - sum_i c_i x_{alpha_i,n} and the B-side unit 1 - sum_j c_j z_{alpha_j,n}
// zero the same coefficients as the pointwise factors while sharing the
// heavily overlapping z supports.  The log still carries one entry per
// point; reconstruction multiplies the row-merged units.
template <class F>
ReductionResult<F> reduce(const TruncRing<F>& ring, const Trunc<F>& zeta, const ConeProfile& profile) {
    using Value = typename F::Value;
    const F& K = ring.field();
    if (!(ring.coefficient(zeta, {0, 0}) == K.one()))
        throw std::invalid_argument("reduce: constant term must be 1");

    ReductionResult<F> res;
    const int l = ring.level();
    auto dense = ring.to_dense(zeta);
    std::map<Pt, Value> merged;
    std::vector<std::tuple<int, int, Value>> mult;
    for (int n = 1; n < l; ++n) {
        // A side
        merged.clear();
        for (int alpha = 0; alpha <= n; ++alpha) {
            Value c = dense[TruncRing<F>::dense_index(alpha, n)];
            if (profile.in_PA(alpha, n)) {
                if (K.is_zero(c)) continue;
                merged.emplace(Pt{alpha, n}, c);
                res.log.push_back({'A', {alpha, n}, c});
            } else if (!profile.in_PB(alpha, n)) {
                res.obstructions[{alpha, n}] = c;
            }
        }
        if (!merged.empty()) {
            mult.assign(merged.size(), {});
            size_t k = 0;
            for (const auto& [p, c] : merged) mult[k++] = {p.alpha, p.n, c};
            ring.apply_unit_multiplier(dense, n, mult, K.one());
        }
        // B side (points not covered by A)
        merged.clear();
        for (int alpha = 0; alpha <= n; ++alpha) {
            if (profile.in_PA(alpha, n) || !profile.in_PB(alpha, n)) continue;
            Value c = dense[TruncRing<F>::dense_index(alpha, n)];
            if (K.is_zero(c)) continue;
            for (const auto& [p, zc] : ring.z_element(alpha, n).coeff) {
                Value delta = K.mul(c, zc);
                auto [it, fresh] = merged.try_emplace(p, delta);
                if (!fresh) it->second = K.add(it->second, delta);
            }
            res.log.push_back({'B', {alpha, n}, c});
        }
        if (!merged.empty()) {
            mult.clear();
            for (const auto& [p, c] : merged)
                if (!K.is_zero(c)) mult.emplace_back(p.alpha, p.n, c);
            if (!mult.empty()) ring.apply_unit_multiplier(dense, n, mult, K.one());
        }
    }
    res.residual = ring.from_dense(dense);
    bool all_zero = true;
    for (const auto& [p, c] : res.obstructions)
        if (!K.is_zero(c)) { all_zero = false; break; }
    res.factored = all_zero && res.residual == ring.one();
    return res;
}

// ---------------------------------------------------------------------------
// Factorization decision for xi^m at level m*u.

enum class FactorStatus { factors, obstructed, inconclusive };

template <class V>
struct FactorDecision {
    FactorStatus status;
    std::optional<std::pair<long, long>> witness;  // minimal-degree point when obstructed
    std::map<std::pair<long, long>, V> obstructions;
};

namespace detail {

template <class F>
FactorDecision<typename F::Value> factor_decision_impl(const F& field, const MonomialTriple& triple,
                                                       long m) {
    auto gens = herzog_generators(triple);
    auto tri = triangle_from_generators(gens);
    if (!negative_curve_holds(tri))
        throw HypothesisError("factor_decision: z^u - x^s3 y^t3 is not a negative curve");
    if (m < 1) throw std::invalid_argument("factor_decision: m must be >= 1");

    long level = m * to_ll(tri.u);
    TruncRing<F> ring(field, tri.ubar, static_cast<int>(level));
    ConeProfile profile(tri);
    auto red = reduce(ring, ring.xi_power(m), profile);

    FactorDecision<typename F::Value> out;
    for (const auto& [p, c] : red.obstructions)
        out.obstructions[{p.alpha, p.n}] = c;
    if (red.factored) {
        out.status = FactorStatus::factors;
        return out;
    }
    auto md = minimal_degree(tri, m);
    auto it = out.obstructions.find({md.f, md.d});
    if (it != out.obstructions.end() && !field.is_zero(it->second)) {
        out.status = FactorStatus::obstructed;
        out.witness = std::make_pair(md.f, md.d);
    } else {
        out.status = FactorStatus::inconclusive;
    }
    return out;
}

}  // namespace detail

inline FactorDecision<Int> factor_decision(const MonomialTriple& triple, long m) {
    return detail::factor_decision_impl(ZRing{}, triple, m);
}

inline FactorDecision<unsigned long> factor_decision(const MonomialTriple& triple, long m,
                                                     unsigned long p) {
    return detail::factor_decision_impl(FpField(p), triple, m);
}

// Characteristic-dispatching form; obstruction scalars reported as strings.
struct FactorReport {
    FactorStatus status;
    std::optional<std::pair<long, long>> witness;
    std::map<std::pair<long, long>, std::string> obstructions;
};

inline FactorReport factor_decision(const MonomialTriple& triple, long m, CoefficientField field) {
    FactorReport out;
    auto fill = [&](const auto& d) {
        out.status = d.status;
        out.witness = d.witness;
        for (const auto& [p, c] : d.obstructions) {
            std::ostringstream os;
            os << c;
            out.obstructions[p] = os.str();
        }
    };
    if (field.characteristic == 0) fill(factor_decision(triple, m));
    else fill(factor_decision(triple, m, field.characteristic));
    return out;
}

// ---------------------------------------------------------------------------
// Obstruction constants of the class (n,lambda): reduce 1+x and
// w = 1-x+vx at level d+1 = f_lambda + f_{lambda+1} + 1 over the cover data
// shared by every member of the class, and report the two coefficients left
// at the unique uncovered point (f_lambda, d).

namespace detail {

// Cover data shared by every member of the class (n,lambda): a_i for
// i <= f_lambda and b_{-i} for i <= f_{lambda+1}, clamped beyond (the true
// counts there exceed d+1, so membership below level d+1 does not depend on
// them).  ubar is taken from the (gamma,delta) = (2,1) member; the basis
// rewrite only consults ceil(alpha*ubar) for |alpha| <= d, where every
// member agrees.
struct ClassCover {
    ConeProfile profile;
    Int f_lambda, d;
};

inline ClassCover class_cover(long n, long lambda) {
    if (n < 3 || lambda < 0) throw std::invalid_argument("class_cover: need n >= 3, lambda >= 0");
    auto fg = fg_sequence(n, lambda + 2);
    const Int& fl = fg.pairs[lambda].first;
    const Int& fl1 = fg.pairs[lambda + 1].first;
    const Int& gl = fg.pairs[lambda].second;
    const Int& gl1 = fg.pairs[lambda + 1].second;
    Int d = fl + fl1;
    std::vector<Int> a_cols, b_cols;
    for (Int i = 1; i <= fl; ++i) a_cols.push_back((n - 1) * i + ceil_div(gl * i, fl));
    for (Int i = 1; i <= fl1; ++i) b_cols.push_back(2 * i - ceil_div(gl1 * i, fl1) + 1);
    b_cols.back() -= 1;  // b_{-f_{lambda+1}} = d, one below the Gamma column count
    return {ConeProfile(make_rat(-(2 * gl + gl1), 2 * fl + fl1), a_cols, b_cols, d + 1), fl, d};
}

// Reduce (1-x)^{h1} w^{h2} over the (n,lambda) cover and report the
// coefficient left at the unique uncovered point (f_lambda, d).  The
// generator 1-x (rather than 1+x) is the factor actually appearing in
// xi = (1-x)^u w^{-u2}; with it the proportionality u q1 = u2 q2 against
// the (gamma,delta) = (1,1) member holds, with 1+x it does not.
inline Int class_obstruction(long n, long lambda, const Int& h1, const Int& h2) {
    auto cover = class_cover(n, lambda);
    int level = static_cast<int>(to_ll(cover.d)) + 1;
    TruncRing<ZRing> ring(ZRing{}, cover.profile.ubar(), level);

    Trunc<ZRing> one_minus_x{level, {}};
    one_minus_x.coeff[{0, 0}] = 1;
    one_minus_x.coeff[{0, 1}] = -1;
    Trunc<ZRing> w{level, {}};
    w.coeff[{0, 0}] = 1;
    w.coeff[{0, 1}] = -1;
    w.coeff[{1, 1}] = 1;

    auto zeta = ring.mul(ring.pow(one_minus_x, h1), ring.pow(w, h2));
    auto red = reduce(ring, zeta, cover.profile);
    Pt fd{static_cast<int>(to_ll(cover.f_lambda)), static_cast<int>(to_ll(cover.d))};
    if (red.obstructions.size() != 1 || red.obstructions.begin()->first != fd)
        throw std::logic_error("class_obstruction: uncovered point is not exactly (f_lambda, d)");
    return red.obstructions.begin()->second;
}

}  // namespace detail

inline std::pair<Int, Int> reduction_constants(long n, long lambda) {
    return {detail::class_obstruction(n, lambda, 1, 0), detail::class_obstruction(n, lambda, 0, 1)};
}

// Obstruction of (1-x)^{h1} w^{h2} over the same cover; linearity
// h1*q1 + h2*q2 is a tested property.
inline Int reduction_obstruction(long n, long lambda, const Int& h1, const Int& h2) {
    return detail::class_obstruction(n, lambda, h1, h2);
}

}  // namespace rees
