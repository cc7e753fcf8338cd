// Acceptance suite: each criterion prints one [PASS]/[FAIL] line.  Run a
// single criterion with `acceptance <n>` or everything with no arguments.

#include <rees/decide.hpp>
#include <rees/scan.hpp>
#include <rees/series_oracle.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace rees;
using Clock = std::chrono::steady_clock;

namespace {

unsigned hardware_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 4 : n;
}

struct Criterion {
    int id;
    std::string summary;
    bool (*run)(std::string& detail);
};

// --- 1: worked example (17,503,169) ----------------------------------------

bool criterion1(std::string& detail) {
    auto t0 = Clock::now();
    auto g = herzog_generators({17, 503, 169});
    bool ok = g.s == 89 && g.t == 3 && g.u == 7 && g.s2 == 49 && g.s3 == 40 && g.t1 == 2 &&
              g.t3 == 1 && g.u1 == 3 && g.u2 == 4;
    auto tri = triangle_from_generators(g);
    auto p = column_counts(tri, 1);
    ok = ok && p.counts == std::vector<Int>{2, 4, 5, 7, 5, 3, 1};
    ok = ok && p.sorted == std::vector<Int>{1, 2, 3, 4, 5, 5, 7};
    ok = ok && !emu(tri, 1);
    auto v = decide({17, 503, 169});
    ok = ok && v.noetherian.has_value() && !*v.noetherian;
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    ok = ok && secs < 1.0;
    std::ostringstream os;
    os << "generators/profile/EMU/verdict checked in " << secs << " s";
    detail = os.str();
    return ok;
}

// --- 2: (53,48,529) ---------------------------------------------------------

bool criterion2(std::string& detail) {
    auto t0 = Clock::now();
    auto tri = triangle_of({53, 48, 529});
    bool ok = emu(tri, 1) && !emu(tri, 2) && !emu(tri, 3);
    auto v = decide({53, 48, 529});
    ok = ok && v.noetherian.has_value() && *v.noetherian;
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    ok = ok && secs < 1.0;
    std::ostringstream os;
    os << "EMU true at m=1, false at m=2,3; Noetherian; " << secs << " s";
    detail = os.str();
    return ok;
}

// --- 3: three-way oracle agreement on the corpus ----------------------------

bool criterion3(std::string& detail) {
    auto t0 = Clock::now();
    auto corpus = in_scope_triples(120);
    std::atomic<size_t> disagreements{0};
    std::atomic<size_t> emu_true{0};
    std::mutex log_mutex;
    std::string first_bad;
    parallel_for(corpus.size(), hardware_jobs(), [&](size_t i) {
        const auto& t = corpus[i];
        auto cv = cross_validate(t);
        if (cv.emu) emu_true.fetch_add(1);
        if (!cv.agree) {
            disagreements.fetch_add(1);
            std::lock_guard<std::mutex> lock(log_mutex);
            if (first_bad.empty()) {
                std::ostringstream os;
                os << "(" << t.a << "," << t.b << "," << t.c << ") emu=" << cv.emu
                   << " factors=" << cv.factors << " curve=" << cv.curve;
                first_bad = os.str();
            }
        }
    });
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream os;
    os << corpus.size() << " in-scope triples, " << emu_true.load() << " EMU-true, "
       << disagreements.load() << " disagreements, " << secs << " s";
    if (!first_bad.empty()) os << "; first: " << first_bad;
    detail = os.str();
    return disagreements.load() == 0;
}

// --- 4: truncated-ring soundness vs the series oracle -----------------------

bool criterion4(std::string& detail) {
    TruncRing<ZRing> ring(ZRing{}, make_rat(-4, 7), 12);
    ZRing K;
    std::mt19937_64 rng(0x5eedc0de);
    std::uniform_int_distribution<int> coeff(-9, 9);
    auto random_elem = [&](bool unit) {
        Trunc<ZRing> e{ring.level(), {}};
        if (unit) e.coeff[{0, 0}] = 1;
        for (int t = 0; t < 7; ++t) {
            int n = std::uniform_int_distribution<int>(unit ? 1 : 0, ring.level() - 1)(rng);
            int alpha = std::uniform_int_distribution<int>(0, n)(rng);
            Int c(coeff(rng));
            if (c == 0) continue;
            e.coeff[{alpha, n}] += c;
            if (e.coeff[{alpha, n}] == 0) e.coeff.erase({alpha, n});
        }
        if (unit) e.coeff[{0, 0}] = 1;
        return e;
    };
    size_t checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        auto e1 = random_elem(false);
        auto e2 = random_elem(false);
        auto prod = ring.mul(e1, e2);
        if (!(to_series(ring, prod) == series::mul(K, to_series(ring, e1), to_series(ring, e2)))) {
            detail = "product mismatch";
            return false;
        }
        if (!(from_series(ring, to_series(ring, e1)) == e1)) {
            detail = "round-trip mismatch";
            return false;
        }
        ++checked;
    }
    for (int trial = 0; trial < 60; ++trial) {
        auto e = random_elem(true);
        if (!(to_series(ring, ring.inverse(e)) == series::inverse(K, to_series(ring, e)))) {
            detail = "inverse mismatch";
            return false;
        }
        ++checked;
    }
    for (int n = 0; n < 8; ++n)
        for (int alpha = 0; alpha <= n; ++alpha) {
            Series<ZRing> x_geom{ring.level(), {}};
            for (int k = 1; k < ring.level(); ++k) x_geom.coeff[{0, k}] = 1;
            auto rhs = series::pow(K, x_geom, n);
            Series<ZRing> vmono{ring.level(), {}};
            vmono.coeff[{alpha, 0}] = 1;
            rhs = series::mul(K, rhs, vmono);
            rhs = series::mul(K, rhs, series::w_power(K, ring.level(), ring.ceil_ubar(alpha - n)));
            if (!(to_series(ring, ring.z_element(alpha, n)) == rhs)) {
                detail = "z element mismatch";
                return false;
            }
            ++checked;
        }
    // the char-0 path through rationals stays integral
    TruncRing<QField> qring(QField{}, make_rat(-4, 7), 12);
    auto xi3 = qring.pow(qring.xi(), 3);
    for (const auto& [p, c] : xi3.coeff)
        if (c.get_den() != 1) {
            detail = "non-integral coefficient in xi^3";
            return false;
        }
    std::ostringstream os;
    os << checked << " randomized agreements, coefficients integral";
    detail = os.str();
    return true;
}

// --- 5: characteristic-p factorization of (17,503,169) ----------------------

bool criterion5(std::string& detail) {
    // the smallest e with p^e exceeding every missing second coordinate
    auto tri = triangle_of({17, 503, 169});
    long max_n = 0;
    for (const auto& [alpha, n] : missing_points(tri, 1)) max_n = std::max(max_n, n);
    std::ostringstream os;
    bool ok = true;
    for (unsigned long p : {2ul, 3ul}) {
        long m = 1;
        while (m <= max_n) m *= static_cast<long>(p);
        auto t0 = Clock::now();
        auto fd = factor_decision({17, 503, 169}, m, p);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        os << "p=" << p << " m=" << m << " -> "
           << (fd.status == FactorStatus::factors ? "factors" : "no") << " (" << secs << " s) ";
        ok = ok && fd.status == FactorStatus::factors && secs < 60.0;
    }
    detail = os.str();
    return ok;
}

// --- 6: characteristic-0 descent ---------------------------------------------

bool criterion6(std::string& detail) {
    auto t0 = Clock::now();
    auto corpus = in_scope_triples(120);
    std::atomic<size_t> m2_factors{0}, violations{0};
    parallel_for(corpus.size(), hardware_jobs(), [&](size_t i) {
        auto fd2 = factor_decision(corpus[i], 2);
        if (fd2.status != FactorStatus::factors) return;
        m2_factors.fetch_add(1);
        auto fd1 = factor_decision(corpus[i], 1);
        if (fd1.status != FactorStatus::factors) violations.fetch_add(1);
    });
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream os;
    os << m2_factors.load() << " triples factor at m=2, " << violations.load()
       << " descent violations, " << secs << " s";
    detail = os.str();
    return violations.load() == 0;
}

// --- 7: class constants -------------------------------------------------------

bool criterion7(std::string& detail) {
    std::ostringstream os;
    for (long n : {3L, 4L, 5L})
        for (long lambda : {0L, 1L, 2L}) {
            auto [q1, q2] = reduction_constants(n, lambda);
            auto fg = fg_sequence(n, lambda + 1);
            Int fsum = fg.pairs[lambda].first + fg.pairs[lambda + 1].first;
            Int gsum = fg.pairs[lambda].second + fg.pairs[lambda + 1].second;
            if (q2 == 0) {
                detail = "q2 = 0";
                return false;
            }
            if (q1 * fsum != q2 * gsum) {
                std::ostringstream bad;
                bad << "proportionality fails at (" << n << "," << lambda << "): q1=" << q1
                    << " q2=" << q2;
                detail = bad.str();
                return false;
            }
            for (long gamma = 1; gamma <= 5; ++gamma)
                for (long delta = 1; delta <= 5; ++delta) {
                    if (gamma == 1 && delta == 1) continue;
                    Int g;
                    mpz_gcd(g.get_mpz_t(), Int(gamma).get_mpz_t(), Int(delta).get_mpz_t());
                    if (g != 1) continue;
                    Int lhs =
                        q1 * (gamma * fg.pairs[lambda].first + delta * fg.pairs[lambda + 1].first) -
                        q2 * (gamma * fg.pairs[lambda].second + delta * fg.pairs[lambda + 1].second);
                    if (lhs == 0) {
                        std::ostringstream bad;
                        bad << "obstruction vanishes at (" << n << "," << lambda << "," << gamma
                            << "," << delta << ")";
                        detail = bad.str();
                        return false;
                    }
                }
            os << "(" << n << "," << lambda << "): q1=" << q1 << " q2=" << q2 << "  ";
        }
    detail = os.str();
    return true;
}

// --- 8: classification round-trips ---------------------------------------------

bool criterion8(std::string& detail) {
    auto r = classify({17, 503, 169});
    if (!std::holds_alternative<ClassificationDatum>(r)) {
        detail = "classify failed";
        return false;
    }
    if (!(std::get<ClassificationDatum>(r) == ClassificationDatum{3, 1, 2, 1, true})) {
        detail = "classify(17,503,169) != (3,1,2,1,mirrored)";
        return false;
    }
    std::vector<std::array<long, 4>> data;
    for (long n = 3; n <= 5; ++n)
        for (long lambda = 0; lambda <= 2; ++lambda)
            for (long gamma = 1; gamma <= 4; ++gamma)
                for (long delta = 1; delta <= 4; ++delta) {
                    if (gamma == 1 && delta == 1) continue;
                    Int g;
                    mpz_gcd(g.get_mpz_t(), Int(gamma).get_mpz_t(), Int(delta).get_mpz_t());
                    if (g != 1) continue;
                    data.push_back({n, lambda, gamma, delta});
                }
    std::atomic<bool> ok{true};
    std::mutex m;
    std::string bad;
    parallel_for(data.size(), hardware_jobs(), [&](size_t i) {
        auto [n, lambda, gamma, delta] = data[i];
        ClassificationDatum datum{n, lambda, Int(gamma), Int(delta), false};
        try {
            auto tr = construct_triple(datum);
            auto back = classify(tr);
            bool good = std::holds_alternative<ClassificationDatum>(back) &&
                        std::get<ClassificationDatum>(back) == datum;
            auto fg = fg_sequence(n, lambda + 1);
            good = good && minimal_degree(triangle_of(tr)).d ==
                               to_ll(fg.pairs[lambda].first + fg.pairs[lambda + 1].first);
            if (!good) throw std::runtime_error("round-trip mismatch");
        } catch (const std::exception& e) {
            ok = false;
            std::lock_guard<std::mutex> lock(m);
            if (bad.empty()) {
                std::ostringstream os;
                os << "(" << n << "," << lambda << "," << gamma << "," << delta << "): " << e.what();
                bad = os.str();
            }
        }
    });
    std::ostringstream os;
    os << data.size() << " data constructed and round-tripped";
    if (!bad.empty()) os << "; first failure " << bad;
    detail = os.str();
    return ok.load();
}

// --- 9: property suites ---------------------------------------------------------

bool criterion9(std::string& detail) {
    auto t0 = Clock::now();
    for (long n = 3; n <= 10; ++n) {
        auto s = fg_sequence(n, 30);
        for (size_t i = 1; i < s.pairs.size(); ++i) {
            if (s.pairs[i].first * s.pairs[i - 1].second - s.pairs[i - 1].first * s.pairs[i].second !=
                1) {
                detail = "fg determinant";
                return false;
            }
            if (s.pairs[i].first != s.pairs[i].second + s.pairs[i - 1].first) {
                detail = "fg recurrence";
                return false;
            }
        }
    }
    auto corpus = in_scope_triples(120);
    std::atomic<size_t> failures{0};
    std::mutex m;
    std::string bad;
    auto flag = [&](const MonomialTriple& t, const char* what) {
        failures.fetch_add(1);
        std::lock_guard<std::mutex> lock(m);
        if (bad.empty()) {
            std::ostringstream os;
            os << what << " at (" << t.a << "," << t.b << "," << t.c << ")";
            bad = os.str();
        }
    };
    parallel_for(corpus.size(), hardware_jobs(), [&](size_t i) {
        const auto& t = corpus[i];
        auto tri = triangle_of(t);
        auto pc = pick_counts(tri, 1);
        if (pc.area != Rat(pc.boundary) / 2 + Rat(pc.interior) - 1) return flag(t, "pick identity");
        ConeProfile cp(tri);
        for (long x = 1; 2 * x <= 20; ++x)
            for (long y = x; x + y <= 20; ++y) {
                if (cp.a(x + y) < cp.a(x) + cp.a(y) - 1) return flag(t, "superadditivity a");
                if (cp.b(-(x + y)) < cp.b(-x) + cp.b(-y) - 1) return flag(t, "superadditivity b");
            }
        for (long mm : {1L, 2L})
            if (emu(tri, mm) != cover_check(tri, mm)) return flag(t, "emu/cover equivalence");
        auto slopes = psi(t);
        auto back = phi(slopes);
        if (!(back.a == t.a && back.b == t.b && back.c == t.c)) return flag(t, "phi/psi");
        if (emu(tri, 1) != emu(triangle_of(mirror(t)), 1)) return flag(t, "mirror emu");
    });
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream os;
    os << corpus.size() << " corpus triples, " << failures.load() << " property failures, " << secs
       << " s";
    if (!bad.empty()) os << "; first: " << bad;
    detail = os.str();
    return failures.load() == 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "worked example fidelity (17,503,169)", criterion1},
        {2, "(53,48,529) EMU at m=1,2,3 and verdict", criterion2},
        {3, "three-way oracle agreement on the corpus (max 120)", criterion3},
        {4, "truncated-ring arithmetic vs series oracle, 500+ samples", criterion4},
        {5, "characteristic-p factorization for p=2,3", criterion5},
        {6, "characteristic-0 descent m=2 -> m=1 on the corpus", criterion6},
        {7, "class constants: proportionality and nonvanishing", criterion7},
        {8, "classification round-trips n<=5, lambda<=2, gamma,delta<=4", criterion8},
        {9, "property suites: Pick, superadditivity, cover, fg, phi/psi, mirror", criterion9},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all_ok = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.summary;
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << std::endl;
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
