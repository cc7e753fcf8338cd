// Corpus scan: enumerate pairwise-coprime ordered triples up to a bound,
// keep those satisfying the standing hypotheses (non-CI, z^u negative
// curve), and emit one CSV row per in-scope triple.  Rows are computed on a
// thread pool but written in enumeration order, so the output bytes do not
// depend on the job count.
#pragma once

#include <rees/decide.hpp>

#include <atomic>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace rees {

inline const char* kScanHeader =
    "a,b,c,u,u2,emu,min_degree,class_n,class_lambda,class_gamma,class_delta,oracle_agree";

// Ordered triples (all six role assignments) of pairwise-coprime values
// <= max satisfying the standing hypotheses, in lexicographic order.
inline std::vector<MonomialTriple> in_scope_triples(long max) {
    std::vector<MonomialTriple> out;
    for (long a = 2; a <= max; ++a)
        for (long b = 2; b <= max; ++b) {
            if (a == b) continue;
            for (long c = 2; c <= max; ++c) {
                if (c == a || c == b) continue;
                MonomialTriple t{a, b, c};
                if (!pairwise_coprime(t)) continue;
                try {
                    auto gens = herzog_generators(t);
                    if (!negative_curve_holds(triangle_from_generators(gens))) continue;
                } catch (const CompleteIntersectionError&) {
                    continue;
                }
                out.push_back(t);
            }
        }
    return out;
}

template <class Fn>
void parallel_for(size_t count, unsigned jobs, Fn&& fn) {
    if (jobs == 0) jobs = 1;
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

struct ScanOptions {
    long max = 20;
    unsigned jobs = 1;
    bool with_oracles = true;  // run the three-way agreement per row
    uint64_t seed = 1;
};

inline std::string scan_row(const MonomialTriple& t, bool with_oracles, uint64_t seed) {
    auto gens = herzog_generators(t);
    auto tri = triangle_from_generators(gens);
    std::ostringstream os;
    os << t.a << ',' << t.b << ',' << t.c << ',' << gens.u << ',' << gens.u2 << ',';
    bool e = emu(tri, 1);
    os << (e ? "true" : "false") << ',';
    if (!e) os << minimal_degree(tri, 1).d;
    os << ',';
    auto cls = classify(t);
    if (std::holds_alternative<ClassificationDatum>(cls)) {
        const auto& d = std::get<ClassificationDatum>(cls);
        os << d.n << ',' << d.lambda << ',' << d.gamma << ',' << d.delta << ',';
    } else {
        os << ",,,,";
    }
    if (with_oracles) os << (cross_validate(t, seed).agree ? "true" : "false");
    return os.str();
}

inline void scan(std::ostream& out, const ScanOptions& opt) {
    if (opt.max < 3) throw std::invalid_argument("scan: max must be >= 3");
    auto in_scope = in_scope_triples(opt.max);
    std::vector<std::string> rows(in_scope.size());
    parallel_for(in_scope.size(), opt.jobs,
                 [&](size_t i) { rows[i] = scan_row(in_scope[i], opt.with_oracles, opt.seed); });
    out << kScanHeader << '\n';
    for (const auto& r : rows) out << r << '\n';
}

}  // namespace rees
