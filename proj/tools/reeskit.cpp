// reeskit: finite-generation toolkit for symbolic Rees rings of space
// monomial primes p(a,b,c).
//
// Subcommands: decide | triangle | classify | construct | oracle | reduce | scan
// Exit codes: 0 ok, 1 internal error, 2 hypothesis violation,
//             3 complete intersection.

#include <rees/decide.hpp>
#include <rees/scan.hpp>
#include <rees/verdict_json.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rees;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitCI = 3;

MonomialTriple parse_triple(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3) throw CLI::ValidationError("--triple expects a,b,c");
    return {Int(parts[0]), Int(parts[1]), Int(parts[2])};
}

SlopeTriple parse_slopes(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3) throw CLI::ValidationError("--slopes expects t,u,s as fractions p/q");
    return {parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2])};
}

void print_verdict_text(const Verdict& v) {
    std::cout << "triple: (" << v.triple.a << ", " << v.triple.b << ", " << v.triple.c << ")\n";
    if (v.scope == Scope::complete_intersection) {
        std::cout << "scope: complete intersection (out of scope)\n";
        return;
    }
    const auto& g = *v.gens;
    std::cout << "generators: x^" << g.s << " - y^" << g.t1 << " z^" << g.u1 << ", y^" << g.t
              << " - x^" << g.s2 << " z^" << g.u2 << ", z^" << g.u << " - x^" << g.s3 << " y^"
              << g.t3 << "\n";
    std::cout << "slopes: tbar=" << format_rat(v.slopes->r1) << " ubar=" << format_rat(v.slopes->r2)
              << " sbar=" << format_rat(v.slopes->r3) << "\n";
    std::cout << "negative_curve: " << (*v.negative_curve ? "yes" : "no") << "\n";
    std::cout << "emu: " << (*v.emu ? "yes" : "no") << "\n";
    if (v.min_degree)
        std::cout << "minimal_degree: d=" << v.min_degree->d << " f=" << v.min_degree->f
                  << " f'=" << v.min_degree->fprime << " missing=(" << v.min_degree->missing_point.first
                  << "," << v.min_degree->missing_point.second << ")\n";
    if (v.classification) {
        json cj = to_json(*v.classification);
        std::cout << "classification: " << cj.dump() << "\n";
    }
    if (v.oracle_agreement) std::cout << "oracle_agreement: " << (*v.oracle_agreement ? "yes" : "no") << "\n";
    if (v.scope == Scope::no_negative_curve)
        std::cout << "noetherian: out-of-scope (z^u is not a negative curve)\n";
    else
        std::cout << "noetherian: " << (*v.noetherian ? "yes" : "no")
                  << (v.characteristic ? " (char p theorem)" : "") << "\n";
}

int scope_exit_code(Scope s) {
    switch (s) {
        case Scope::complete_intersection: return kExitCI;
        case Scope::no_negative_curve: return kExitHypothesis;
        default: return kExitOk;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-generation decisions for symbolic Rees rings of p(a,b,c)"};
    app.require_subcommand(1);

    std::string triple_arg, slopes_arg, datum_arg, out_path;
    unsigned long char_p = 0;
    bool as_json = false;
    long m = 1;
    long scan_max = 20;
    unsigned jobs = 1;
    uint64_t seed = 1;
    std::string max_den = "1000000";
    bool no_oracles = false;
    bool with_oracles = false;

    auto add_common = [&](CLI::App* cmd, bool with_slopes = false) {
        cmd->add_option("--triple", triple_arg, "triple a,b,c");
        if (with_slopes) cmd->add_option("--slopes", slopes_arg, "slopes t,u,s (fractions p/q)");
        cmd->add_option("--char", char_p, "coefficient field characteristic (0 or prime)");
        cmd->add_flag("--json", as_json, "machine-readable JSON output");
        cmd->add_option("--seed", seed, "seed for the oracle fast path (never affects results)");
    };

    auto* cmd_decide = app.add_subcommand("decide", "Noetherian or not, by the lattice criterion");
    add_common(cmd_decide);
    cmd_decide->add_flag("--oracles", with_oracles, "also run the three-way oracle cross-check");

    auto* cmd_triangle = app.add_subcommand("triangle", "column counts of the dilated triangle");
    add_common(cmd_triangle, /*with_slopes=*/true);
    cmd_triangle->add_option("--m", m, "dilation factor");

    auto* cmd_classify = app.add_subcommand("classify", "(n, lambda, gamma, delta) classification");
    add_common(cmd_classify);

    auto* cmd_construct = app.add_subcommand("construct", "search a triple realizing a classification");
    cmd_construct->add_option("--datum", datum_arg, "datum n,lambda,gamma,delta")->required();
    cmd_construct->add_option("--max-den", max_den, "slope denominator bound for the search");
    cmd_construct->add_flag("--json", as_json, "machine-readable JSON output");

    auto* cmd_oracle = app.add_subcommand("oracle", "curve search: divisor disjoint from the negative curve");
    add_common(cmd_oracle);
    cmd_oracle->add_option("--m", m, "multiple of (ab H - u E)");

    auto* cmd_reduce = app.add_subcommand("reduce", "truncated-ring reduction of xi^m");
    add_common(cmd_reduce);
    cmd_reduce->add_option("--m", m, "power of the transition function");

    auto* cmd_scan = app.add_subcommand("scan", "CSV scan over pairwise-coprime triples");
    cmd_scan->add_option("--max", scan_max, "largest coordinate")->required();
    cmd_scan->add_option("--jobs", jobs, "worker threads");
    cmd_scan->add_option("--out", out_path, "output file (default stdout)");
    cmd_scan->add_option("--seed", seed, "seed for the oracle fast path");
    cmd_scan->add_flag("--no-oracles", no_oracles, "skip the per-row oracle agreement column");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_decide->parsed()) {
            DecideOptions opt;
            opt.characteristic = char_p;
            opt.with_oracles = with_oracles;
            opt.seed = seed;
            auto v = decide(parse_triple(triple_arg), opt);
            if (as_json) std::cout << to_json(v).dump(2) << "\n";
            else print_verdict_text(v);
            return scope_exit_code(v.scope);
        }

        if (cmd_triangle->parsed()) {
            RationalTriangle tri;
            if (!slopes_arg.empty()) {
                auto s = parse_slopes(slopes_arg);
                tri = triangle_from_slopes(s.r1, s.r2, s.r3);
            } else {
                tri = triangle_of(parse_triple(triple_arg));
            }
            auto p = column_counts(tri, m);
            if (as_json) {
                json j;
                j["m"] = m;
                j["counts"] = json::array();
                j["sorted"] = json::array();
                for (const auto& q : p.counts) j["counts"].push_back(q.get_str());
                for (const auto& q : p.sorted) j["sorted"].push_back(q.get_str());
                j["emu"] = emu_from_sorted(p.sorted);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "counts:";
                for (const auto& q : p.counts) std::cout << ' ' << q;
                std::cout << "\nsorted:";
                for (const auto& q : p.sorted) std::cout << ' ' << q;
                std::cout << "\nemu: " << (emu_from_sorted(p.sorted) ? "yes" : "no") << "\n";
            }
            return kExitOk;
        }

        if (cmd_classify->parsed()) {
            auto r = classify(parse_triple(triple_arg));
            std::cout << to_json(r).dump(2) << "\n";
            return kExitOk;
        }

        if (cmd_construct->parsed()) {
            std::vector<long> parts;
            std::stringstream ss(datum_arg);
            std::string item;
            while (std::getline(ss, item, ',')) parts.push_back(std::stol(item));
            if (parts.size() != 4) throw CLI::ValidationError("--datum expects n,lambda,gamma,delta");
            ClassificationDatum datum{parts[0], parts[1], Int(parts[2]), Int(parts[3]), false};
            auto t = construct_triple(datum, Int(max_den));
            if (as_json) {
                json j;
                j["triple"] = {t.a.get_str(), t.b.get_str(), t.c.get_str()};
                j["datum"] = to_json(ClassifyResult(datum));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "triple: (" << t.a << ", " << t.b << ", " << t.c << ")\n";
            }
            return kExitOk;
        }

        if (cmd_oracle->parsed()) {
            auto g = curve_search(parse_triple(triple_arg), m, seed);
            if (as_json) {
                json j;
                j["found"] = g.has_value();
                if (g) {
                    j["vanishing_order"] = vanishing_order(*g);
                    json terms = json::array();
                    for (const auto& [p, c] : g->coeff)
                        terms.push_back({p.first, p.second, format_rat(c)});
                    j["divisor"] = terms;
                }
                std::cout << j.dump(2) << "\n";
            } else if (g) {
                std::cout << "found divisor with " << g->coeff.size()
                          << " terms, vanishing order " << vanishing_order(*g) << "\n";
            } else {
                std::cout << "no divisor disjoint from the negative curve at m=" << m << "\n";
            }
            return kExitOk;
        }

        if (cmd_reduce->parsed()) {
            auto report = factor_decision(parse_triple(triple_arg), m, CoefficientField{char_p});
            json j;
            j["m"] = m;
            j["char"] = char_p;
            switch (report.status) {
                case FactorStatus::factors: j["status"] = "factors"; break;
                case FactorStatus::obstructed: j["status"] = "obstructed"; break;
                case FactorStatus::inconclusive: j["status"] = "inconclusive"; break;
            }
            if (report.witness) j["witness"] = {report.witness->first, report.witness->second};
            json obs = json::array();
            for (const auto& [p, c] : report.obstructions) obs.push_back({p.first, p.second, c});
            j["obstructions"] = obs;
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "status: " << j["status"].get<std::string>() << "\n";
                for (const auto& o : j["obstructions"])
                    std::cout << "obstruction at (" << o[0] << "," << o[1]
                              << "): " << o[2].get<std::string>() << "\n";
            }
            return kExitOk;
        }

        if (cmd_scan->parsed()) {
            ScanOptions opt;
            opt.max = scan_max;
            opt.jobs = jobs;
            opt.with_oracles = !no_oracles;
            opt.seed = seed;
            if (out_path.empty()) {
                scan(std::cout, opt);
            } else {
                std::ofstream out(out_path);
                if (!out) throw std::runtime_error("cannot open output file " + out_path);
                scan(out, opt);
                if (!out.good()) throw std::runtime_error("write failure on " + out_path);
            }
            return kExitOk;
        }
    } catch (const CompleteIntersectionError& e) {
        std::cerr << "complete intersection: " << e.what() << "\n";
        return kExitCI;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
