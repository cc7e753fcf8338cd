// JSON serialization of verdicts.  Arbitrary-precision values are emitted
// as decimal strings and fractions as "p/q", so parse(emit(v)) == v holds
// with no range caveats.
#pragma once

#include <rees/decide.hpp>

#include <json.hpp>

#include <string>

namespace rees {

using json = nlohmann::json;

inline json to_json(const PrimeGenerators& g) {
    return json{{"s", g.s.get_str()},   {"t", g.t.get_str()},   {"u", g.u.get_str()},
                {"s2", g.s2.get_str()}, {"s3", g.s3.get_str()}, {"t1", g.t1.get_str()},
                {"t3", g.t3.get_str()}, {"u1", g.u1.get_str()}, {"u2", g.u2.get_str()}};
}

inline PrimeGenerators generators_from_json(const json& j) {
    auto f = [&](const char* k) { return Int(j.at(k).get<std::string>()); };
    return {f("s"), f("t"), f("u"), f("s2"), f("s3"), f("t1"), f("t3"), f("u1"), f("u2")};
}

inline json to_json(const SlopeTriple& s) {
    return json{{"tbar", format_rat(s.r1)}, {"ubar", format_rat(s.r2)}, {"sbar", format_rat(s.r3)}};
}

inline SlopeTriple slopes_from_json(const json& j) {
    return {parse_rat(j.at("tbar").get<std::string>()), parse_rat(j.at("ubar").get<std::string>()),
            parse_rat(j.at("sbar").get<std::string>())};
}

inline json to_json(const ClassifyResult& r) {
    if (std::holds_alternative<NotApplicable>(r)) {
        switch (std::get<NotApplicable>(r)) {
            case NotApplicable::emu_holds: return json{{"not_applicable", "emu_holds"}};
            case NotApplicable::edge_count_one: return json{{"not_applicable", "edge_count_one"}};
            case NotApplicable::both_two: return json{{"not_applicable", "both_two"}};
        }
    }
    const auto& d = std::get<ClassificationDatum>(r);
    return json{{"n", d.n},
                {"lambda", d.lambda},
                {"gamma", d.gamma.get_str()},
                {"delta", d.delta.get_str()},
                {"mirrored", d.mirrored}};
}

inline ClassifyResult classification_from_json(const json& j) {
    if (j.contains("not_applicable")) {
        auto s = j.at("not_applicable").get<std::string>();
        if (s == "emu_holds") return NotApplicable::emu_holds;
        if (s == "edge_count_one") return NotApplicable::edge_count_one;
        return NotApplicable::both_two;
    }
    return ClassificationDatum{j.at("n").get<long>(), j.at("lambda").get<long>(),
                               Int(j.at("gamma").get<std::string>()),
                               Int(j.at("delta").get<std::string>()), j.at("mirrored").get<bool>()};
}

inline json to_json(const Verdict& v) {
    json j;
    j["triple"] = {v.triple.a.get_str(), v.triple.b.get_str(), v.triple.c.get_str()};
    j["char"] = v.characteristic;
    switch (v.scope) {
        case Scope::in_scope: j["scope"] = "in_scope"; break;
        case Scope::complete_intersection: j["scope"] = "complete_intersection"; break;
        case Scope::no_negative_curve: j["scope"] = "no_negative_curve"; break;
    }
    if (v.gens) j["gens"] = to_json(*v.gens);
    if (v.slopes) j["slopes"] = to_json(*v.slopes);
    if (v.negative_curve) j["negative_curve"] = *v.negative_curve;
    if (v.emu) j["emu"] = *v.emu;
    j["noetherian"] = v.noetherian ? json(*v.noetherian) : json("out-of-scope");
    if (v.min_degree)
        j["minimal_degree"] = json{{"d", v.min_degree->d},
                                   {"f", v.min_degree->f},
                                   {"fprime", v.min_degree->fprime},
                                   {"missing", {v.min_degree->missing_point.first,
                                                v.min_degree->missing_point.second}}};
    if (v.classification) j["classification"] = to_json(*v.classification);
    if (v.oracle_agreement) j["oracle_agreement"] = *v.oracle_agreement;
    return j;
}

inline Verdict verdict_from_json(const json& j) {
    Verdict v;
    auto t = j.at("triple");
    v.triple = {Int(t.at(0).get<std::string>()), Int(t.at(1).get<std::string>()),
                Int(t.at(2).get<std::string>())};
    v.characteristic = j.at("char").get<unsigned long>();
    auto s = j.at("scope").get<std::string>();
    v.scope = s == "in_scope" ? Scope::in_scope
              : s == "complete_intersection" ? Scope::complete_intersection
                                             : Scope::no_negative_curve;
    if (j.contains("gens")) v.gens = generators_from_json(j.at("gens"));
    if (j.contains("slopes")) v.slopes = slopes_from_json(j.at("slopes"));
    if (j.contains("negative_curve")) v.negative_curve = j.at("negative_curve").get<bool>();
    if (j.contains("emu")) v.emu = j.at("emu").get<bool>();
    if (j.at("noetherian").is_boolean()) v.noetherian = j.at("noetherian").get<bool>();
    if (j.contains("minimal_degree")) {
        const auto& m = j.at("minimal_degree");
        v.min_degree = MinimalDegreeDatum{m.at("d").get<long>(), m.at("f").get<long>(),
                                          m.at("fprime").get<long>(),
                                          {m.at("missing").at(0).get<long>(), m.at("missing").at(1).get<long>()}};
    }
    if (j.contains("classification")) v.classification = classification_from_json(j.at("classification"));
    if (j.contains("oracle_agreement")) v.oracle_agreement = j.at("oracle_agreement").get<bool>();
    return v;
}

inline bool verdict_equal(const Verdict& x, const Verdict& y) {
    auto gens_eq = [](const PrimeGenerators& a, const PrimeGenerators& b) {
        return a.s == b.s && a.t == b.t && a.u == b.u && a.s2 == b.s2 && a.s3 == b.s3 &&
               a.t1 == b.t1 && a.t3 == b.t3 && a.u1 == b.u1 && a.u2 == b.u2;
    };
    if (!(x.triple.a == y.triple.a && x.triple.b == y.triple.b && x.triple.c == y.triple.c))
        return false;
    if (x.characteristic != y.characteristic || x.scope != y.scope) return false;
    if (x.gens.has_value() != y.gens.has_value()) return false;
    if (x.gens && !gens_eq(*x.gens, *y.gens)) return false;
    if (x.slopes != y.slopes) return false;
    if (x.negative_curve != y.negative_curve || x.emu != y.emu) return false;
    if (x.noetherian != y.noetherian) return false;
    if (x.min_degree.has_value() != y.min_degree.has_value()) return false;
    if (x.min_degree &&
        !(x.min_degree->d == y.min_degree->d && x.min_degree->f == y.min_degree->f &&
          x.min_degree->fprime == y.min_degree->fprime &&
          x.min_degree->missing_point == y.min_degree->missing_point))
        return false;
    if (x.classification != y.classification) return false;
    return x.oracle_agreement == y.oracle_agreement;
}

}  // namespace rees
