// Top-level decision: Noetherianity of the symbolic Rees ring of p(a,b,c).
// In characteristic 0 the verdict is the EMU condition; in characteristic
// p > 0 the ring is Noetherian whenever the negative curve exists.  Also
// hosts the three-way cross-validation between the lattice criterion, the
// truncated-ring factorization, and the curve search.
#pragma once

#include <rees/classify.hpp>
#include <rees/herzog.hpp>
#include <rees/oracle.hpp>
#include <rees/triangle.hpp>
#include <rees/truncring.hpp>

#include <optional>
#include <string>
#include <variant>

namespace rees {

struct CrossValidation {
    bool emu = false;
    bool factors = false;
    bool curve = false;
    bool agree = false;
};

inline CrossValidation cross_validate(const MonomialTriple& triple, uint64_t seed = 1) {
    CrossValidation cv;
    auto tri = triangle_of(triple);
    if (!negative_curve_holds(tri))
        throw HypothesisError("cross_validate: z^u - x^s3 y^t3 is not a negative curve");
    cv.emu = emu(tri, 1);
    cv.factors = factor_decision(triple, 1).status == FactorStatus::factors;
    cv.curve = curve_search(triple, 1, seed).has_value();
    cv.agree = (cv.emu == cv.factors) && (cv.factors == cv.curve);
    return cv;
}

enum class Scope { in_scope, complete_intersection, no_negative_curve };

struct Verdict {
    MonomialTriple triple;
    unsigned long characteristic = 0;
    Scope scope = Scope::in_scope;
    std::optional<PrimeGenerators> gens;
    std::optional<SlopeTriple> slopes;
    std::optional<bool> negative_curve;
    std::optional<bool> emu;
    std::optional<bool> noetherian;  // empty when out of scope
    std::optional<MinimalDegreeDatum> min_degree;
    std::optional<ClassifyResult> classification;
    std::optional<bool> oracle_agreement;
};

struct DecideOptions {
    unsigned long characteristic = 0;
    bool with_classification = true;
    bool with_oracles = false;  // run the three-way cross-validation too
    uint64_t seed = 1;
};

inline Verdict decide(const MonomialTriple& triple, const DecideOptions& opt = {}) {
    check_triple(triple);
    Verdict v;
    v.triple = triple;
    v.characteristic = opt.characteristic;
    try {
        v.gens = herzog_generators(triple);
    } catch (const CompleteIntersectionError&) {
        v.scope = Scope::complete_intersection;
        return v;
    }
    auto tri = triangle_from_generators(*v.gens);
    v.slopes = SlopeTriple{tri.tbar, tri.ubar, tri.sbar};
    v.negative_curve = negative_curve_holds(tri);
    v.emu = emu(tri, 1);
    if (!*v.negative_curve) {
        v.scope = Scope::no_negative_curve;
        return v;
    }
    if (opt.characteristic == 0) {
        v.noetherian = *v.emu;
    } else {
        v.noetherian = true;  // negative curve exists, so Noetherian in characteristic p
    }
    if (!*v.emu) v.min_degree = minimal_degree(tri, 1);
    if (opt.with_classification) v.classification = classify(triple);
    if (opt.with_oracles) v.oracle_agreement = cross_validate(triple, opt.seed).agree;
    return v;
}

}  // namespace rees
