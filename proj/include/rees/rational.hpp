// Exact integer/rational helpers on top of GMP.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace rees {

using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_rat(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }
inline Int ceil_rat(const Rat& x) { return ceil_div(x.get_num(), x.get_den()); }

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p". Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
    }
}

// Canonical "p/q" (or "p" when the denominator is 1).
inline std::string format_rat(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline long to_ll(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("value exceeds machine range: " + x.get_str());
    return x.get_si();
}

}  // namespace rees
