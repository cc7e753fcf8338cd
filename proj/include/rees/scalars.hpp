// Coefficient scalars for the truncated-ring arithmetic: exact integers,
// exact rationals, and prime fields.  Field objects carry runtime context
// (the modulus) so the same templated code serves every characteristic.
#pragma once

#include <rees/rational.hpp>

#include <stdexcept>

namespace rees {

struct CoefficientField {
    unsigned long characteristic = 0;  // 0 or a prime
};

// Integers.  Inversion is defined for +-1 only; anything else signals a
// computation that silently left the integral world.
struct ZRing {
    using Value = Int;
    static constexpr unsigned long characteristic = 0;
    Value zero() const { return Int(0); }
    Value one() const { return Int(1); }
    Value from_int(const Int& v) const { return v; }
    bool is_zero(const Value& v) const { return v == 0; }
    Value neg(const Value& v) const { return -v; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value inv(const Value& v) const {
        if (v == 1 || v == -1) return v;
        throw std::domain_error("ZRing: only units +-1 are invertible; use QField");
    }
};

struct QField {
    using Value = Rat;
    static constexpr unsigned long characteristic = 0;
    Value zero() const { return Rat(0); }
    Value one() const { return Rat(1); }
    Value from_int(const Int& v) const { return Rat(v); }
    bool is_zero(const Value& v) const { return sgn(v) == 0; }
    Value neg(const Value& v) const { return -v; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value inv(const Value& v) const {
        if (sgn(v) == 0) throw std::domain_error("QField: division by zero");
        return 1 / v;
    }
};

struct FpField {
    using Value = unsigned long;
    unsigned long p;

    explicit FpField(unsigned long prime) : p(prime) {
        if (p < 2) throw std::invalid_argument("FpField: modulus must be a prime >= 2");
    }
    Value zero() const { return 0; }
    Value one() const { return 1 % p; }
    Value from_int(const Int& v) const {
        Value r = mpz_fdiv_ui(v.get_mpz_t(), p);
        return r;
    }
    bool is_zero(const Value& v) const { return v == 0; }
    Value neg(const Value& v) const { return v == 0 ? 0 : p - v; }
    Value add(const Value& a, const Value& b) const {
        Value s = a + b;
        return s >= p ? s - p : s;
    }
    Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
    Value mul(const Value& a, const Value& b) const {
        return static_cast<Value>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Value inv(const Value& v) const {
        if (v == 0) throw std::domain_error("FpField: division by zero");
        // extended Euclid
        long t = 0, nt = 1;
        long r = static_cast<long>(p), nr = static_cast<long>(v);
        while (nr != 0) {
            long q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        if (r != 1) throw std::domain_error("FpField: non-invertible element");
        return static_cast<Value>(t < 0 ? t + static_cast<long>(p) : t);
    }
};

}  // namespace rees
