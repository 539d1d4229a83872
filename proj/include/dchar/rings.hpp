#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "dchar/errors.hpp"

namespace dchar {

// Exact coefficient rings. Int and Rat are GMP arbitrary precision; floating
// point never appears in any algebraic path.
using Int = mpz_class;
using Rat = mpq_class;

// The field with two elements.
struct F2 {
    uint8_t v = 0;

    F2() = default;
    F2(int x) : v(static_cast<uint8_t>(x & 1)) {}
    explicit F2(const Int& x) : v(static_cast<uint8_t>(mpz_odd_p(x.get_mpz_t()) ? 1 : 0)) {}

    friend F2 operator+(F2 a, F2 b) { return F2(a.v ^ b.v); }
    friend F2 operator-(F2 a, F2 b) { return F2(a.v ^ b.v); }
    friend F2 operator*(F2 a, F2 b) { return F2(a.v & b.v); }
    F2 operator-() const { return *this; }
    F2& operator+=(F2 b) {
        v ^= b.v;
        return *this;
    }
    F2& operator-=(F2 b) {
        v ^= b.v;
        return *this;
    }
    F2& operator*=(F2 b) {
        v &= b.v;
        return *this;
    }
    friend bool operator==(F2 a, F2 b) { return a.v == b.v; }
    friend bool operator!=(F2 a, F2 b) { return a.v != b.v; }
};

enum class Ring { Int, Mod2, Rat };

inline const char* ring_name(Ring r) {
    switch (r) {
        case Ring::Int: return "int";
        case Ring::Mod2: return "mod2";
        case Ring::Rat: return "rat";
    }
    return "?";
}

inline Ring parse_ring(const std::string& s) {
    if (s == "int" || s == "z") return Ring::Int;
    if (s == "mod2" || s == "z2") return Ring::Mod2;
    if (s == "rat" || s == "q") return Ring::Rat;
    throw DescriptorError("unknown ring '" + s + "' (expected int|mod2|rat)");
}

template <class R>
struct RingTraits;

template <>
struct RingTraits<Int> {
    static constexpr Ring id = Ring::Int;
    static bool is_zero(const Int& x) { return sgn(x) == 0; }
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static Int from_int(long v) { return Int(v); }
    static std::string str(const Int& x) { return x.get_str(); }
};

template <>
struct RingTraits<Rat> {
    static constexpr Ring id = Ring::Rat;
    static bool is_zero(const Rat& x) { return sgn(x) == 0; }
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long v) { return Rat(v); }
    static std::string str(const Rat& x) { return x.get_str(); }
};

template <>
struct RingTraits<F2> {
    static constexpr Ring id = Ring::Mod2;
    static bool is_zero(F2 x) { return x.v == 0; }
    static F2 zero() { return F2(0); }
    static F2 one() { return F2(1); }
    static F2 from_int(long v) { return F2(static_cast<int>(v & 1)); }
    static std::string str(F2 x) { return x.v ? "1" : "0"; }
};

inline Rat to_rat(const Int& x) { return Rat(x); }
inline F2 to_f2(const Int& x) { return F2(x); }

// Is a rational actually an integer?
inline bool is_integral(const Rat& q) { return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0; }

// Reduce a rational to its representative in [0, 1).
inline Rat mod_one(const Rat& q) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    Rat r = q - Rat(fl);
    r.canonicalize();
    return r;
}

}  // namespace dchar
