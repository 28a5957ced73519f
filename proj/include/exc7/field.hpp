#pragma once
// Field traits and the prime field element Fp.

#include "exc7/integer.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace exc7 {

// Element of Z/p with p < 2^62 stored inline so values are self-describing.
struct Fp {
    uint64_t v = 0;
    uint64_t p = 2;

    Fp() = default;
    Fp(long long x, uint64_t prime) : p(prime) {
        long long r = x % static_cast<long long>(prime);
        if (r < 0) r += static_cast<long long>(prime);
        v = static_cast<uint64_t>(r);
    }
    static Fp raw(uint64_t val, uint64_t prime) {
        Fp f;
        f.v = val;
        f.p = prime;
        return f;
    }

    Fp operator+(const Fp& o) const {
        uint64_t s = v + o.v;
        return raw(s >= p ? s - p : s, p);
    }
    Fp operator-(const Fp& o) const { return raw(v >= o.v ? v - o.v : v + p - o.v, p); }
    Fp operator-() const { return raw(v == 0 ? 0 : p - v, p); }
    Fp operator*(const Fp& o) const {
        return raw(static_cast<uint64_t>(static_cast<unsigned __int128>(v) * o.v % p), p);
    }
    Fp inverse() const {
        if (v == 0) throw std::domain_error("Fp: inverse of zero");
        return raw(powmod_u64(v, p - 2, p), p);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    bool operator==(const Fp& o) const { return v == o.v; }
    bool operator!=(const Fp& o) const { return v != o.v; }
    Fp pow(uint64_t e) const { return raw(powmod_u64(v, e, p), p); }
};

inline std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v; }

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static Rational from_int(long n, const Rational&) { return Rational(n); }
    static Rational from_integer(const Integer& n, const Rational&) { return Rational(n); }
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational inv(const Rational& a) {
        if (a == 0) throw std::domain_error("Rational: inverse of zero");
        return Rational(1) / a;
    }
    static std::string str(const Rational& a) { return to_string(a); }
};

template <>
struct FieldTraits<Fp> {
    static Fp zero(const Fp& like) { return Fp::raw(0, like.p); }
    static Fp one(const Fp& like) { return Fp::raw(1 % like.p, like.p); }
    static Fp from_int(long n, const Fp& like) { return Fp(n, like.p); }
    static Fp from_integer(const Integer& n, const Fp& like) {
        Integer r = n % Integer(std::to_string(like.p));
        if (r < 0) r += Integer(std::to_string(like.p));
        return Fp::raw(std::stoull(r.get_str()), like.p);
    }
    static bool is_zero(const Fp& a) { return a.v == 0; }
    static Fp inv(const Fp& a) { return a.inverse(); }
    static std::string str(const Fp& a) { return std::to_string(a.v); }
};

template <class F>
F field_pow(const F& a, Integer e) {
    if (e < 0) return field_pow(FieldTraits<F>::inv(a), Integer(-e));
    F r = FieldTraits<F>::one(a), b = a;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

template <class F>
F field_pow(const F& a, long e) {
    return field_pow(a, Integer(e));
}

}  // namespace exc7
