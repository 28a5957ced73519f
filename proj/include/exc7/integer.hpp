#pragma once
// Big integers and rationals (GMP backed), valuations and factorization.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exc7 {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& n, const Integer& d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}
inline Rational make_rational(long n, long d) { return make_rational(Integer(n), Integer(d)); }

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

bool is_prime(const Integer& n);
bool is_prime(uint64_t n);

// ord_p of an integer or rational; nullopt stands for +infinity (x = 0).
std::optional<long> ord_p(const Integer& x, const Integer& p);
std::optional<long> ord_p(const Rational& x, const Integer& p);

Integer ipow(const Integer& b, unsigned long e);
Rational rpow(const Rational& b, long e);

// Prime factorization of |n| (n != 0) as prime -> exponent.
std::map<Integer, unsigned> factor(const Integer& n);

// All positive divisors of |n|, n != 0.
std::vector<Integer> divisors(const Integer& n);

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m);
uint64_t invmod_u64(uint64_t a, uint64_t m);

}  // namespace exc7
