#include "exc7/integer.hpp"

#include <algorithm>
#include <random>

namespace exc7 {

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return make_rational(Integer(s.substr(0, slash)), d);
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(uint64_t n) { return is_prime(Integer(std::to_string(n))); }

std::optional<long> ord_p(const Integer& x, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("ord_p: modulus is not prime");
    if (x == 0) return std::nullopt;
    Integer y = abs(x);
    return static_cast<long>(mpz_remove(y.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t()));
}

std::optional<long> ord_p(const Rational& x, const Integer& p) {
    if (x == 0) {
        if (!is_prime(p)) throw std::invalid_argument("ord_p: modulus is not prime");
        return std::nullopt;
    }
    return *ord_p(x.get_num(), p) - *ord_p(x.get_den(), p);
}

Integer ipow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& b, long e) {
    if (e < 0) {
        if (b == 0) throw std::domain_error("rpow: zero to negative power");
        return rpow(Rational(1) / b, -e);
    }
    return make_rational(ipow(b.get_num(), e), ipow(b.get_den(), e));
}

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    std::mt19937_64 rng(seed);
    for (;;) {
        Integer c = Integer(static_cast<unsigned long>(rng() % 1000003)) % n + 1;
        Integer y = Integer(static_cast<unsigned long>(rng())) % n;
        Integer g = 1, r = 1, q = 1, x, ys;
        const unsigned long m = 128;
        auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
        while (g == 1) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = f(y);
            Integer k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < m && k + i < r; ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
        ++seed;
    }
}

void factor_rec(const Integer& n, std::map<Integer, unsigned>& out, unsigned long seed) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n, seed);
    factor_rec(d, out, seed + 1);
    factor_rec(Integer(n / d), out, seed + 2);
}

}  // namespace

std::map<Integer, unsigned> factor(const Integer& n) {
    if (n == 0) throw std::invalid_argument("factor: zero");
    std::map<Integer, unsigned> out;
    Integer m = abs(n);
    for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
        if (p > 2 && p % 2 == 0) continue;
        if (Integer(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Integer(p)];
            m /= p;
        }
    }
    factor_rec(m, out, 1);
    return out;
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : factor(n)) {
        std::size_t cur = ds.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
    unsigned __int128 r = 1 % m, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<uint64_t>(r);
}

uint64_t invmod_u64(uint64_t a, uint64_t m) {
    Integer r, A(std::to_string(a)), M(std::to_string(m));
    if (!mpz_invert(r.get_mpz_t(), A.get_mpz_t(), M.get_mpz_t()))
        throw std::domain_error("invmod: not invertible");
    return std::stoull(r.get_str());
}

}  // namespace exc7
