#include "exc7/finite_field.hpp"

#include <mutex>

namespace exc7 {

namespace {

FpPoly x_pow_mod(uint64_t p, Integer e, const FpPoly& m) {
    Fp z = Fp::raw(0, p);
    FpPoly r = FpPoly::constant(Fp::raw(1, p)), b = FpPoly::x(z) % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<uint64_t, unsigned>, GF::RingPtr> rings;
};

Registry& registry() {
    static Registry r;
    return r;
}

FpPoly search_modulus(uint64_t p, unsigned k) {
    Fp z = Fp::raw(0, p);
    uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Fp> c(k + 1, z);
        uint64_t t = idx;
        for (unsigned i = 0; i < k; ++i) {
            c[i] = Fp::raw(t % p, p);
            t /= p;
        }
        c[k] = Fp::raw(1, p);
        FpPoly f(c, z);
        if (is_irreducible(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

bool is_irreducible(const FpPoly& f) {
    int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    uint64_t p = f.zero_elem().p;
    FpPoly m = f.monic();
    Fp z = Fp::raw(0, p);
    FpPoly x = FpPoly::x(z);
    Integer P(std::to_string(p));
    // x^(p^n) == x mod f
    if (x_pow_mod(p, ipow(P, n), m) != x % m) return false;
    for (const auto& [q, e] : factor(Integer(n))) {
        (void)e;
        unsigned long d = n / q.get_ui();
        FpPoly h = x_pow_mod(p, ipow(P, d), m) - x;
        if (poly_gcd(h % m, m).degree() != 0) return false;
    }
    return true;
}

FiniteField::FiniteField(uint64_t p, unsigned k, GF::RingPtr ring) : p_(p), k_(k), ring_(std::move(ring)) {
    q_ = 1;
    for (unsigned i = 0; i < k; ++i) q_ *= p;
}

FiniteField FiniteField::get(uint64_t p, unsigned k) {
    if (k < 1) throw std::invalid_argument("finite field degree must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("finite field characteristic must be prime");
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(p, k);
    auto it = reg.rings.find(key);
    if (it == reg.rings.end()) it = reg.rings.emplace(key, GF::make_ring(search_modulus(p, k))).first;
    return FiniteField(p, k, it->second);
}

std::map<std::pair<uint64_t, unsigned>, std::vector<uint64_t>> FiniteField::registry_snapshot() {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    std::map<std::pair<uint64_t, unsigned>, std::vector<uint64_t>> out;
    for (const auto& [key, ring] : reg.rings) {
        std::vector<uint64_t> c;
        for (const auto& a : ring->modulus.coeffs()) c.push_back(a.v);
        out[key] = c;
    }
    return out;
}

GF FiniteField::zero() const { return GF::from_int(ring_, 0); }
GF FiniteField::one() const { return GF::from_int(ring_, 1); }
GF FiniteField::from_int(long n) const { return GF::from_int(ring_, n); }

GF FiniteField::element(uint64_t packed) const {
    std::vector<Fp> c;
    for (unsigned i = 0; i < k_; ++i) {
        c.push_back(Fp::raw(packed % p_, p_));
        packed /= p_;
    }
    return GF(ring_, FpPoly(c, Fp::raw(0, p_)));
}

uint64_t FiniteField::pack(const GF& a) const {
    uint64_t r = 0;
    for (int i = a.rep().degree(); i >= 0; --i) r = r * p_ + a.rep().coeff(i).v;
    return r;
}

std::vector<GF> FiniteField::elements() const {
    std::vector<GF> out;
    out.reserve(q_);
    for (uint64_t i = 0; i < q_; ++i) out.push_back(element(i));
    return out;
}

FastField::FastField(const FiniteField& field) : p_(field.p()), q_(field.q()), k_(field.k()) {
    if (q_ > (1ull << 31)) throw std::invalid_argument("FastField: field too large for tables");
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    // coefficients of x^k in terms of lower powers: x^k = -sum m_i x^i
    std::vector<uint64_t> red(k_);
    for (unsigned i = 0; i < k_; ++i) red[i] = (p_ - field.modulus().coeff(i).v) % p_;

    Integer order(std::to_string(q_ - 1));
    auto primes = factor(order);
    auto is_generator = [&](const GF& g) {
        for (const auto& [l, e] : primes) {
            (void)e;
            if (field_pow(g, Integer(order / l)) == field.one()) return false;
        }
        return true;
    };
    uint64_t gpacked = 0;
    for (uint64_t c = 1; c < q_; ++c) {
        if (is_generator(field.element(c))) {
            gpacked = c;
            break;
        }
    }
    if (gpacked == 0) throw std::logic_error("FastField: no generator");

    std::vector<uint64_t> g(k_), cur(k_, 0), tmp(2 * k_, 0);
    for (unsigned i = 0, t = static_cast<unsigned>(gpacked); i < k_; ++i, t /= p_) g[i] = t % p_;
    cur[0] = 1;
    auto pack = [&](const std::vector<uint64_t>& v) {
        uint64_t r = 0;
        for (unsigned i = k_; i-- > 0;) r = r * p_ + v[i];
        return static_cast<uint32_t>(r);
    };
    for (uint64_t e = 0; e < q_ - 1; ++e) {
        uint32_t packed = pack(cur);
        exp_[e] = packed;
        log_[packed] = static_cast<uint32_t>(e);
        std::fill(tmp.begin(), tmp.end(), 0);
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; j < k_; ++j) tmp[i + j] = (tmp[i + j] + cur[i] * g[j]) % p_;
        for (unsigned d = 2 * k_ - 1; d-- > k_;) {
            uint64_t t = tmp[d];
            if (!t) continue;
            tmp[d] = 0;
            for (unsigned i = 0; i < k_; ++i) tmp[d - k_ + i] = (tmp[d - k_ + i] + t * red[i]) % p_;
        }
        for (unsigned i = 0; i < k_; ++i) cur[i] = tmp[i];
    }
}

uint32_t FastField::add(uint32_t a, uint32_t b) const {
    uint32_t r = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
        uint32_t d = (a % p_ + b % p_) % p_;
        r += d * place;
        place *= static_cast<uint32_t>(p_);
        a /= p_;
        b /= p_;
    }
    return r;
}

uint32_t FastField::neg(uint32_t a) const {
    uint32_t r = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
        uint32_t d = static_cast<uint32_t>((p_ - a % p_) % p_);
        r += d * place;
        place *= static_cast<uint32_t>(p_);
        a /= p_;
    }
    return r;
}

uint32_t FastField::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t e = static_cast<uint64_t>(log_[a]) + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

uint32_t FastField::from_int(long n) const {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<uint32_t>(r);
}

}  // namespace exc7
