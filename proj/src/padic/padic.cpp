#include "exc7/padic.hpp"

#include <algorithm>
#include <sstream>

namespace exc7::padic {

namespace {

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

long v7_int(const Integer& x) {
    // x != 0
    Integer t = x;
    return static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), Integer(7).get_mpz_t()));
}

}  // namespace

// ---------------------------------------------------------------- PadicInteger

PadicInteger::PadicInteger(long p, long N, const Integer& value) : p_(p), N_(N) {
    if (!is_prime(Integer(p))) throw std::invalid_argument("PadicInteger: p must be prime");
    if (N < 1) throw std::invalid_argument("PadicInteger: precision must be positive");
    r_ = mod_floor(value, ipow(Integer(p), N));
}

PadicInteger PadicInteger::from_rational(long p, long N, const Rational& q) {
    Integer m = ipow(Integer(p), N);
    Integer den = q.get_den();
    if (den % p == 0) throw std::domain_error("PadicInteger: denominator divisible by p");
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    return PadicInteger(p, N, q.get_num() * inv);
}

std::optional<long> PadicInteger::valuation() const {
    if (r_ == 0) return std::nullopt;
    return *ord_p(r_, Integer(p_));
}

std::vector<long> PadicInteger::digits() const {
    std::vector<long> d;
    Integer t = r_;
    for (long i = 0; i < N_; ++i) {
        Integer q = t % p_;
        d.push_back(q.get_si());
        t /= p_;
    }
    return d;
}

std::string PadicInteger::str() const {
    std::ostringstream os;
    auto d = digits();
    bool first = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << d[i];
        if (i > 0) os << "*" << p_ << "^" << i;
    }
    if (first) os << "0";
    os << " + O(" << p_ << "^" << N_ << ")";
    return os.str();
}

static void same_prime(const PadicInteger& a, const PadicInteger& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("PadicInteger: prime mismatch");
}

PadicInteger PadicInteger::operator+(const PadicInteger& o) const {
    same_prime(*this, o);
    return PadicInteger(p_, std::min(N_, o.N_), r_ + o.r_);
}
PadicInteger PadicInteger::operator-(const PadicInteger& o) const {
    same_prime(*this, o);
    return PadicInteger(p_, std::min(N_, o.N_), r_ - o.r_);
}
PadicInteger PadicInteger::operator*(const PadicInteger& o) const {
    same_prime(*this, o);
    return PadicInteger(p_, std::min(N_, o.N_), r_ * o.r_);
}
PadicInteger PadicInteger::operator-() const { return PadicInteger(p_, N_, -r_); }
bool PadicInteger::operator==(const PadicInteger& o) const {
    same_prime(*this, o);
    Integer m = ipow(Integer(p_), std::min(N_, o.N_));
    return mod_floor(r_ - o.r_, m) == 0;
}

// ---------------------------------------------------------------- LocalField

std::vector<long> LocalField::eisenstein() { return {7, 21, 35, 35, 21, 7, 1}; }

LocalField::LocalField(long N) : N_(N) {
    // one guard 7-adic digit beyond the working precision
    M_ = (N + 5) / 6 + 1;
    mod_ = ipow(Integer(7), M_);
}

LocalFieldPtr LocalField::make(long precision) {
    if (precision < kMinPrecision)
        throw std::invalid_argument("LocalField: precision below the safety floor of 20 pi-digits");
    std::shared_ptr<LocalField> K(new LocalField(precision));
    // 7 = -pi^6 / (1 + 3pi + 5pi^2 + 5pi^3 + 3pi^4 + pi^5)
    LocalElement w(K, {1, 3, 5, 5, 3, 1}, K->N_);
    K->seven_unit_ = (-w.inverse()).coeffs();
    LocalElement p = K->pi(), one = K->one();
    for (int m = 1; m <= 7; ++m) K->level_inv_[m] = (one + p.pow(m)).inverse().coeffs();
    return K;
}

void LocalField::normalize(std::array<Integer, 6>& c) const {
    for (auto& x : c) x = mod_floor(x, mod_);
}

void LocalField::reduce(std::array<Integer, 11>& w, std::array<Integer, 6>& out) const {
    static const long E[6] = {7, 21, 35, 35, 21, 7};
    for (int d = 10; d >= 6; --d) {
        if (w[d] == 0) continue;
        Integer t = w[d];
        w[d] = 0;
        for (int i = 0; i < 6; ++i) w[d - 6 + i] -= t * E[i];
    }
    for (int i = 0; i < 6; ++i) out[i] = mod_floor(w[i], mod_);
}

LocalElement LocalField::zero() const { return from_int(0); }
LocalElement LocalField::one() const { return from_int(1); }
LocalElement LocalField::from_int(const Integer& n) const {
    return LocalElement(shared_from_this(), {n, 0, 0, 0, 0, 0}, N_);
}
LocalElement LocalField::from_rational(const Rational& q) const {
    Integer den = q.get_den();
    if (den % 7 == 0) throw std::domain_error("LocalField::from_rational: value is not 7-integral");
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod_.get_mpz_t());
    return from_int(q.get_num() * inv);
}
LocalElement LocalField::pi() const { return LocalElement(shared_from_this(), {0, 1, 0, 0, 0, 0}, N_); }
LocalElement LocalField::zeta() const { return LocalElement(shared_from_this(), {1, 1, 0, 0, 0, 0}, N_); }

LocalElement LocalField::from_pi_digits(const std::vector<long>& digits) const {
    LocalElement r = zero(), p = one(), P = pi();
    for (long d : digits) {
        r = r + from_int(d) * p;
        p = p * P;
    }
    return r;
}

LocalElement LocalField::teichmuller(long a) const {
    a = ((a % 7) + 7) % 7;
    if (a == 0) throw std::domain_error("teichmuller: zero residue");
    Integer w;
    Integer e = ipow(Integer(7), M_);
    mpz_powm(w.get_mpz_t(), Integer(a).get_mpz_t(), e.get_mpz_t(), mod_.get_mpz_t());
    return from_int(w);
}

LocalElement LocalField::seven_unit() const { return LocalElement(shared_from_this(), seven_unit_, N_); }

LocalElement LocalField::level_inverse(int m) const {
    if (m < 1 || m > 7) throw std::out_of_range("level_inverse: m outside 1..7");
    return LocalElement(shared_from_this(), level_inv_[m], N_);
}

// ---------------------------------------------------------------- LocalElement

LocalElement::LocalElement(LocalFieldPtr K, std::array<Integer, 6> c, long prec)
    : K_(std::move(K)), c_(std::move(c)), prec_(std::min(prec, K_->precision())) {
    K_->normalize(c_);
}

LocalElement LocalElement::with_precision(long prec) const {
    LocalElement r = *this;
    r.prec_ = std::min(prec_, prec);
    return r;
}

std::optional<long> LocalElement::valuation() const {
    long best = prec_;
    for (int i = 0; i < 6; ++i) {
        if (c_[i] == 0) continue;
        best = std::min(best, 6 * v7_int(c_[i]) + i);
    }
    if (best >= prec_) return std::nullopt;
    return best;
}

static void check_same(const LocalElement& a, const LocalElement& b) {
    if (a.field() != b.field()) throw std::invalid_argument("LocalElement: elements from different contexts");
}

LocalElement LocalElement::operator+(const LocalElement& o) const {
    check_same(*this, o);
    std::array<Integer, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = c_[i] + o.c_[i];
    return LocalElement(K_, c, std::min(prec_, o.prec_));
}

LocalElement LocalElement::operator-(const LocalElement& o) const {
    check_same(*this, o);
    std::array<Integer, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = c_[i] - o.c_[i];
    return LocalElement(K_, c, std::min(prec_, o.prec_));
}

LocalElement LocalElement::operator-() const {
    std::array<Integer, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = -c_[i];
    return LocalElement(K_, c, prec_);
}

LocalElement LocalElement::operator*(const LocalElement& o) const {
    check_same(*this, o);
    std::array<Integer, 11> w;
    for (auto& x : w) x = 0;
    for (int i = 0; i < 6; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < 6; ++j) w[i + j] += c_[i] * o.c_[j];
    }
    std::array<Integer, 6> c;
    K_->reduce(w, c);
    long va = valuation().value_or(prec_), vb = o.valuation().value_or(o.prec_);
    return LocalElement(K_, c, std::min(va + o.prec_, vb + prec_));
}

LocalElement LocalElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    LocalElement r = K_->one(), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

LocalElement LocalElement::inverse() const {
    if (c_[0] % 7 == 0) throw std::domain_error("LocalElement::inverse: not a unit");
    Integer inv;
    mpz_invert(inv.get_mpz_t(), c_[0].get_mpz_t(), K_->coeff_modulus().get_mpz_t());
    LocalElement y = K_->from_int(inv);
    LocalElement two = K_->from_int(2);
    // y(2 - uy) doubles the number of correct digits
    for (int it = 0; it < 64 && !(*this * y - K_->one()).is_zero(); ++it) y = y * (two - *this * y);
    y.prec_ = prec_;
    return y;
}

LocalElement LocalElement::div_pi() const {
    if (c_[0] % 7 != 0) throw std::domain_error("LocalElement::div_pi: valuation is zero");
    // 7/pi = -(21 + 35pi + 35pi^2 + 21pi^3 + 7pi^4 + pi^5)
    static const long S[6] = {21, 35, 35, 21, 7, 1};
    Integer q = c_[0] / 7;
    std::array<Integer, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = -q * S[i] + (i < 5 ? c_[i + 1] : Integer(0));
    return LocalElement(K_, c, prec_ - 1);
}

LocalElement LocalElement::div_pi_pow(long k) const {
    LocalElement r = *this;
    for (long i = 0; i < k; ++i) r = r.div_pi();
    return r;
}

bool LocalElement::congruent(const LocalElement& o) const { return (*this - o).is_zero(); }

bool LocalElement::congruent(const LocalElement& o, long n) const {
    return (*this - o).with_precision(n).is_zero();
}

std::vector<int> LocalElement::pi_digits(long count) const {
    std::vector<int> d;
    LocalElement r = *this;
    for (long i = 0; i < count && i < prec_; ++i) {
        int di = static_cast<int>(mod_floor(r.c_[0], Integer(7)).get_si());
        d.push_back(di);
        r = (r - K_->from_int(di)).div_pi();
    }
    return d;
}

std::string LocalElement::str(long count) const {
    auto d = pi_digits(count);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << d[i];
        if (i == 1) os << "*pi";
        if (i > 1) os << "*pi^" << i;
    }
    if (first) os << "0";
    os << " + O(pi^" << std::min<long>(count, prec_) << ")";
    return os.str();
}

// ---------------------------------------------------------------- unit classes

UnitClassVector class_add(const UnitClassVector& a, const UnitClassVector& b) {
    UnitClassVector r;
    for (int i = 0; i < 8; ++i) r[i] = (a[i] + b[i]) % 7;
    return r;
}

UnitClassVector class_sub(const UnitClassVector& a, const UnitClassVector& b) {
    UnitClassVector r;
    for (int i = 0; i < 8; ++i) r[i] = (a[i] + 7 - b[i]) % 7;
    return r;
}

UnitClassVector unit_class_decompose(const LocalElement& u0) {
    auto v = u0.valuation();
    if (!v) throw PrecisionError("unit_class_decompose: element is zero to working precision");
    if (u0.precision() - *v < 8)
        throw PrecisionError("unit_class_decompose: insufficient precision to reach level 8");
    const auto& K = *u0.field();
    UnitClassVector e{};
    e[0] = static_cast<uint32_t>(*v % 7);
    LocalElement u = u0.div_pi_pow(*v);
    // drop the Teichmuller part: each 6th root of unity is its own 7th power
    long a = mod_floor(u.coeffs()[0], Integer(7)).get_si();
    u = u * K.teichmuller(static_cast<long>(invmod_u64(a, 7)));
    LocalElement one = K.one();
    for (int m = 1; m <= 7; ++m) {
        LocalElement w = u - one;
        auto vw = w.valuation();
        if (!vw) break;  // already 1 to working precision
        if (*vw < m) throw std::logic_error("unit_class_decompose: level stripping out of order");
        int d = static_cast<int>(mod_floor(w.div_pi_pow(m).coeffs()[0], Integer(7)).get_si());
        e[m] = d;
        if (d) u = u * K.level_inverse(m).pow(d);
    }
    auto vr = (u - one).valuation();
    if (vr && *vr < 8) throw std::logic_error("unit_class_decompose: remainder not in U^(8)");
    return e;
}

UnitClassVector quotient_class(const LocalElement& n, const LocalElement& d) {
    return class_sub(unit_class_decompose(n), unit_class_decompose(d));
}

// ---------------------------------------------------------------- seventh roots

namespace {

// y^7 = c for a unit c and a unit seed with v(seed^7 - c) > 12.
LocalElement unit_root_newton(const LocalElement& c, LocalElement y) {
    const auto& K = *c.field();
    LocalElement inv7u = K.seven_unit().inverse();
    long target = c.precision();
    for (int it = 0; it < 200; ++it) {
        LocalElement r = y.pow(7) - c;
        auto vr = r.valuation();
        if (!vr) break;
        if (*vr <= 12) throw PrecisionError("seventh_root: Newton step left the certified basin");
        // y <- y - r / (7 y^6)
        LocalElement step = r.div_pi_pow(6) * inv7u * y.pow(6).inverse();
        y = y - step;
    }
    if (!(y.pow(7) - c).is_zero()) throw PrecisionError("seventh_root: Newton did not converge");
    // error in y = v(y^7 - c) - v(7 y^6) >= prec(c) - 6
    return y.with_precision(target - 6);
}

}  // namespace

LocalElement seventh_root(const LocalElement& c, const LocalElement& seed) {
    auto vc = c.valuation();
    if (!vc) throw PrecisionError("seventh_root: c is zero to working precision");
    if (*vc % 7 != 0) throw NoSeventhRoot("seventh_root: valuation not divisible by 7");
    auto vs = seed.valuation();
    if (!vs || *vs * 7 != *vc) throw PrecisionError("seventh_root: seed valuation does not match");
    LocalElement cu = c.div_pi_pow(*vc), su = seed.div_pi_pow(*vs);
    if (cu.precision() <= 13) throw PrecisionError("seventh_root: insufficient precision to certify the basin");
    auto gap = (su.pow(7) - cu).valuation();
    if (gap && *gap <= 12) throw PrecisionError("seventh_root: seed outside the certified Newton basin");
    LocalElement y = unit_root_newton(cu, su);
    LocalElement p = c.field()->pi().pow(*vs);
    return y * p;
}

LocalElement seventh_root(const LocalElement& c) {
    auto vc = c.valuation();
    if (!vc) throw PrecisionError("seventh_root: c is zero to working precision");
    if (*vc % 7 != 0) throw NoSeventhRoot("no 7th root: valuation not divisible by 7");
    const auto& K = *c.field();
    LocalElement cu = c.div_pi_pow(*vc);
    if (cu.precision() <= 13) throw PrecisionError("seventh_root: insufficient precision to certify the basin");
    long a = mod_floor(cu.coeffs()[0], Integer(7)).get_si();
    LocalElement omega = K.teichmuller(a);
    LocalElement u1 = cu * K.teichmuller(static_cast<long>(invmod_u64(a, 7)));
    LocalElement s = K.one(), P = K.pi();
    for (int guard = 0; guard < 32; ++guard) {
        auto m = (s.pow(7) - u1).valuation();
        if (!m || *m > 12) break;
        if (*m < 8) throw NoSeventhRoot("no 7th root: nonzero class at level " + std::to_string(*m));
        // (1 + d pi^k)^7 = 1 + 7 d pi^k + ..., which moves level k + 6
        long k = *m - 6;
        bool moved = false;
        for (long d = 1; d < 7 && !moved; ++d) {
            LocalElement t = s * (K.one() + K.from_int(d) * P.pow(k));
            auto mt = (t.pow(7) - u1).valuation();
            if (!mt || *mt > *m) {
                s = t;
                moved = true;
            }
        }
        if (!moved) throw NoSeventhRoot("no 7th root: residue scan failed at level " + std::to_string(*m));
    }
    return seventh_root(c, omega * s * P.pow(*vc / 7));
}

LocalElement f_of_x(const LocalElement& x) {
    const auto& K = *x.field();
    LocalElement x2 = x * x, x3 = x2 * x, one = K.one();
    LocalElement f1 = x3 - K.from_int(2) * x2 - x + one;
    LocalElement f2 = x3 - x2 - K.from_int(2) * x + one;
    return f1 * f2.pow(6);
}

LocalPoint lift_point_on_X(const LocalElement& x) {
    if (x.precision() < 18) throw PrecisionError("lift_point_on_X: x needs at least 18 pi-digits");
    LocalElement f = f_of_x(x);
    try {
        return {x, seventh_root(f)};
    } catch (const NoSeventhRoot& e) {
        throw NoSeventhRoot(std::string("x is not an x-coordinate on X(k_pi): ") + e.what());
    }
}

LocalElement galois_apply(long a, const LocalElement& x) {
    if (a < 1 || a > 6) throw std::invalid_argument("galois_apply: a must be in 1..6");
    const auto& K = *x.field();
    LocalElement s = K.zeta().pow(a) - K.one();
    LocalElement r = K.zero(), p = K.one();
    for (int i = 0; i < 6; ++i) {
        r = r + K.from_int(x.coeffs()[i]) * p;
        p = p * s;
    }
    return r.with_precision(x.precision());
}

// ---------------------------------------------------------------- C_j at 7

CjReport local_solvability_Cj(long j) {
    if (j < 1 || j > 6) throw std::invalid_argument("local_solvability_Cj: j must be in 1..6");
    CjReport rep;
    rep.j = j;
    // C_j ~ C_{-j} via (v, w) -> (1/v, 1/w)
    rep.reduced_j = std::min(j, 7 - j);
    const long m = 343;
    auto f1 = [&](long v) { return ((v * v % m * v - 2 * v * v - v + 1) % m + 2 * m * m) % m; };
    auto f2 = [&](long v) { return ((v * v % m * v - v * v - 2 * v + 1) % m + 2 * m * m) % m; };
    auto ord = [](long x) {
        if (x == 0) return 3L;
        long k = 0;
        while (x % 7 == 0) x /= 7, ++k;
        return k;
    };
    bool both_positive = false;
    for (long v = 0; v < m; ++v) {
        long a = ord(f1(v)), b = ord(f2(v));
        rep.max_ord_f = std::max({rep.max_ord_f, a, b});
        if (a > 0 && b > 0) both_positive = true;
    }
    if (rep.reduced_j == 1) {
        rep.method = "scan mod 343";
        std::vector<long> w7(m);
        for (long w = 0; w < m; ++w) {
            long t = 1;
            for (int i = 0; i < 7; ++i) t = t * w % m;
            w7[w] = t;
        }
        for (long v = 0; v < m; ++v)
            for (long w = 0; w < m; ++w) {
                if ((f1(v) - 7 * w7[w] % m * f2(v) % m + m) % m == 0) rep.solutions.push_back({1, v, w});
                if ((f2(v) - 7 * w7[w] % m * f1(v) % m + m) % m == 0) rep.solutions.push_back({2, v, w});
            }
        rep.empty = rep.solutions.empty();
        rep.detail = rep.empty ? "neither equation has a solution modulo 7^3" : "solutions modulo 7^3 exist";
    } else {
        rep.method = "valuation";
        // integral v: ord f1, ord f2 lie in {0, 1} and are not both positive, so
        // ord(f1/f2) is in {-1, 0, 1}; non-integral v gives ord(f1/f2) = 0.  The other side has
        // ord = j + 7 ord(w), which is never in {-1, 0, 1} for j = 2, 3.
        bool ok = rep.max_ord_f <= 1 && !both_positive;
        long r = rep.reduced_j;
        for (long k = -2; k <= 2 && ok; ++k) {
            long o = r + 7 * k;
            if (o >= -1 && o <= 1) ok = false;
        }
        rep.empty = ok;
        rep.detail = ok ? "the powers of 7 on the two sides differ" : "valuation argument does not apply";
    }
    return rep;
}

}  // namespace exc7::padic
