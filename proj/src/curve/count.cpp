#include "exc7/curve.hpp"

#include <stdexcept>
#include <thread>

namespace exc7::curve {

namespace {

// number of w over a fixed v, given a = f1(v), b = f2(v)
inline uint64_t fibre(const FastField& F, uint32_t a, uint32_t b, bool split) {
    if (a == 0 || b == 0) return 1;
    if (!split) return 1;
    uint64_t n = F.q() - 1;
    return ((F.log(a) + n - F.log(b)) % n) % 7 == 0 ? 7 : 0;
}

uint64_t count_range(const FastField& F, uint64_t lo, uint64_t hi, bool split) {
    const uint32_t one = F.from_int(1), m1 = F.from_int(-1), m2 = F.from_int(-2);
    uint64_t n = 0;
    for (uint64_t x = lo; x < hi; ++x) {
        uint32_t v = static_cast<uint32_t>(x);
        // f1 = ((v - 2) v - 1) v + 1, f2 = ((v - 1) v - 2) v + 1
        uint32_t a = F.add(F.mul(F.add(F.mul(F.add(v, m2), v), m1), v), one);
        uint32_t b = F.add(F.mul(F.add(F.mul(F.add(v, m1), v), m2), v), one);
        n += fibre(F, a, b, split);
    }
    return n;
}

Integer ipow(uint64_t p, unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= static_cast<unsigned long>(p);
    return r;
}

// sign of A + B sqrt(p)
int sign_surd(const Rational& A, const Rational& B, uint64_t p) {
    int sa = sgn(A), sb = sgn(B);
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    Rational d = A * A - B * B * Rational(static_cast<unsigned long>(p));
    return sgn(d) * sa;
}

// sign of g(eps * 2 sqrt(p))
int sign_at_edge(const QPoly& g, int eps, uint64_t p) {
    Rational A = 0, B = 0;
    for (int k = 0; k <= g.degree(); ++k) {
        // (2 eps)^k p^(k/2)
        Rational c = g.coeff(k);
        for (int i = 0; i < k; ++i) c *= 2 * eps;
        Rational pk = 1;
        for (int i = 0; i < k / 2; ++i) pk *= static_cast<unsigned long>(p);
        if (k % 2 == 0) A += c * pk;
        else B += c * pk;
    }
    return sign_surd(A, B, p);
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// all roots of R real and inside [-2 sqrt p, 2 sqrt p]
bool real_roots_in_window(const QPoly& R, uint64_t p) {
    QPoly sq = R / poly_gcd(R, R.derivative());  // squarefree part
    std::vector<QPoly> chain{sq, sq.derivative()};
    while (chain.back().degree() > 0) {
        QPoly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    std::vector<int> lo, hi;
    for (const auto& g : chain) {
        lo.push_back(sign_at_edge(g, -1, p));
        hi.push_back(sign_at_edge(g, 1, p));
    }
    if (lo[0] == 0 || hi[0] == 0) return false;  // root on the boundary, not decided here
    return variations(lo) - variations(hi) == sq.degree();
}

}  // namespace

uint64_t count_points(const FastField& F, unsigned jobs) {
    if (F.p() == 7) throw std::invalid_argument("count_points: characteristic 7 is bad reduction");
    const bool split = (F.q() - 1) % 7 == 0;
    // v = infinity: f1, f2 have leading coefficient 1
    uint64_t total = fibre(F, F.from_int(1), F.from_int(1), split);
    jobs = std::max(1u, jobs);
    if (jobs == 1 || F.q() < 100000) return total + count_range(F, 0, F.q(), split);
    std::vector<uint64_t> part(jobs, 0);
    std::vector<std::thread> pool;
    uint64_t step = (F.q() + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        uint64_t lo = j * step, hi = std::min<uint64_t>(F.q(), lo + step);
        pool.emplace_back([&, j, lo, hi] { part[j] = lo < hi ? count_range(F, lo, hi, split) : 0; });
    }
    for (auto& t : pool) t.join();
    for (auto x : part) total += x;
    return total;
}

ZetaData jacobian_order(uint64_t p, unsigned kmax, unsigned jobs) {
    if (kmax < 6) throw std::invalid_argument("jacobian_order: need counts up to k = 6");
    ZetaData z;
    z.p = p;
    z.kmax = kmax;
    for (unsigned k = 1; k <= kmax; ++k) {
        FastField F(FiniteField::get(p, k));
        z.counts.push_back(count_points(F, jobs));
    }
    z.weil_counts = true;
    for (unsigned k = 1; k <= kmax; ++k) {
        Integer d = Integer(std::to_string(z.counts[k - 1])) - ipow(p, k) - 1;
        if (d * d > 576 * ipow(p, k)) z.weil_counts = false;
    }
    // power sums of the twelve roots of one copy: s_k / 2 with s_k = q^k + 1 - N_k
    std::vector<Rational> ps(7, 0);
    z.integral = true;
    for (unsigned k = 1; k <= 6; ++k) {
        Integer s = ipow(p, k) + 1 - Integer(std::to_string(z.counts[k - 1]));
        if (s % 2 != 0) z.integral = false;
        ps[k] = Rational(s, 2);
        ps[k].canonicalize();
    }
    // Newton: k c_k = -sum_{i=1..k} p_i c_{k-i}
    std::vector<Rational> c(13, 0);
    c[0] = 1;
    for (unsigned k = 1; k <= 6; ++k) {
        Rational s = 0;
        for (unsigned i = 1; i <= k; ++i) s += ps[i] * c[k - i];
        c[k] = -s / Rational(static_cast<long>(k));
        if (c[k].get_den() != 1) z.integral = false;
    }
    for (unsigned i = 0; i < 6; ++i) c[12 - i] = c[i] * Rational(ipow(p, 6 - i));
    z.Q.clear();
    for (const auto& x : c) z.Q.push_back(x.get_num() / x.get_den());
    if (!z.integral) throw std::runtime_error("jacobian_order: Newton reconstruction is not integral");
    // T^12 Q(1/(pT)) p^6 = Q(T)
    z.functional_equation = true;
    for (unsigned i = 0; i <= 12; ++i)
        if (z.Q[12 - i] * ipow(p, i) != z.Q[i] * ipow(p, 6)) z.functional_equation = false;
    // power sums back from Q and the counts they predict
    std::vector<Rational> back(7, 0);
    z.roundtrip = true;
    for (unsigned k = 1; k <= 6; ++k) {
        Rational s = Rational(static_cast<long>(k)) * c[k];
        for (unsigned i = 1; i < k; ++i) s += back[i] * c[k - i];
        back[k] = -s;
        Rational N = Rational(ipow(p, k) + 1) - 2 * back[k];
        if (N != Rational(Integer(std::to_string(z.counts[k - 1])))) z.roundtrip = false;
    }
    // x^-6 L(x) = a_6 + sum_j a_{6+j} (x^j + p^j x^-j), where a_k = c_{12-k}; x^j + p^j x^-j = D_j(x + p/x)
    const Rational P(static_cast<unsigned long>(p));
    std::vector<QPoly> D{QPoly::from_ints({2}, Rational(0)), QPoly::from_ints({0, 1}, Rational(0))};
    QPoly y = D[1];
    for (int j = 2; j <= 6; ++j) D.push_back(y * D[j - 1] - D[j - 2].scale(P));
    QPoly R = QPoly::constant(c[6]);
    for (int j = 1; j <= 6; ++j) R = R + D[j].scale(c[6 - j]);
    z.real_weil = R.coeffs();
    z.roots_on_circle = R.degree() == 6 && real_roots_in_window(R, p);
    Integer q1 = 0;
    for (const auto& x : z.Q) q1 += x;
    z.Q1 = q1;
    z.jacobian_order = q1 * q1;
    return z;
}

}  // namespace exc7::curve
