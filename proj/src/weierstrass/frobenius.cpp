#include "exc7/finite_field.hpp"
#include "exc7/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace exc7 {

Integer squarefree_part(const Rational& q) {
    if (q == 0) throw std::invalid_argument("squarefree_part: zero");
    // n/d is n*d modulo squares
    Integer n = q.get_num() * q.get_den();
    Integer r = n < 0 ? Integer(-1) : Integer(1);
    for (const auto& [p, e] : factor(n))
        if (e % 2 == 1) r *= p;
    return r;
}

TwistClass twist_class(const Model<Rational>& m1, const Model<Rational>& m2) {
    auto I1 = invariants(m1), I2 = invariants(m2);
    if (!I1.j || !I2.j) throw SingularModel("twist_class: singular model");
    TwistClass tc;
    tc.same_j = (*I1.j == *I2.j);
    if (!tc.same_j) return tc;
    if (*I1.j == 0 || *I1.j == 1728) {
        tc.flagged = true;
        return tc;
    }
    Rational rho = (I2.c6 * I1.c4) / (I1.c6 * I2.c4);
    tc.d = squarefree_part(rho);
    return tc;
}

bool is_twist_by(const Model<Rational>& m1, const Model<Rational>& m2, const Rational& d) {
    auto tc = twist_class(m1, m2);
    if (!tc.same_j || tc.flagged) return false;
    return squarefree_part(Rational(tc.d) / d) == 1;
}

bool is_integral(const Model<Rational>& m) {
    for (const Rational* a : {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6})
        if (a->get_den() != 1) return false;
    return true;
}

Minimality minimality_at_p(const Model<Rational>& m, long p) {
    for (const Rational* a : {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6})
        if (a->get_den() % p == 0) throw std::invalid_argument("minimality_at_p: model is not p-integral");
    auto I = invariants(m);
    auto od = ord_p(I.disc, Integer(p));
    auto oc = ord_p(I.c4, Integer(p));
    if (od && *od < 12) return Minimality::Minimal;
    if (oc && *oc < 4) return Minimality::Minimal;
    return Minimality::Inconclusive;
}

namespace {

struct Coeffs {
    uint32_t a1, a2, a3, a4, a6;
};

Coeffs unpack(const std::array<uint64_t, 5>& a, uint64_t q) {
    for (auto x : a)
        if (x >= q) throw std::invalid_argument("coefficient outside the field");
    return {uint32_t(a[0]), uint32_t(a[1]), uint32_t(a[2]), uint32_t(a[3]), uint32_t(a[4])};
}

uint32_t trace_to_prime(const FastField& T, uint32_t c) {
    // sum of c^(p^i), i < k; lands in the prime field
    uint32_t s = 0, x = c;
    for (unsigned i = 0; i < T.k(); ++i) {
        s = T.add(s, x);
        uint32_t y = 1;
        for (uint64_t j = 0; j < T.p(); ++j) y = T.mul(y, x);
        x = y;
    }
    return s;
}

}  // namespace

bool is_nonsingular_fq(const FiniteField& F, const std::array<uint64_t, 5>& a) {
    std::vector<GF> c;
    for (auto x : a) c.push_back(F.element(x));
    Model<GF> m{c[0], c[1], c[2], c[3], c[4]};
    return !invariants(m).disc.is_zero();
}

uint64_t count_points_fq(const FiniteField& F, const std::array<uint64_t, 5>& a) {
    if (F.q() > (1u << 16)) throw std::invalid_argument("count_points_fq: q too large");
    FastField T(F);
    Coeffs c = unpack(a, F.q());
    uint64_t n = 1;
    const uint32_t four = T.from_int(4);
    for (uint32_t x = 0; x < F.q(); ++x) {
        uint32_t A = T.add(T.mul(c.a1, x), c.a3);
        uint32_t x2 = T.mul(x, x);
        uint32_t B = T.add(T.add(T.add(T.mul(x2, x), T.mul(c.a2, x2)), T.mul(c.a4, x)), c.a6);
        if (F.p() == 2) {
            if (A == 0) {
                n += 1;
            } else {
                uint32_t inv = T.exp(F.q() - 1 - T.log(T.mul(A, A)));
                n += trace_to_prime(T, T.mul(B, inv)) == 0 ? 2 : 0;
            }
        } else {
            uint32_t D = T.add(T.mul(A, A), T.mul(four, B));
            if (D == 0)
                n += 1;
            else
                n += (T.log(D) % 2 == 0) ? 2 : 0;
        }
    }
    return n;
}

FrobeniusData frobenius_data_mod7(const FiniteField& F, const std::array<uint64_t, 5>& a) {
    if (!is_nonsingular_fq(F, a)) throw SingularModel("frobenius_data_mod7: singular model");
    FrobeniusData d;
    d.q = F.q();
    d.count = count_points_fq(F, a);
    d.trace = static_cast<long>(d.q + 1) - static_cast<long>(d.count);
    long am = ((d.trace % 7) + 7) % 7, qm = static_cast<long>(d.q % 7);
    d.charpoly_mod7 = {uint32_t(qm), uint32_t((7 - am) % 7), 1};
    for (uint32_t r = 0; r < 7; ++r)
        if ((r * r + (7 - am) * r + qm) % 7 == 0) d.eigenvalues.push_back(r);
    return d;
}

F2Census census_f2() {
    auto F = FiniteField::get(2, 1);
    F2Census c;
    std::set<uint32_t> eig;
    std::set<long> traces;
    for (uint64_t bits = 0; bits < 32; ++bits) {
        std::array<uint64_t, 5> a;
        for (int i = 0; i < 5; ++i) a[i] = (bits >> i) & 1;
        if (!is_nonsingular_fq(F, a)) continue;
        ++c.models;
        auto fd = frobenius_data_mod7(F, a);
        c.max_count = std::max(c.max_count, fd.count);
        traces.insert(fd.trace);
        if (fd.eigenvalues.empty()) ++c.eigenvalue_free;
        eig.insert(fd.eigenvalues.begin(), fd.eigenvalues.end());
    }
    c.eigenvalues.assign(eig.begin(), eig.end());
    c.traces.assign(traces.begin(), traces.end());
    return c;
}

}  // namespace exc7
