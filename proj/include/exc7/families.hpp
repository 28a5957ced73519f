#pragma once
// Explicit families of curves with a rational 7-subgroup: the universal curve
// E_u over X1(7), the twisted families A_v and A_v^(d), and the rational family
// B_v (character omega^5) with its 7-isogeny, discriminants and j-invariants.

#include "exc7/quotient.hpp"
#include "exc7/weierstrass.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace exc7::families {

// A point of P^1(Q); nullopt is infinity.
using ProjRational = std::optional<Rational>;
std::string proj_str(const ProjRational& v);

// q as an element of the ring that `like` lives in
template <class E>
E lift(const Rational& q, const E& like) {
    using T = FieldTraits<E>;
    return T::from_integer(q.get_num(), like) * T::inv(T::from_integer(q.get_den(), like));
}

template <class E>
E eval_q(const QPoly& p, const E& x) {
    E r = FieldTraits<E>::zero(x);
    for (int i = p.degree(); i >= 0; --i) r = r * x + lift(p.coeff(i), x);
    return r;
}

QPoly f1_poly();  // v^3 - 2v^2 - v + 1
QPoly f2_poly();  // v^3 - v^2 - 2v + 1

// ------------------------------------------------------------------ E_u

template <class E>
Model<E> build_Eu(const E& u) {
    auto k = [&](long n) { return scal(n, u); };
    E u2 = u * u, u3 = u2 * u;
    E z = k(0);
    return Model<E>{z - (u2 - u - k(1)), z - (u3 - u2), z - (u3 - u2), z, z};
}

QPoly Eu_disc_formula();  // u^7 (u-1)^7 (u^3 - 8u^2 + 5u + 1)

// ------------------------------------------------------------------ A_v

// polynomial in t with integer coefficients, lowest degree first
template <class E>
E tpoly(const E& t, std::initializer_list<long> c) {
    E r = scal(0, t);
    std::vector<long> v(c);
    for (std::size_t i = v.size(); i-- > 0;) r = r * t + scal(v[i], t);
    return r;
}

template <class E>
E av_c(const E& t) {
    return tpoly(t, {9, 3, 1});
}

template <class E>
E av_f(const E& t, const E& v) {
    return v * v * v - (t + scal(3, t)) * v * v + t * v + scal(1, t);
}

template <class E>
Model<E> build_Av_model(const E& t, const E& v) {
    E c = av_c(t), f = av_f(t, v);
    auto k = [&](long n) { return scal(n, t); };
    auto hor = [&](std::initializer_list<E> cs) {  // polynomial in v, highest first
        E r = k(0);
        for (const E& a : cs) r = r * v + a;
        return r;
    };
    Model<E> m;
    m.a1 = c * hor({k(1), k(-1), k(1)});
    m.a2 = c * f * t * (k(2) * v - k(1));
    // a3, a4, a6 are the coefficients obtained by carrying E_{delta(v)} through lambda;
    // they satisfy the discriminant closed form below
    E t3m1 = tpoly(t, {-1, 0, 0, 1});
    m.a3 = c * f * hor({t3m1, tpoly(t, {18, -12, -4, -2}), t3m1, tpoly(t, {1, -1, 1})});
    m.a4 = c * c * f *
           hor({tpoly(t, {2, 5, 3}), tpoly(t, {-2, -2, -6, -1}), tpoly(t, {-11, -1, 4, 2}), tpoly(t, {14, 7, 2, -1}),
                tpoly(t, {-14, -4, -2}), tpoly(t, {1, 1})});
    m.a6 = c * c * f * f *
           hor({tpoly(t, {11, 24, 35, 23, 9, 2}), tpoly(t, {9, 30, -35, -48, -17, -4}),
                tpoly(t, {-68, -72, -60, -12, 2, 2}), tpoly(t, {-130, 136, 82, 36, 6}),
                tpoly(t, {173, 24, -28, -22, -4}), tpoly(t, {-67, -32, -10, 3, 2}), tpoly(t, {11, 11, 5, 2})});
    return m;
}

// c^8 f(v)^7 [(t-5)v^3 + (5t+24)v^2 - (8t+9)v + t - 5]
template <class E>
E av_disc_formula(const E& t, const E& v) {
    E c = av_c(t), f = av_f(t, v);
    E c8 = c * c;
    c8 = c8 * c8;
    c8 = c8 * c8;
    E f7 = f;
    for (int i = 1; i < 7; ++i) f7 = f7 * f;
    E br = (t - scal(5, t)) * v * v * v + tpoly(t, {24, 5}) * v * v - tpoly(t, {9, 8}) * v + t - scal(5, t);
    return c8 * f7 * br;
}

template <class E>
struct TorsionData {
    E gamma, U, R, S, T;
    Point<E> P;  // (R, T), of order 7
};

template <class E>
struct FamilyPoint {
    E t, v, d;
    Model<E> model;
    bool degenerate = false;
    std::optional<TorsionData<E>> marked;
};

template <class E>
TorsionData<E> av_torsion(const E& t, const E& v, const E& g) {
    auto k = [&](long n) { return scal(n, t); };
    E c = av_c(t), f = av_f(t, v);
    TorsionData<E> d;
    d.gamma = g;
    E w = (g - k(1)) * v + k(1);
    E h = k(2) * g * g - (k(2) * t + k(5)) * g + t - k(1);
    d.U = w * w * h * h;
    d.R = c * f * ((g - t - k(3)) * g * v - g * g + (t + k(2)) * g + k(1));
    d.S = ((t + k(3)) * g * g - tpoly(t, {9, 5, 1}) * g - k(3)) * v * v -
          (k(2) * t * g * g - k(2) * tpoly(t, {3, 3, 1}) * g + tpoly(t, {3, 1, 1})) * v - k(3) * g * g +
          (k(2) * t + k(6)) * g - t;
    d.T = c * f * (tpoly(t, {5, 6, 2}) * v * v * v - tpoly(t, {9, 3, 1}) * v * v - k(13) * v + k(2) * t + k(4));
    d.P = Point<E>::affine(d.R, d.T);
    return d;
}

// A_v with its marked point; gamma must be a root of x^3 - (t+3)x^2 + tx + 1.
template <class E>
FamilyPoint<E> build_Av(const E& t, const E& v, const E& gamma) {
    FamilyPoint<E> fp;
    fp.t = t;
    fp.v = v;
    fp.d = scal(1, t);
    fp.model = build_Av_model(t, v);
    fp.degenerate = FieldTraits<E>::is_zero(discriminant(fp.model));
    fp.marked = av_torsion(t, v, gamma);
    return fp;
}

// the isomorphism lambda: A_v -> E_{delta(v)} in the (u, r, s, t) convention,
// so that iso_to_old maps (0,0) on E_{delta(v)} to P_v
template <class E>
Iso<E> lambda_iso(const TorsionData<E>& d) {
    return Iso<E>{d.U, d.R, d.S, d.T};
}

template <class E>
E delta_map(const E& gamma, const E& z) {
    auto k = [&](long n) { return scal(n, z); };
    return (gamma - z) * FieldTraits<E>::inv((gamma - k(1)) * z + k(1));
}

// Q[g]/(g^3 - (t+3)g^2 + tg + 1)
QElem::RingPtr cubic_ring(const Rational& t);
// sigma: g -> 1/(1-g) applied to an element of cubic_ring(t)
QElem sigma_apply(const QElem& a);
Point<QElem> sigma_apply(const Point<QElem>& P);
FamilyPoint<QElem> build_Av_cubic(const Rational& t, const Rational& v);

// A_v^(d): y^2 = x^3 + d b2 x^2 + 8 d^2 b4 x + 16 d^3 b6
template <class E>
Model<E> build_Avd(const E& t, const E& v, const E& d) {
    if (FieldTraits<E>::is_zero(d)) throw std::invalid_argument("build_Avd: d = 0");
    return quadratic_twist(build_Av_model(t, v), d);
}

// ------------------------------------------------------------------ B_v

QPoly bv_alpha();
QPoly bv_beta();
QPoly bv_q();  // x-shift of the map A_v^(-1/7) -> B_v at t = -2

template <class E>
Model<E> build_Bv(const E& v) {
    auto k = [&](long n) { return scal(n, v); };
    return Model<E>{k(1), k(-1), k(0), eval_q(bv_alpha(), v), eval_q(bv_beta(), v)};
}

// A_v^(-1/7) (t = -2) to B_v: x' = x/4 + q(v), y' = y/8 - x'/2
template <class E>
Iso<E> avd_to_bv_iso(const E& v) {
    auto k = [&](long n) { return scal(n, v); };
    return Iso<E>{k(2), k(0) - k(4) * eval_q(bv_q(), v), k(1), k(0)};
}

QPoly bv_disc_formula();  // -7^3 f1 f2^7

// Model of B_{1/w} integral at primes dividing the denominator of v = 1/w.
template <class E>
Model<E> build_Bhat(const E& w) {
    auto k = [&](long n) { return scal(n, w); };
    E w4 = w * w * w * w, w8 = w4 * w4, w12 = w8 * w4;
    auto rev = [&](const QPoly& p, int n) {  // w^n p(1/w)
        E r = k(0);
        for (int i = 0; i <= n; ++i) r = r * w + lift(p.coeff(i), w);
        return r;
    };
    E at = rev(bv_alpha(), 8), bt = rev(bv_beta(), 12);
    E a4 = at + lift(make_rational(3, 16), w) * (k(1) - w8);
    E a6 = bt + (w4 - k(1)) * lift(make_rational(1, 4), w) * at -
           (k(2) * w12 - k(3) * w8 + k(1)) * lift(make_rational(1, 64), w);
    return Model<E>{k(1), k(-1), k(0), a4, a6};
}

// B_{1/w} -> hat model change of variables, hat = apply_isomorphism(B_{1/w}, iso)
Iso<Rational> bhat_iso(const Rational& w);

// Newton forward differences at 0: p maps Z to Z iff all are integers
std::vector<Rational> binomial_coefficients(const QPoly& p);
bool integer_valued(const QPoly& p);

// Res(Delta(B_v), c4(B_v)) as polynomials in v
Rational disc_c4_resultant();

// ------------------------------------------------------------------ lcw instance

struct CyclotomicInstance {
    Rational t{-2};
    QElem::RingPtr ring;  // Q[z]/(Phi_7)
    QElem zeta, gamma, sqrt_m7;
    bool gamma_is_root = false;
    bool sigma_is_eta = false;
    bool roots_ok = false;
};
CyclotomicInstance lcw_cyclotomic_instance();

// ------------------------------------------------------------------ isogeny

struct BvPrime {
    Rational v;
    Model<Rational> domain, codomain;
    QPoly kernel;
    Model<Rational> twist_target;  // quadratic twist of B_{1-v} by -7
    TwistClass twist;
    bool isomorphic = false;
};

// x-coordinates of [i]P_v transported to B_v, i = 1..3, over cubic_ring(-2)
std::vector<QElem> transported_kernel_x(const Rational& v);
BvPrime isogenous_Bv_prime(const Rational& v);

// P_v pushed to B_v over Q(zeta_7); returns the point on build_Bv lifted there
struct BvGenerator {
    Model<QElem> model;
    Point<QElem> P;
};
BvGenerator bv_generator(const Rational& v);

// ------------------------------------------------------------------ ord_7 table

enum class VClass { Three, Five, Other, NonIntegral };
std::string vclass_str(VClass c);
VClass classify(const Rational& v);

struct Ord7Profile {
    VClass cls = VClass::Other;
    long ord_f1 = 0, ord_f2 = 0, ord_disc = 0, ord_min_disc = 0;
    std::optional<long> ord_j;  // nullopt when j = 0
    long ord_j_bound = 0;
    bool ord_j_exact = false;
};

struct TableRow {
    long ord_f1, ord_f2, ord_disc, ord_min_disc, ord_j_bound;
    bool ord_j_exact;
};
TableRow ord7_table_row(VClass c, long ord7_v);
bool profile_matches(const Ord7Profile& p, const Rational& v);

// ord_7 of the minimal discriminant of any model over Q (valid since 7 >= 5)
long ord7_min_disc(const Model<Rational>& m);

struct MinDiscResult {
    Rational delta_min;
    Ord7Profile profile;
    long s_v = 0;
    long ratio_ord7 = 0;         // ord_7 of Delta_min(B'_v)/Delta_min(B_v), B'_v by Velu
    long ratio_ord7_formula = 0;  // s_v + 6(ord f1 - ord f2)
};
MinDiscResult min_disc_and_profile(const Rational& v);

// ------------------------------------------------------------------ j and CM

QPoly j_numerator();    // [(v^2-3v-3)(v^2-v+1)(3v^2-9v+5)(5v^2-v-1)]^3
QPoly j_denominator();  // f1 f2^7
Rational j_formula(const ProjRational& v);

struct JClass {
    Rational j;
    bool is_cm = false;
};
JClass j_and_CM_classification(const ProjRational& v);

std::vector<Rational> rational_roots(const QPoly& p);
// all v in P^1(Q) with j(B_v) = J
std::vector<ProjRational> j_preimages(const Rational& J);

// ------------------------------------------------------------------ exceptional, orbits

bool exceptional_candidate_test(const ProjRational& v);

struct ExceptionalScan {
    long height = 0;
    long tested = 0;
    std::vector<ProjRational> hits;
};
ExceptionalScan exceptional_scan(long height);

ProjRational eta(const ProjRational& v);
ProjRational tau(const ProjRational& v);
std::vector<ProjRational> s3_orbit(const ProjRational& v);

// ------------------------------------------------------------------ identity checks

struct IdentityReport {
    std::string name;
    long points = 0;
    bool ok = true;
    std::string failure;  // offending evaluation point
};

struct FamilyIdentities {
    std::vector<IdentityReport> checks;
    bool ok() const {
        for (auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

FamilyIdentities verify_family_identities(uint64_t seed, int trials);

// the individual symbolic identities
IdentityReport check_Eu_disc();
IdentityReport check_Bv_disc();
IdentityReport check_Bv_j();
IdentityReport check_Av_disc(uint64_t seed);
IdentityReport check_cubic_disc(uint64_t seed);
IdentityReport check_avd_to_bv();

}  // namespace exc7::families
