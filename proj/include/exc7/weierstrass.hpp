#pragma once
// Long Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a
// generic coefficient ring: invariants, group law, changes of variables, twists,
// division polynomials and Velu isogenies of odd degree.

#include "exc7/field.hpp"
#include "exc7/polynomial.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exc7 {

struct SingularModel : std::domain_error {
    using std::domain_error::domain_error;
};
struct OffCurve : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class F>
inline constexpr bool is_field_v = true;
template <class F>
inline constexpr bool is_field_v<Polynomial<F>> = false;

template <class F>
struct Model {
    F a1, a2, a3, a4, a6;

    bool operator==(const Model& o) const {
        return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
    }
    bool operator!=(const Model& o) const { return !(*this == o); }
    std::string str() const {
        using T = FieldTraits<F>;
        return "[" + T::str(a1) + ", " + T::str(a2) + ", " + T::str(a3) + ", " + T::str(a4) + ", " + T::str(a6) + "]";
    }
};

template <class F>
Model<F> make_model(const F& a1, const F& a2, const F& a3, const F& a4, const F& a6) {
    return Model<F>{a1, a2, a3, a4, a6};
}

template <class F>
struct Invariants {
    F b2, b4, b6, b8, c4, c6, disc;
    std::optional<F> j;  // absent when disc = 0 or the ring has no division
};

template <class F>
F scal(long n, const F& like) {
    return FieldTraits<F>::from_int(n, like);
}

template <class F>
Invariants<F> invariants(const Model<F>& m) {
    const F &a1 = m.a1, &a2 = m.a2, &a3 = m.a3, &a4 = m.a4, &a6 = m.a6;
    auto k = [&](long n) { return scal(n, a1); };
    Invariants<F> r;
    r.b2 = a1 * a1 + k(4) * a2;
    r.b4 = k(2) * a4 + a1 * a3;
    r.b6 = a3 * a3 + k(4) * a6;
    r.b8 = a1 * a1 * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    r.c4 = r.b2 * r.b2 - k(24) * r.b4;
    r.c6 = k(0) - r.b2 * r.b2 * r.b2 + k(36) * r.b2 * r.b4 - k(216) * r.b6;
    r.disc = k(0) - r.b2 * r.b2 * r.b8 - k(8) * r.b4 * r.b4 * r.b4 - k(27) * r.b6 * r.b6 + k(9) * r.b2 * r.b4 * r.b6;
    if constexpr (is_field_v<F>) {
        if (!FieldTraits<F>::is_zero(r.disc)) r.j = r.c4 * r.c4 * r.c4 * FieldTraits<F>::inv(r.disc);
    }
    return r;
}

template <class F>
F discriminant(const Model<F>& m) {
    return invariants(m).disc;
}

template <class F>
F j_invariant(const Model<F>& m) {
    auto inv = invariants(m);
    if (!inv.j) throw SingularModel("j-invariant undefined: discriminant is zero");
    return *inv.j;
}

// ------------------------------------------------------------------ points

template <class F>
struct Point {
    bool inf = true;
    F x{}, y{};

    static Point infinity() { return Point{}; }
    static Point affine(const F& x, const F& y) { return Point{false, x, y}; }
    bool operator==(const Point& o) const {
        if (inf || o.inf) return inf == o.inf;
        return x == o.x && y == o.y;
    }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

template <class F>
bool on_curve(const Model<F>& m, const Point<F>& P) {
    if (P.inf) return true;
    const F &x = P.x, &y = P.y;
    F lhs = y * y + m.a1 * x * y + m.a3 * y;
    F rhs = x * x * x + m.a2 * x * x + m.a4 * x + m.a6;
    return lhs == rhs;
}

template <class F>
Point<F> point_neg(const Model<F>& m, const Point<F>& P) {
    if (P.inf) return P;
    return Point<F>::affine(P.x, scal(0, P.x) - P.y - m.a1 * P.x - m.a3);
}

template <class F>
Point<F> point_add(const Model<F>& m, const Point<F>& P, const Point<F>& Q) {
    using T = FieldTraits<F>;
    if (P.inf) return Q;
    if (Q.inf) return P;
    F lambda, nu;
    if (P.x == Q.x) {
        F s = P.y + Q.y + m.a1 * Q.x + m.a3;
        if (T::is_zero(s)) return Point<F>::infinity();
        F x = P.x;
        F num = scal(3, x) * x * x + scal(2, x) * m.a2 * x + m.a4 - m.a1 * P.y;
        F den = scal(2, x) * P.y + m.a1 * x + m.a3;
        F id = T::inv(den);
        lambda = num * id;
        nu = (scal(0, x) - x * x * x + m.a4 * x + scal(2, x) * m.a6 - m.a3 * P.y) * id;
    } else {
        F id = T::inv(Q.x - P.x);
        lambda = (Q.y - P.y) * id;
        nu = (P.y * Q.x - Q.y * P.x) * id;
    }
    F x3 = lambda * lambda + m.a1 * lambda - m.a2 - P.x - Q.x;
    F y3 = scal(0, x3) - (lambda + m.a1) * x3 - nu - m.a3;
    return Point<F>::affine(x3, y3);
}

template <class F>
Point<F> point_mul(const Integer& n0, const Point<F>& P, const Model<F>& m) {
    if (!on_curve(m, P)) throw OffCurve("point_mul: point is not on the curve");
    Integer n = n0;
    Point<F> base = n < 0 ? point_neg(m, P) : P;
    if (n < 0) n = -n;
    Point<F> r = Point<F>::infinity();
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = point_add(m, r, base);
        n >>= 1;
        if (n > 0) base = point_add(m, base, base);
    }
    return r;
}

template <class F>
Point<F> point_mul(long n, const Point<F>& P, const Model<F>& m) {
    return point_mul(Integer(n), P, m);
}

// ------------------------------------------------------------------ isomorphisms

// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t
template <class F>
struct Iso {
    F u, r, s, t;
};

// The model in the primed coordinates.
template <class F>
Model<F> apply_isomorphism(const Model<F>& m, const Iso<F>& iso) {
    using T = FieldTraits<F>;
    if (T::is_zero(iso.u)) throw std::invalid_argument("apply_isomorphism: u = 0");
    const F &u = iso.u, &r = iso.r, &s = iso.s, &t = iso.t;
    auto k = [&](long n) { return scal(n, u); };
    F ui = T::inv(u), ui2 = ui * ui, ui3 = ui2 * ui, ui4 = ui2 * ui2, ui6 = ui3 * ui3;
    Model<F> o;
    o.a1 = (m.a1 + k(2) * s) * ui;
    o.a2 = (m.a2 - s * m.a1 + k(3) * r - s * s) * ui2;
    o.a3 = (m.a3 + r * m.a1 + k(2) * t) * ui3;
    o.a4 = (m.a4 - s * m.a3 + k(2) * r * m.a2 - (t + r * s) * m.a1 + k(3) * r * r - k(2) * s * t) * ui4;
    o.a6 = (m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t - r * t * m.a1) * ui6;
    return o;
}

// Old coordinates -> primed coordinates.
template <class F>
Point<F> iso_to_new(const Iso<F>& iso, const Point<F>& P) {
    if (P.inf) return P;
    F ui = FieldTraits<F>::inv(iso.u);
    F x = (P.x - iso.r) * ui * ui;
    F y = (P.y - iso.s * (P.x - iso.r) - iso.t) * ui * ui * ui;
    return Point<F>::affine(x, y);
}

// Primed coordinates -> old coordinates.
template <class F>
Point<F> iso_to_old(const Iso<F>& iso, const Point<F>& P) {
    if (P.inf) return P;
    F u2 = iso.u * iso.u;
    return Point<F>::affine(u2 * P.x + iso.r, u2 * iso.u * P.y + iso.s * u2 * P.x + iso.t);
}

// ------------------------------------------------------------------ twists

// y^2 = x^3 + d b2 x^2 + 8 d^2 b4 x + 16 d^3 b6
template <class F>
Model<F> quadratic_twist(const Model<F>& m, const F& d) {
    if (FieldTraits<F>::is_zero(d)) throw std::invalid_argument("quadratic_twist: d = 0");
    auto I = invariants(m);
    F z = scal(0, d);
    return Model<F>{z, d * I.b2, z, scal(8, d) * d * d * I.b4, scal(16, d) * d * d * d * I.b6};
}

// Squarefree integer representative of a nonzero rational modulo squares.
Integer squarefree_part(const Rational& q);

struct TwistClass {
    bool flagged = false;  // j in {0, 1728}: the test is skipped
    bool same_j = false;
    Integer d;  // squarefree d with m2 isomorphic to the d-twist of m1 (when same_j)
};

// Over Q: equal j and c4, c6 ratios consistent with a twist; d = class of (c6_2 c4_1)/(c6_1 c4_2).
TwistClass twist_class(const Model<Rational>& m1, const Model<Rational>& m2);
// m2 is isomorphic over Q to the d-twist of m1 (d = 1 means plain isomorphism).
bool is_twist_by(const Model<Rational>& m1, const Model<Rational>& m2, const Rational& d);

// ------------------------------------------------------------------ division polynomials

// f_n in x with psi_n = f_n for odd n and psi_n = (2y + a1 x + a3) f_n for even n.
template <class F>
Polynomial<F> division_polynomial(const Model<F>& m, int n) {
    using P = Polynomial<F>;
    auto I = invariants(m);
    const F z = scal(0, m.a1);
    auto k = [&](long c) { return scal(c, z); };
    P Fx(std::vector<F>{I.b6, k(2) * I.b4, I.b2, k(4)}, z);
    P F2 = Fx * Fx;
    std::vector<P> f(std::max(n + 1, 5), P(z));
    f[0] = P(z);
    f[1] = P::constant(k(1));
    f[2] = P::constant(k(1));
    f[3] = P(std::vector<F>{I.b8, k(3) * I.b6, k(3) * I.b4, I.b2, k(3)}, z);
    f[4] = P(std::vector<F>{I.b4 * I.b8 - I.b6 * I.b6, I.b2 * I.b8 - I.b4 * I.b6, k(10) * I.b8, k(10) * I.b6, k(5) * I.b4, I.b2, k(2)}, z);
    for (int i = 5; i <= n; ++i) {
        int mm = i / 2;
        if (i % 2 == 1) {
            if (mm % 2 == 0)
                f[i] = F2 * f[mm + 2] * f[mm].pow(3) - f[mm - 1] * f[mm + 1].pow(3);
            else
                f[i] = f[mm + 2] * f[mm].pow(3) - F2 * f[mm - 1] * f[mm + 1].pow(3);
        } else {
            f[i] = f[mm] * (f[mm + 2] * f[mm - 1].pow(2) - f[mm - 2] * f[mm + 1].pow(2));
        }
    }
    return f[n];
}

// ------------------------------------------------------------------ Velu

template <class F>
struct Isogeny {
    Polynomial<F> kernel;  // monic, roots are x(Q) for Q in a half-set of the kernel
    Model<F> domain, codomain;
    Polynomial<F> x_num, x_den;  // X = x_num / x_den, x_den = kernel^2
    int degree = 0;

    // Image of an affine point outside the kernel, or infinity for kernel points.
    Point<F> map_point(const Point<F>& P) const {
        using T = FieldTraits<F>;
        if (P.inf) return P;
        F den = x_den.eval(P.x);
        if (T::is_zero(den)) return Point<F>::infinity();
        F di = T::inv(den);
        F X = x_num.eval(P.x) * di;
        // X'(x) = (N' D - N D') / D^2
        F dX = (x_num.derivative().eval(P.x) * den - x_num.eval(P.x) * x_den.derivative().eval(P.x)) * di * di;
        const Model<F>& m = domain;
        F w = scal(2, P.x) * P.y + m.a1 * P.x + m.a3;
        F Y = (dX * w - codomain.a1 * X - codomain.a3) * T::inv(scal(2, P.x));
        return Point<F>::affine(X, Y);
    }
};

// Odd-degree Velu isogeny with kernel polynomial psi of degree (ell - 1)/2.
// When check_divides is set, psi must divide the ell-division polynomial.
template <class F>
Isogeny<F> velu_isogeny(const Model<F>& m, const Polynomial<F>& psi, bool check_divides = true) {
    using P = Polynomial<F>;
    const F z = scal(0, m.a1);
    auto k = [&](long c) { return scal(c, z); };
    if (psi.degree() < 1 || !(psi.lc() == k(1))) throw std::invalid_argument("velu_isogeny: kernel polynomial must be monic");
    int h = psi.degree();
    int ell = 2 * h + 1;
    if (check_divides) {
        P div = division_polynomial(m, ell);
        if (!(div % psi).is_zero()) throw std::invalid_argument("velu_isogeny: kernel polynomial does not divide the division polynomial");
    }
    auto I = invariants(m);
    // power sums of the roots via Newton's identities
    std::vector<F> e(4, z);  // elementary symmetric s1..s3
    e[0] = k(1);
    for (int i = 1; i <= 3 && i <= h; ++i) {
        F c = psi.coeff(h - i);
        e[i] = (i % 2 == 1) ? z - c : c;
    }
    F p1 = e[1];
    F p2 = e[1] * e[1] - k(2) * e[2];
    F p3 = e[1] * e[1] * e[1] - k(3) * e[1] * e[2] + k(3) * e[3];
    F hn = k(h);
    F t = k(6) * p2 + I.b2 * p1 + hn * I.b4;
    F w = k(10) * p3 + k(2) * I.b2 * p2 + k(3) * I.b4 * p1 + hn * I.b6;
    Isogeny<F> iso;
    iso.kernel = psi;
    iso.domain = m;
    iso.degree = ell;
    iso.codomain = Model<F>{m.a1, m.a2, m.a3, m.a4 - k(5) * t, m.a6 - I.b2 * t - k(7) * w};
    // X = ell x - 2 s1 - t(x) psi'/psi - u(x) (psi'/psi)'
    P tx(std::vector<F>{I.b4, I.b2, k(6)}, z);
    P ux(std::vector<F>{I.b6, k(2) * I.b4, I.b2, k(4)}, z);
    P d1 = psi.derivative(), d2 = d1.derivative();
    P lin(std::vector<F>{z - k(2) * e[1], k(ell)}, z);
    iso.x_den = psi * psi;
    iso.x_num = lin * iso.x_den - tx * d1 * psi - ux * (d2 * psi - d1 * d1);
    return iso;
}

// ------------------------------------------------------------------ minimality

enum class Minimality { Minimal, Inconclusive };

// Sufficient test for a p-integral model: ord_p(disc) < 12 or ord_p(c4) < 4.
Minimality minimality_at_p(const Model<Rational>& m, long p);

bool is_integral(const Model<Rational>& m);

// ------------------------------------------------------------------ finite fields

class FiniteField;

// #E(F_q) for a model over F_q = FiniteField::get(p, k) given by packed coefficients.
uint64_t count_points_fq(const FiniteField& F, const std::array<uint64_t, 5>& a);

struct FrobeniusData {
    uint64_t q = 0;
    uint64_t count = 0;
    long trace = 0;
    std::array<uint32_t, 3> charpoly_mod7{};  // coefficients of T^2 - aT + q, constant first
    std::vector<uint32_t> eigenvalues;         // roots in F_7
};

FrobeniusData frobenius_data_mod7(const FiniteField& F, const std::array<uint64_t, 5>& a);
bool is_nonsingular_fq(const FiniteField& F, const std::array<uint64_t, 5>& a);

struct F2Census {
    int models = 0;       // nonsingular tuples among the 32
    uint64_t max_count = 0;
    std::vector<uint32_t> eigenvalues;  // union of attained eigenvalues mod 7
    int eigenvalue_free = 0;            // models whose charpoly has no root mod 7
    std::vector<long> traces;           // distinct traces attained
};
F2Census census_f2();

}  // namespace exc7
