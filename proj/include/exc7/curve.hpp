#pragma once
// The genus 12 curve C: w^7 (v^3 - v^2 u - 2 v u^2 + u^3) = z^7 (v^3 - 2 v^2 u - v u^2 + u^3)
// in P1 x P1. Points over finite fields, the zeta-function route to |J(F_13)|,
// higher-degree algebraic points, divisors of the standard differentials and
// the mod 5 Chabauty certificate.

#include "exc7/finite_field.hpp"
#include "exc7/linalg.hpp"
#include "exc7/power_series.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace exc7::curve {

// ------------------------------------------------------------------ points over F_q

// ((v:u),(w:z)) with packed F_q entries; the first nonzero coordinate of each pair is 1.
struct CPoint {
    uint32_t v = 0, u = 1, w = 0, z = 1;
    bool operator==(const CPoint& o) const { return v == o.v && u == o.u && w == o.w && z == o.z; }
    bool operator<(const CPoint& o) const {
        return std::array<uint32_t, 4>{v, u, w, z} < std::array<uint32_t, 4>{o.v, o.u, o.w, o.z};
    }
};

// normalize a pair (a:b), not both zero
std::pair<uint32_t, uint32_t> normalize_p1(const FastField& F, uint32_t a, uint32_t b);
CPoint make_point(const FastField& F, uint32_t v, uint32_t u, uint32_t w, uint32_t z);
// affine values; nullopt is infinity
std::optional<uint32_t> affine_v(const FastField& F, const CPoint& P);
std::optional<uint32_t> affine_w(const FastField& F, const CPoint& P);
std::string point_str(const FastField& F, const CPoint& P);

bool on_curve(const FastField& F, const CPoint& P);

constexpr uint64_t kMaxEnumerate = 4826809;  // 13^6

std::vector<CPoint> enumerate_points(const FastField& F);
uint64_t count_points(const FastField& F, unsigned jobs = 1);

// sigma(v, w) = (1/v, 1/w), tau(v, w) = (1 - v, 1/w)
CPoint sigma(const FastField& F, const CPoint& P);
CPoint tau(const FastField& F, const CPoint& P);

// ------------------------------------------------------------------ rational points

using QP1 = std::optional<Rational>;  // nullopt is infinity

struct QCPoint {
    std::string name;
    QP1 v, w;
};

bool on_curve(const QCPoint& P);
// P0, P1, Pinf, P2, P3, P4
std::vector<QCPoint> known_rational_points();
CPoint reduce(const FastField& F, const QCPoint& P);

// ------------------------------------------------------------------ zeta function

struct ZetaData {
    uint64_t p = 0;
    unsigned kmax = 0;
    std::vector<uint64_t> counts;  // N_1 .. N_kmax
    std::vector<Integer> Q;        // c_0 .. c_12 of Q(T) = L-polynomial of the genus 6 factor
    Integer Q1, jacobian_order;
    bool integral = false, functional_equation = false, roundtrip = false, weil_counts = false;
    // every reciprocal root has absolute value sqrt(p), certified by a Sturm count on the real Weil polynomial
    bool roots_on_circle = false;
    std::vector<Rational> real_weil;  // R(y) with x^-6 L(x) = R(x + p/x)
};

ZetaData jacobian_order(uint64_t p = 13, unsigned kmax = 6, unsigned jobs = 1);

// ------------------------------------------------------------------ algebraic points

struct AlgebraicPointSpec {
    std::string name;
    std::vector<Integer> minpoly;  // lowest degree first, monic
    std::vector<Integer> x_num;    // x = x_num(t) / x_den, w = t
    Integer x_den{1};
};

struct AlgebraicPointCheck {
    bool on_curve = false;
    QPoly residue;  // w^7 f2(x) - f1(x) mod minpoly
};

AlgebraicPointCheck verify_algebraic_point(const AlgebraicPointSpec& s);
std::vector<AlgebraicPointSpec> parse_algebraic_points(std::istream& in);
std::vector<AlgebraicPointSpec> load_algebraic_points(const std::string& path);

// ------------------------------------------------------------------ divisors

// Formal sums of named prime divisors. D0, D1, Dinf (degree 7), G1, G2
// (degree 3) and the rational or algebraic points listed by degree below.
struct CDivisor {
    std::map<std::string, long> terms;

    static CDivisor of(const std::string& name, long c = 1);
    CDivisor operator+(const CDivisor& o) const;
    CDivisor operator-(const CDivisor& o) const;
    CDivisor operator*(long k) const;
    bool operator==(const CDivisor& o) const { return terms == o.terms; }
    long degree() const;
    bool effective() const;
    std::string str() const;
};

const std::map<std::string, long>& prime_degrees();

// building blocks
CDivisor div_v();
CDivisor div_w();
CDivisor div_f2();
CDivisor div_dv();
// (omega_ij) for 0 <= i <= 1, 0 <= j <= 5
CDivisor differential_divisor(int i, int j);

struct NamedDivisor {
    std::string kind, name;  // kind "B" or "rel"
    CDivisor divisor;
};
std::vector<NamedDivisor> parse_divisors(std::istream& in);
std::vector<NamedDivisor> load_divisors(const std::string& path);

// ------------------------------------------------------------------ local expansions

// Expansion at a non-branch point: t = v - v0 at finite v0, t = 1/v at infinity.
// basis[k] is the dt-coefficient of omega_ij with k = 6i + j.
template <class F>
struct LocalExpansion {
    PowerSeries<F> v_minus_v0, w;
    std::array<PowerSeries<F>, 12> basis;

    PowerSeries<F> omega(const std::vector<F>& c) const {
        PowerSeries<F> r = basis[0].scale(c.at(0));
        for (std::size_t k = 1; k < 12; ++k) r = r + basis[k].scale(c.at(k));
        return r;
    }
};

namespace detail {
template <class F>
Polynomial<F> shifted(const std::vector<long>& c, const F& v0) {
    // c(v0 + t), lowest degree first
    using P = Polynomial<F>;
    using T = FieldTraits<F>;
    P lin(std::vector<F>{v0, T::one(v0)}, v0);
    P r = P::constant(T::zero(v0));
    for (std::size_t i = c.size(); i-- > 0;) r = r * lin + P::constant(T::from_int(c[i], v0));
    return r;
}
}  // namespace detail

// v0 = nullopt means the point at infinity. Throws SingularPoint at branch points.
template <class F>
LocalExpansion<F> expand_at_point(const std::optional<F>& v0, const F& w0, const F& like, std::size_t N) {
    using P = Polynomial<F>;
    using S = PowerSeries<F>;
    using T = FieldTraits<F>;
    const std::vector<long> f1{1, -1, -2, 1}, f2{1, -2, -1, 1};
    std::vector<P> Fy(8, P(like));
    P f1s, f2s;
    if (v0) {
        f1s = detail::shifted(f1, *v0);
        f2s = detail::shifted(f2, *v0);
    } else {
        // F1(1, u), F2(1, u): reversed coefficient lists
        f1s = P::from_ints({1, -2, -1, 1}, like);
        f2s = P::from_ints({1, -1, -2, 1}, like);
    }
    Fy[0] = P::constant(T::zero(like)) - f1s;
    Fy[7] = f2s;
    LocalExpansion<F> e;
    e.w = series_newton_solve(Fy, w0, N);
    S t = S::t(N, like);
    e.v_minus_v0 = t;
    S winv = e.w.inverse();
    S w6inv = S::constant(T::one(like), N);
    for (int k = 0; k < 6; ++k) w6inv = w6inv * winv;
    S f2inv = S::from_poly(f2s, N).inverse();
    S base = w6inv * f2inv;  // 1 / (w^6 f2)
    if (!v0) base = -base;   // dv = -du / u^2, f2(v) = F2(1,u) / u^3, so omega_ij = -u^(1-i) w^(j-6) / F2(1,u) du
    S vfac = v0 ? S::constant(*v0, N) + t : t;  // multiplies by v (finite) or by u (infinity) for i = 0
    for (int i = 0; i <= 1; ++i) {
        S wj = S::constant(T::one(like), N);
        for (int j = 0; j <= 5; ++j) {
            S term = base * wj;
            if (v0 ? i == 1 : i == 0) term = term * vfac;
            e.basis[6 * i + j] = term;
            wj = wj * e.w;
        }
    }
    return e;
}

// ------------------------------------------------------------------ Chabauty at 5

Mat parse_f5_rows(std::istream& in, std::size_t width);
Mat load_f5_rows(const std::string& path, std::size_t width);

// h(v, w) = sum c_ij v^i w^j for the listed omega
std::map<std::pair<int, int>, long> h_polynomial();

struct ChabautyPointRecord {
    std::string name;
    CPoint reduction;
    std::string reduction_str;
    long ord_omega = -1;
    std::string leading;  // first nonzero coefficient
};

struct ChabautyReport {
    std::size_t relation_rank = 0;
    std::vector<uint32_t> dots;
    bool annihilated = false;
    bool h_matches = false;
    std::size_t num_f5_points = 0;
    bool reduction_bijective = false;
    std::vector<ChabautyPointRecord> points;
    bool ords_zero = false;
    bool ok = false;
    std::string conclusion;
};

ChabautyReport chabauty_verify(const Mat& relations, const Vec& omega);

}  // namespace exc7::curve
