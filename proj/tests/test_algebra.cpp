#include "doctest.h"
#include "oracle.hpp"

#include "exc7/finite_field.hpp"
#include "exc7/linalg.hpp"
#include "exc7/power_series.hpp"
#include "exc7/quotient.hpp"

#include <random>

using namespace exc7;

namespace {

QPoly f1() { return qpoly_ints({1, -1, -2, 1}); }
QPoly f2() { return qpoly_ints({1, -2, -1, 1}); }

QPoly random_qpoly(std::mt19937_64& rng, int deg) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(make_rational(long(rng() % 21) - 10, long(rng() % 4) + 1));
    if (c.back() == 0) c.back() = 1;
    return qpoly(c);
}

}  // namespace

TEST_CASE("ord_p") {
    CHECK(*ord_p(make_rational(7, 2), Integer(7)) == 1);
    CHECK(*ord_p(Rational(f1().eval(Rational(3))), Integer(7)) == 1);
    CHECK(*ord_p(Rational(-343), Integer(7)) == 3);
    CHECK_FALSE(ord_p(Rational(0), Integer(7)).has_value());
    CHECK_THROWS(ord_p(Rational(5), Integer(6)));
    CHECK(*ord_p(make_rational(2, 49), Integer(7)) == -2);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational x = make_rational(long(rng() % 2000) + 1, long(rng() % 500) + 1);
        Rational y = make_rational(long(rng() % 2000) + 1, long(rng() % 500) + 1);
        for (long p : {2, 3, 7}) CHECK(*ord_p(Rational(x * y), Integer(p)) == *ord_p(x, Integer(p)) + *ord_p(y, Integer(p)));
    }
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        Integer a(long(rng() % 100000) - 50000), b(long(rng() % 999) + 1), c(long(rng() % 100000) - 50000), d(long(rng() % 999) + 1);
        Rational s = make_rational(a, b) + make_rational(c, d);
        CHECK(s * Rational(b) * Rational(d) == Rational(a * d + c * b));
    }
}

TEST_CASE("factorization") {
    auto f = factor(Integer("6002451"));
    CHECK(f.size() == 4);
    CHECK(f[Integer(3)] == 3);
    CHECK(f[Integer(7)] == 2);
    CHECK(f[Integer(13)] == 1);
    CHECK(f[Integer(349)] == 1);
    Integer big = Integer("1000000007") * Integer("998244353") * 12;
    auto g = factor(big);
    CHECK(g[Integer("1000000007")] == 1);
    CHECK(g[Integer("998244353")] == 1);
    CHECK(g[Integer(2)] == 2);
    CHECK(divisors(Integer(12)).size() == 6);
}

TEST_CASE("resultant") {
    CHECK(resultant(qpoly_ints({-1, 1}), qpoly_ints({1, 1})) == Rational(2));
    // f1, f2 reduce to distinct cubes (v-3)^3, (v-5)^3 mod 7, so the resultant is a unit everywhere
    CHECK(resultant(f1(), f2()) == Rational(-1));
    CHECK(resultant(f2(), f1()) == Rational(1));
    CHECK(resultant(f1(), f2()) == oracle::sylvester_resultant(f1().coeffs(), f2().coeffs()));
    CHECK_THROWS(resultant(QPoly(Rational(0)), QPoly(Rational(0))));
    CHECK(resultant(qpoly_ints({3}), f1()) == Rational(27));

    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        QPoly f = random_qpoly(rng, 1 + int(rng() % 4));
        QPoly g = random_qpoly(rng, 1 + int(rng() % 3));
        QPoly h = random_qpoly(rng, 1 + int(rng() % 3));
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
        CHECK(resultant(f, g) == oracle::sylvester_resultant(f.coeffs(), g.coeffs()));
    }
}

TEST_CASE("discriminant") {
    // x^2 + b x + c
    CHECK(discriminant(qpoly_ints({3, 5, 1})) == Rational(25 - 12));
    // cubic x^3 - x^2 - 2x + 1 has discriminant 49
    CHECK(discriminant(f2()) == Rational(49));
}

TEST_CASE("polynomial basics") {
    QPoly a = qpoly_ints({1, 2, 3});
    QPoly b = qpoly_ints({-1, 1});
    auto [q, r] = divmod(a * b + qpoly_ints({4}), b);
    CHECK(q == a);
    CHECK(r == qpoly_ints({4}));
    CHECK(poly_gcd(a * b, b * b) == b.monic());
    auto [g, s, t] = poly_xgcd(f1(), f2());
    CHECK(g == qpoly_ints({1}));
    CHECK(s * f1() + t * f2() == g);
    CHECK(QPoly::from_roots({Rational(1), Rational(-1)}, Rational(0)) == qpoly_ints({-1, 0, 1}));
    CHECK(a.compose(b) == qpoly_ints({2, -4, 3}));
}

TEST_CASE("quotient inverse") {
    auto ring = QElem::make_ring(f2());
    QElem one = QElem::from_int(ring, 1);
    CHECK(one.inverse() == one);
    QElem g = QElem::gen(ring);
    QElem expected(ring, qpoly_ints({2, 1, -1}));
    CHECK(g.inverse() == expected);
    CHECK(g * g.inverse() == one);

    Fp z(0, 13);
    auto r13 = GF::make_ring(FpPoly::from_ints({1, 0, 1}, z));
    GF x = GF::gen(r13);
    CHECK(x.inverse() == GF(r13, FpPoly::from_ints({0, 12}, z)));

    auto bad = QElem::make_ring(qpoly_ints({-1, 0, 1}));
    QElem e(bad, qpoly_ints({1, 1}));
    try {
        (void)e.inverse();
        FAIL("expected NonInvertible");
    } catch (const NonInvertible<Rational>& ex) {
        CHECK(ex.factor == qpoly_ints({1, 1}));
    }

    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        QPoly m = random_qpoly(rng, 2 + int(rng() % 4)).monic();
        auto R = QElem::make_ring(m);
        QElem a(R, random_qpoly(rng, int(rng() % m.degree())));
        if (a.is_zero()) continue;
        try {
            QElem inv = a.inverse();
            CHECK(a * inv == QElem::from_int(R, 1));
        } catch (const NonInvertible<Rational>& ex) {
            CHECK(ex.factor.degree() >= 1);
            CHECK((m % ex.factor).is_zero());
        }
    }
}

TEST_CASE("finite field registry") {
    auto F = FiniteField::get(13, 2);
    CHECK(F.q() == 169);
    CHECK(is_irreducible(F.modulus()));
    // smallest monic irreducible quadratic over F_13 in packed order is x^2 + 2
    CHECK(F.modulus() == FpPoly::from_ints({2, 0, 1}, Fp(0, 13)));
    auto F2 = FiniteField::get(13, 2);
    CHECK(F2.ring() == F.ring());
    CHECK(FiniteField::get(2, 3).modulus() == FpPoly::from_ints({1, 1, 0, 1}, Fp(0, 2)));
    for (uint64_t i = 0; i < F.q(); ++i) CHECK(F.pack(F.element(i)) == i);
    auto snap = FiniteField::registry_snapshot();
    CHECK(snap.count({13, 2}) == 1);
    CHECK_FALSE(is_irreducible(FpPoly::from_ints({1, 0, 1}, Fp(0, 5))));
}

TEST_CASE("fast field agrees with polynomial arithmetic") {
    auto F = FiniteField::get(13, 3);
    FastField T(F);
    std::mt19937_64 rng(15);
    for (int i = 0; i < 500; ++i) {
        uint32_t a = rng() % F.q(), b = rng() % F.q();
        CHECK(T.mul(a, b) == F.pack(F.element(a) * F.element(b)));
        CHECK(T.add(a, b) == F.pack(F.element(a) + F.element(b)));
        CHECK(T.neg(a) == F.pack(-F.element(a)));
    }
}

TEST_CASE("power series") {
    Rational z(0);
    using PS = PowerSeries<Rational>;
    PS a({1, 1}, 5, z), b({1, -1}, 5, z);
    PS ab = a * b;
    CHECK(ab.coeff(0) == 1);
    CHECK(ab.coeff(1) == 0);
    CHECK(ab.coeff(2) == -1);
    CHECK(ab.order() >= 3);
    PS integ = PS({1, 2}, 4, z).formal_integrate();
    CHECK(integ.coeff(0) == 0);
    CHECK(integ.coeff(1) == 1);
    CHECK(integ.coeff(2) == 1);
    PS geo = PS::constant(Rational(1), 8) / PS({1, -1}, 8, z);
    for (int i = 0; i < 8; ++i) CHECK(geo.coeff(i) == 1);
    CHECK_THROWS(PS::constant(Rational(1), 4) / PS({0, 1}, 4, z));

    using PF = PowerSeries<Fp>;
    Fp z5(0, 5);
    PF c({Fp(1, 5), Fp(1, 5), Fp(1, 5), Fp(1, 5), Fp(1, 5)}, 5, z5);
    CHECK_THROWS(c.formal_integrate());
    // compose (1+t) with t+t^2
    PS comp = PS({1, 1}, 6, z).compose(PS({0, 1, 1}, 6, z));
    CHECK(comp.coeff(2) == 1);
    CHECK_THROWS(a.compose(a));
}

TEST_CASE("series newton solve") {
    Rational z(0);
    // F = y - t
    std::vector<QPoly> F{qpoly_ints({0, -1}), qpoly_ints({1})};
    auto y = series_newton_solve(F, Rational(0), 6);
    CHECK(y.coeff(1) == 1);
    for (int i = 2; i < 6; ++i) CHECK(y.coeff(i) == 0);

    Fp z13(0, 13);
    std::vector<FpPoly> G{FpPoly::from_ints({-1, -1}, z13), FpPoly(z13), FpPoly::from_ints({1}, z13)};
    auto s = series_newton_solve(G, Fp(1, 13), 8);
    CHECK(s.coeff(1) == Fp(7, 13));
    auto sq = s * s;
    CHECK(sq.coeff(0) == Fp(1, 13));
    CHECK(sq.coeff(1) == Fp(1, 13));
    for (int i = 2; i < 8; ++i) CHECK(sq.coeff(i) == Fp(0, 13));

    // y^7 f2(t) - f1(t) over F_5 at v = 0, y0 = 1
    Fp z5(0, 5);
    std::vector<FpPoly> H(8, FpPoly(z5));
    H[0] = -FpPoly::from_ints({1, -1, -2, 1}, z5);
    H[7] = FpPoly::from_ints({1, -2, -1, 1}, z5);
    auto w = series_newton_solve(H, Fp(1, 5), 12);
    CHECK(eval_bivariate(H, w).valuation() == std::nullopt);

    CHECK_THROWS_AS(series_newton_solve(F, Rational(1), 4), NoRoot);
    std::vector<QPoly> sing{qpoly_ints({0, -1}), QPoly(z), qpoly_ints({1})};
    CHECK_THROWS_AS(series_newton_solve(sing, Rational(0), 4), SingularPoint);
}

TEST_CASE("newton solve property") {
    std::mt19937_64 rng(16);
    Fp z(0, 11);
    for (int trial = 0; trial < 50; ++trial) {
        // F(t,y) = y^3 + a(t) y + b(t) with b chosen so y0 is a root
        long y0 = 1 + long(rng() % 10);
        FpPoly a = FpPoly::from_ints({long(rng() % 11), long(rng() % 11), long(rng() % 11)}, z);
        FpPoly b = FpPoly::from_ints({0, long(rng() % 11), long(rng() % 11)}, z);
        Fp c0 = Fp(0, 11) - (Fp(y0, 11).pow(3) + a.coeff(0) * Fp(y0, 11));
        b.set_coeff(0, c0);
        std::vector<FpPoly> F{b, a, FpPoly(z), FpPoly::from_ints({1}, z)};
        Fp der = Fp(3, 11) * Fp(y0, 11) * Fp(y0, 11) + a.coeff(0);
        if (der.v == 0) continue;
        auto y = series_newton_solve(F, Fp(y0, 11), 15);
        CHECK(eval_bivariate(F, y).valuation() == std::nullopt);
    }
}

TEST_CASE("subspaces") {
    std::mt19937_64 rng(17);
    auto random_space = [&](std::size_t n, std::size_t k) {
        Mat m;
        for (std::size_t i = 0; i < k; ++i) {
            Vec v(n);
            for (auto& x : v) x = rng() % 7;
            m.push_back(v);
        }
        return Subspace::span(m, n, 7);
    };
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 3 + rng() % 10;
        auto U = random_space(n, rng() % (n + 1));
        auto W = random_space(n, rng() % (n + 1));
        CHECK(U.intersect(W).dim() + U.sum(W).dim() == U.dim() + W.dim());
        CHECK(U.intersect(U) == U);
        CHECK(U.annihilator().dim() == n - U.dim());
    }
    Mat id(10, Vec(10, 0));
    for (int i = 0; i < 10; ++i) id[i][i] = 1;
    CHECK(Subspace::preimage(id, 10, Subspace(10, 7)).dim() == 0);
    CHECK_THROWS(Subspace(3, 7).sum(Subspace(4, 7)));
    // preimage under a projection
    Mat proj{{1, 0, 0}, {0, 1, 0}};
    auto line = Subspace::span({{1, 0}}, 2, 7);
    CHECK(Subspace::preimage(proj, 3, line).dim() == 2);
}
