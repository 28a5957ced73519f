#include "doctest.h"

#include "exc7/finite_field.hpp"
#include "exc7/weierstrass.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace exc7;

namespace {

using QModel = Model<Rational>;
using QPoint = Point<Rational>;

QModel E_u(const Rational& u) {
    Rational b = u * u * u - u * u, c = u * u - u - 1;
    return QModel{-c, -b, -b, Rational(0), Rational(0)};
}

Rational R(long n, long d = 1) { return make_rational(n, d); }

QModel random_model(std::mt19937_64& rng) {
    auto r = [&] { return R(long(rng() % 41) - 20, long(rng() % 5) + 1); };
    return QModel{r(), r(), r(), r(), r()};
}

// A random affine point on m over F_p by scanning x and solving for y.
std::optional<Point<Fp>> random_point(const Model<Fp>& m, std::mt19937_64& rng) {
    uint64_t p = m.a1.p;
    for (int tries = 0; tries < 50; ++tries) {
        Fp x(static_cast<long long>(rng() % p), p);
        for (uint64_t yy = 0; yy < p; ++yy) {
            Point<Fp> P = Point<Fp>::affine(x, Fp(static_cast<long long>(yy), p));
            if (on_curve(m, P)) return P;
        }
    }
    return std::nullopt;
}

Model<Fp> reduce(const QModel& m, uint64_t p) {
    auto r = [&](const Rational& a) {
        return FieldTraits<Fp>::from_integer(a.get_num(), Fp(0, p)) / FieldTraits<Fp>::from_integer(a.get_den(), Fp(0, p));
    };
    return Model<Fp>{r(m.a1), r(m.a2), r(m.a3), r(m.a4), r(m.a6)};
}

}  // namespace

TEST_CASE("invariants") {
    // discriminant of E_u is u^7 (u-1)^7 (u^3 - 8u^2 + 5u + 1)
    for (long uu : {2, 3, -5, 7}) {
        Rational u(uu);
        Rational expect = rpow(u, 7) * rpow(u - 1, 7) * (u * u * u - 8 * u * u + 5 * u + 1);
        CHECK(discriminant(E_u(u)) == expect);
    }
    CHECK(discriminant(E_u(R(2))) == R(-1664));
    // B_0: y^2 + xy = x^3 - x^2 - 2x - 1
    QModel B0{R(1), R(-1), R(0), R(-2), R(-1)};
    CHECK(discriminant(B0) == R(-343));
    CHECK(j_invariant(B0) == R(-3375));  // -15^3
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        auto I = invariants(random_model(rng));
        CHECK(I.c4 * I.c4 * I.c4 - I.c6 * I.c6 == 1728 * I.disc);
        CHECK(4 * I.b8 == I.b2 * I.b6 - I.b4 * I.b4);
    }
    QModel sing{R(0), R(0), R(0), R(0), R(0)};
    CHECK_FALSE(invariants(sing).j.has_value());
    CHECK_THROWS_AS(j_invariant(sing), SingularModel);
}

TEST_CASE("torsion point of order 7") {
    for (long uu : {2, 3, 5, -4}) {
        QModel E = E_u(R(uu));
        QPoint P = QPoint::affine(R(0), R(0));
        CHECK(point_mul(7, P, E).inf);
        for (long k = 1; k < 7; ++k) CHECK_FALSE(point_mul(k, P, E).inf);
        CHECK(point_mul(1, P, E) == P);
        CHECK(point_mul(-1, P, E) == point_mul(6, P, E));
    }
    CHECK_THROWS_AS(point_mul(2, QPoint::affine(R(1), R(1)), E_u(R(3))), OffCurve);
}

TEST_CASE("group law over small prime fields") {
    std::mt19937_64 rng(32);
    const uint64_t primes[] = {11, 13, 29, 31, 101};
    int checked = 0;
    while (checked < 200) {
        uint64_t p = primes[rng() % 5];
        Model<Fp> m;
        do {
            auto c = [&] { return Fp(static_cast<long long>(rng() % p), p); };
            m = Model<Fp>{c(), c(), c(), c(), c()};
        } while (invariants(m).disc.v == 0);
        auto P = random_point(m, rng), Q = random_point(m, rng), S = random_point(m, rng);
        if (!P || !Q || !S) continue;
        CHECK(point_add(m, point_add(m, *P, *Q), *S) == point_add(m, *P, point_add(m, *Q, *S)));
        CHECK(point_add(m, *P, point_neg(m, *P)).inf);
        CHECK(on_curve(m, point_add(m, *P, *Q)));
        ++checked;
    }
}

TEST_CASE("isomorphisms") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 50; ++i) {
        QModel m = random_model(rng);
        auto I = invariants(m);
        if (I.disc == 0) continue;
        CHECK(apply_isomorphism(m, Iso<Rational>{R(1), R(0), R(0), R(0)}) == m);
        Iso<Rational> iso{R(long(rng() % 5) + 1, long(rng() % 3) + 1), R(long(rng() % 7) - 3), R(long(rng() % 7) - 3), R(long(rng() % 7) - 3)};
        QModel m2 = apply_isomorphism(m, iso);
        auto I2 = invariants(m2);
        CHECK(*I2.j == *I.j);
        CHECK(I2.disc == I.disc / rpow(iso.u, 12));
        CHECK(I2.c4 == I.c4 / rpow(iso.u, 4));
    }
    // (E_eta(u), 2*(0,0)) -> (E_u, (0,0)) with eta(u) = 1/(1-u)
    for (long uu : {2, 3, -2, 5}) {
        Rational u(uu);
        Iso<Rational> iso{(u - 1) * (u - 1), u * u - u, u * u - 2 * u, u * u * u * u - 2 * u * u * u + u * u};
        Rational eta = 1 / (1 - u);
        CHECK(apply_isomorphism(E_u(u), iso) == E_u(eta));
        QPoint twoP = point_mul(2, QPoint::affine(R(0), R(0)), E_u(eta));
        CHECK(iso_to_old(iso, twoP) == QPoint::affine(R(0), R(0)));
        CHECK(iso_to_new(iso, iso_to_old(iso, twoP)) == twoP);
    }
    CHECK(E_u(R(2)) != E_u(R(-1)));
}

TEST_CASE("quadratic twists") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 40; ++i) {
        QModel m = random_model(rng);
        auto I = invariants(m);
        if (I.disc == 0 || *I.j == 0 || *I.j == 1728) continue;
        CHECK(is_twist_by(m, quadratic_twist(m, R(1)), R(1)));
        QModel t3 = quadratic_twist(m, R(3));
        CHECK(j_invariant(t3) == *I.j);
        CHECK(is_twist_by(m, t3, R(3)));
        CHECK_FALSE(is_twist_by(m, t3, R(1)));
        QModel tt = quadratic_twist(t3, R(3));
        CHECK(is_twist_by(m, tt, R(1)));
        CHECK(is_twist_by(m, quadratic_twist(m, R(9)), R(1)));
        CHECK(twist_class(m, quadratic_twist(m, R(-7))).d == -7);
        CHECK(twist_class(m, quadratic_twist(m, R(-1, 7))).d == -7);
    }
    CHECK_THROWS(quadratic_twist(E_u(R(2)), R(0)));
    CHECK(squarefree_part(R(-12, 5)) == -15);
    // j = 1728 is flagged
    QModel m1728{R(0), R(0), R(0), R(1), R(0)};
    CHECK(twist_class(m1728, quadratic_twist(m1728, R(2))).flagged);
}

TEST_CASE("division polynomials") {
    QModel E = E_u(R(3));
    auto psi7 = division_polynomial(E, 7);
    CHECK(psi7.degree() == 24);
    CHECK(psi7.lc() == R(7));
    for (long k = 1; k <= 3; ++k) CHECK(psi7.eval(point_mul(k, QPoint::affine(R(0), R(0)), E).x) == 0);
    auto psi3 = division_polynomial(E, 3);
    CHECK(psi3.degree() == 4);
    CHECK(division_polynomial(E, 5).degree() == 12);
    // over F_p: 3P = O exactly when psi3(x(P)) = 0 for non-2-torsion P
    std::mt19937_64 rng(35);
    Model<Fp> m = reduce(E, 43);
    auto f3 = division_polynomial(m, 3);
    auto f5 = division_polynomial(m, 5);
    for (int i = 0; i < 60; ++i) {
        auto P = random_point(m, rng);
        if (!P || point_mul(2, *P, m).inf) continue;
        CHECK(point_mul(3, *P, m).inf == (f3.eval(P->x).v == 0));
        CHECK(point_mul(5, *P, m).inf == (f5.eval(P->x).v == 0));
    }
}

TEST_CASE("velu isogeny") {
    QModel E = E_u(R(2));
    QPoint T0 = QPoint::affine(R(0), R(0));
    std::vector<Rational> xs;
    for (long k = 1; k <= 3; ++k) xs.push_back(point_mul(k, T0, E).x);
    auto psi = QPoly::from_roots(xs, R(0));
    auto phi = velu_isogeny(E, psi);
    CHECK(phi.degree == 7);
    CHECK(discriminant(phi.codomain) != 0);
    for (long k = 1; k < 7; ++k) CHECK(phi.map_point(point_mul(k, T0, E)).inf);
    CHECK_THROWS(velu_isogeny(E, qpoly_ints({1, 0, 0, 1})));

    // over F_p: images of random points land on the codomain and addition is respected
    std::mt19937_64 rng(36);
    for (uint64_t p : {29ULL, 43ULL, 71ULL}) {
        for (long uu : {2, 3, 4, 6}) {
            Model<Fp> m = reduce(E_u(R(uu)), p);
            if (invariants(m).disc.v == 0) continue;
            Point<Fp> T = Point<Fp>::affine(Fp(0, p), Fp(0, p));
            std::vector<Fp> kx;
            for (long k = 1; k <= 3; ++k) kx.push_back(point_mul(k, T, m).x);
            auto ph = velu_isogeny(m, FpPoly::from_roots(kx, Fp(0, p)));
            CHECK(invariants(ph.codomain).disc.v != 0);
            for (int i = 0; i < 20; ++i) {
                auto P = random_point(m, rng), Q = random_point(m, rng);
                if (!P || !Q) continue;
                auto iP = ph.map_point(*P), iQ = ph.map_point(*Q);
                CHECK(on_curve(ph.codomain, iP));
                CHECK(ph.map_point(point_add(m, *P, *Q)) == point_add(ph.codomain, iP, iQ));
                CHECK(ph.map_point(point_add(m, *P, T)) == iP);
            }
        }
    }
}

TEST_CASE("minimality") {
    QModel big{R(0), R(0), R(0), R(0), rpow(R(7), 12)};
    CHECK(minimality_at_p(big, 7) == Minimality::Inconclusive);
    QModel m37{R(0), R(0), R(1), R(-1), R(0)};
    CHECK(discriminant(m37) == R(37));
    CHECK(minimality_at_p(m37, 37) == Minimality::Minimal);
    QModel half{R(1, 2), R(0), R(0), R(0), R(1)};
    CHECK_THROWS(minimality_at_p(half, 2));
    CHECK(minimality_at_p(half, 7) == Minimality::Minimal);
}

TEST_CASE("point counts over finite fields") {
    // brute force oracle over small F_q
    std::mt19937_64 rng(37);
    for (auto [p, k] : {std::pair<uint64_t, unsigned>{2, 3}, {5, 2}, {3, 2}, {13, 1}, {2, 4}}) {
        auto F = FiniteField::get(p, k);
        auto els = F.elements();
        for (int trial = 0; trial < 10; ++trial) {
            std::array<uint64_t, 5> a;
            for (auto& x : a) x = rng() % F.q();
            if (!is_nonsingular_fq(F, a)) continue;
            std::vector<GF> c;
            for (auto x : a) c.push_back(F.element(x));
            uint64_t brute = 1;
            for (const auto& x : els)
                for (const auto& y : els)
                    if ((y * y + c[0] * x * y + c[2] * y - (x * x * x + c[1] * x * x + c[3] * x + c[4])).is_zero()) ++brute;
            auto fd = frobenius_data_mod7(F, a);
            CHECK(fd.count == brute);
            CHECK(std::abs(double(fd.trace)) <= 2 * std::sqrt(double(F.q())));
        }
    }
    auto F169 = FiniteField::get(13, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::array<uint64_t, 5> a;
        for (auto& x : a) x = rng() % F169.q();
        if (!is_nonsingular_fq(F169, a)) continue;
        CHECK(std::abs(double(frobenius_data_mod7(F169, a).trace)) <= 2 * 13.0);
    }
}

TEST_CASE("curves over F_2") {
    auto F2 = FiniteField::get(2, 1);
    // y^2 + y = x^3
    auto fd = frobenius_data_mod7(F2, {0, 0, 1, 0, 0});
    CHECK(fd.count == 3);
    CHECK(fd.trace == 0);
    CHECK(fd.eigenvalues.empty());
    auto census = census_f2();
    CHECK(census.max_count <= 5);
    CHECK(census.max_count < 7);
    CHECK(census.eigenvalues == std::vector<uint32_t>{3, 4});
    CHECK(census.eigenvalue_free > 0);
    // independent: eigenvalues of T^2 - aT + 2 mod 7 over the Weil range |a| <= 2
    std::set<uint32_t> from_traces;
    for (long a : census.traces)
        for (uint32_t r = 0; r < 7; ++r)
            if (((long(r * r) - a * long(r) + 2) % 7 + 7) % 7 == 0) from_traces.insert(r);
    CHECK(std::vector<uint32_t>(from_traces.begin(), from_traces.end()) == census.eigenvalues);
    CHECK_THROWS_AS(frobenius_data_mod7(F2, {0, 0, 0, 0, 0}), SingularModel);
}
