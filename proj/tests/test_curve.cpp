#include "doctest.h"

#include "exc7/curve.hpp"

#include <random>
#include <set>
#include <sstream>

using namespace exc7;
using namespace exc7::curve;

namespace {

std::string data(const std::string& f) { return std::string(EXC7_TEST_DATA_DIR) + "/" + f; }

// every pair of P1 points checked against the bihomogeneous equation
std::set<CPoint> brute_force(const FastField& F) {
    std::vector<std::pair<uint32_t, uint32_t>> p1;
    for (uint32_t a = 0; a < F.q(); ++a) p1.push_back(normalize_p1(F, a, F.from_int(1)));
    p1.push_back({F.from_int(1), 0});
    std::set<CPoint> out;
    for (auto [v, u] : p1)
        for (auto [w, z] : p1) {
            CPoint P{v, u, w, z};
            if (on_curve(F, P)) out.insert(P);
        }
    return out;
}

FastField field(uint64_t p, unsigned k) { return FastField(FiniteField::get(p, k)); }

}  // namespace

TEST_CASE("points over F5 and F2") {
    FastField F5 = field(5, 1);
    // f1, f2 have no roots in F5
    long f1v[] = {1, 4, 4, 2, 4}, f2v[] = {1, 4, 1, 3, 1};
    for (long v = 0; v < 5; ++v) {
        CHECK(((v * v * v - 2 * v * v - v + 1) % 5 + 5) % 5 == f1v[v]);
        CHECK(((v * v * v - v * v - 2 * v + 1) % 5 + 5) % 5 == f2v[v]);
    }
    auto pts = enumerate_points(F5);
    CHECK(pts.size() == 6);
    CHECK(std::set<CPoint>(pts.begin(), pts.end()) == brute_force(F5));
    std::set<std::string> s;
    for (const auto& P : pts) s.insert(point_str(F5, P));
    CHECK(s.count("(0, 1)"));
    CHECK(s.count("(1, 1)"));
    CHECK(s.count("(2, 4)"));
    CHECK(s.count("(inf, 1)"));

    FastField F2 = field(2, 1);
    auto p2 = enumerate_points(F2);
    CHECK(p2.size() == 3);
    CHECK(count_points(F2) == 3);
    std::set<std::string> s2;
    for (const auto& P : p2) s2.insert(point_str(F2, P));
    CHECK(s2 == std::set<std::string>{"(0, 1)", "(1, 1)", "(inf, 1)"});
}

TEST_CASE("enumeration agrees with brute force and with counting") {
    for (auto [p, k] : std::vector<std::pair<uint64_t, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {13, 1}, {13, 2}, {29, 1}, {2, 3}}) {
        FastField F = field(p, k);
        auto pts = enumerate_points(F);
        auto bf = brute_force(F);
        CHECK(std::set<CPoint>(pts.begin(), pts.end()) == bf);
        CHECK(pts.size() == bf.size());
        CHECK(count_points(F) == pts.size());
    }
    FastField F = field(13, 3);
    CHECK(count_points(F) == enumerate_points(F).size());
    FastField F4 = field(13, 4);
    CHECK(count_points(F4, 1) == count_points(F4, 4));
    CHECK_THROWS(enumerate_points(field(7, 1)));
}

TEST_CASE("S3 action permutes points") {
    for (uint64_t p : {2ul, 5ul, 13ul}) {
        FastField F = field(p, 1);
        auto pts = enumerate_points(F);
        std::set<CPoint> all(pts.begin(), pts.end()), is, it;
        for (const auto& P : pts) {
            CPoint a = sigma(F, P), b = tau(F, P);
            CHECK(all.count(a));
            CHECK(all.count(b));
            CHECK(sigma(F, a) == P);
            CHECK(tau(F, b) == P);
            is.insert(a);
            it.insert(b);
        }
        CHECK(is == all);
        CHECK(it == all);
    }
}

TEST_CASE("rational points and reduction mod 5") {
    auto Z = known_rational_points();
    REQUIRE(Z.size() == 6);
    for (const auto& P : Z) CHECK(on_curve(P));
    CHECK_FALSE(on_curve(QCPoint{"bad", Rational(3), Rational(1)}));
    FastField F5 = field(5, 1);
    std::set<CPoint> red;
    for (const auto& P : Z) red.insert(reduce(F5, P));
    auto pts = enumerate_points(F5);
    CHECK(red == std::set<CPoint>(pts.begin(), pts.end()));
    CHECK(point_str(F5, reduce(F5, Z[4])) == "(3, 4)");  // (1/2, -1)
}

TEST_CASE("zeta function at 13 and the Jacobian order") {
    ZetaData z = jacobian_order(13, 6, 2);
    REQUIRE(z.counts.size() == 6);
    CHECK(z.integral);
    CHECK(z.functional_equation);
    CHECK(z.roundtrip);
    CHECK(z.weil_counts);
    CHECK(z.roots_on_circle);
    CHECK(z.Q[0] == 1);
    CHECK(z.Q[12] == Integer("4826809"));  // 13^6
    CHECK(z.Q1 == 6002451);
    CHECK(z.Q1 == 27 * 49 * 13 * 349);
    Integer expect = Integer(729) * 2401 * 169 * 121801;
    CHECK(z.jacobian_order == expect);
    CHECK(z.jacobian_order % 5 != 0);
    // N_1 from a direct listing
    CHECK(z.counts[0] == enumerate_points(field(13, 1)).size());
}

TEST_CASE("algebraic points of degree 8 and 16") {
    auto pts = load_algebraic_points(data("algebraic_points.txt"));
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].minpoly.size() == 9);
    CHECK(pts[1].minpoly.size() == 17);
    CHECK(pts[1].x_den == 216);
    for (const auto& p : pts) {
        auto r = verify_algebraic_point(p);
        CHECK(r.on_curve);
        CHECK(r.residue.is_zero());
    }
    auto bad = pts[0];
    bad.x_num[0] += 1;
    auto r = verify_algebraic_point(bad);
    CHECK_FALSE(r.on_curve);
    CHECK_FALSE(r.residue.is_zero());
    auto bad2 = pts[1];
    bad2.x_den = 215;
    CHECK_FALSE(verify_algebraic_point(bad2).on_curve);
    std::istringstream broken("version 1\nminpoly 1 1\n");
    CHECK_THROWS(parse_algebraic_points(broken));
}

TEST_CASE("divisors of differentials") {
    CHECK(div_dv().degree() == 22);
    CHECK(div_v().degree() == 0);
    CHECK(div_w().degree() == 0);
    CHECK(div_f2().degree() == 0);
    CHECK(differential_divisor(0, 0) == CDivisor::of("Dinf") + CDivisor::of("G2", 5));
    CHECK(differential_divisor(1, 5) == CDivisor::of("D0") + CDivisor::of("G1", 5));
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 5; ++j) {
            auto d = differential_divisor(i, j);
            CHECK(d.degree() == 22);
            CHECK(d.effective());
            CHECK(d == CDivisor::of("D0", i) + CDivisor::of("Dinf", 1 - i) + CDivisor::of("G1", j) + CDivisor::of("G2", 5 - j));
        }
    CHECK_THROWS(differential_divisor(2, 0));
    CHECK_THROWS(differential_divisor(0, 6));
    // w^-1 / f2 dv has a pole along G2, so it is not holomorphic
    CHECK_FALSE((div_w() * -1 - div_f2() + div_dv() - div_w() * 6).effective());

    auto divs = load_divisors(data("divisors.txt"));
    CHECK(divs.size() == 9);
    for (const auto& d : divs) CHECK(d.divisor.degree() == 0);
    std::istringstream bad("B X 1 P9\n");
    CHECK_THROWS(parse_divisors(bad));
}

TEST_CASE("local expansions") {
    const Rational zq(0);
    // at P0 over Q: t = v, w(t) solves w^7 f2 = f1
    auto e = expand_at_point<Rational>(Rational(0), Rational(1), zq, 12);
    CHECK(e.v_minus_v0.valuation() == std::optional<std::size_t>(1));
    using S = PowerSeries<Rational>;
    S t = S::t(12, zq);
    auto one = S::constant(Rational(1), 12);
    S f1 = ((t - one.scale(2)) * t - one) * t + one;
    S f2 = ((t - one) * t - one.scale(2)) * t + one;
    S w7 = one;
    for (int i = 0; i < 7; ++i) w7 = w7 * e.w;
    CHECK(!(w7 * f2 - f1).valuation().has_value());
    // omega_00 at P0 is 1/(w^6 f2) dt, a unit
    CHECK(e.basis[0].valuation() == std::optional<std::size_t>(0));
    CHECK(e.basis[6].valuation() == std::optional<std::size_t>(1));  // v/(w^6 f2)

    // at infinity omega_0j vanishes and omega_1j does not
    auto inf = expand_at_point<Rational>(std::nullopt, Rational(1), zq, 8);
    for (int j = 0; j < 6; ++j) {
        CHECK(inf.basis[j].valuation() == std::optional<std::size_t>(1));
        CHECK(inf.basis[6 + j].valuation() == std::optional<std::size_t>(0));
    }
    // omega at P_inf over F5: leading coefficient -3
    const Fp z5(0, 5);
    auto i5 = expand_at_point<Fp>(std::nullopt, Fp(1, 5), z5, 6);
    std::vector<Fp> c;
    for (long x : {3, 1, 0, 3, 2, 0, 0, 0, 1, 2, 0, 0}) c.emplace_back(x, 5);
    auto s = i5.omega(c);
    CHECK(s.valuation() == std::optional<std::size_t>(0));
    CHECK(s.coeff(0) == Fp(-3, 5));

    // branch point over F13: a root of f1 with w = 0 is refused
    for (long v = 0; v < 13; ++v) {
        if (((v * v * v - 2 * v * v - v + 1) % 13 + 13) % 13 != 0) continue;
        CHECK_THROWS_AS(expand_at_point<Fp>(Fp(v, 13), Fp(0, 13), Fp(0, 13), 6), SingularPoint);
    }
}

TEST_CASE("Chabauty certificate at 5") {
    Mat rel = load_f5_rows(data("relations_f5.txt"), 12);
    Mat om = load_f5_rows(data("omega_f5.txt"), 12);
    REQUIRE(rel.size() == 6);
    REQUIRE(om.size() == 1);
    // r1 . omega over Z
    long d = 0;
    for (std::size_t i = 0; i < 12; ++i) d += static_cast<long>(rel[0][i]) * om[0][i];
    CHECK(d == 10);
    auto r = chabauty_verify(rel, om[0]);
    CHECK(r.relation_rank == 6);
    CHECK(r.annihilated);
    CHECK(r.dots == std::vector<uint32_t>(6, 0));
    CHECK(r.h_matches);
    CHECK(r.num_f5_points == 6);
    CHECK(r.reduction_bijective);
    CHECK(r.ords_zero);
    REQUIRE(r.points.size() == 6);
    for (const auto& p : r.points) CHECK(p.ord_omega == 0);
    CHECK(r.ok);
    CHECK(r.conclusion.find("|C(Q)| = 6") != std::string::npos);

    // a differential off the relation space is caught
    Vec bad = om[0];
    bad[1] = (bad[1] + 1) % 5;
    auto rb = chabauty_verify(rel, bad);
    CHECK_FALSE(rb.annihilated);
    CHECK_FALSE(rb.h_matches);
    CHECK_FALSE(rb.ok);
    // omega_00 alone vanishes at P_inf
    Vec w00(12, 0);
    w00[0] = 1;
    CHECK_FALSE(chabauty_verify(rel, w00).ords_zero);
    std::istringstream short_row("1 2 3\n");
    CHECK_THROWS(parse_f5_rows(short_row, 12));
}

TEST_CASE("random fibres lie on the curve") {
    std::mt19937_64 rng(0x13);
    FastField F = field(13, 2);
    auto pts = enumerate_points(F);
    for (int i = 0; i < 200; ++i) {
        const CPoint& P = pts[rng() % pts.size()];
        CHECK(on_curve(F, P));
        CHECK(normalize_p1(F, P.v, P.u) == std::make_pair(P.v, P.u));
    }
}
