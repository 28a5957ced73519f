#include "doctest.h"
#include "oracle.hpp"

#include "exc7/families.hpp"

#include <random>
#include <set>

using namespace exc7;
using namespace exc7::families;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// repeated addition, independent of point_mul
template <class F>
Point<F> naive_mul(int n, const Point<F>& P, const Model<F>& m) {
    Point<F> R = Point<F>::infinity();
    for (int i = 0; i < n; ++i) R = point_add(m, R, P);
    return R;
}

Rational pow7(long e) {
    Rational r(1);
    for (long i = 0; i < e; ++i) r *= 7;
    return r;
}

}  // namespace

TEST_CASE("universal curve E_u") {
    CHECK(check_Eu_disc().ok);
    CHECK(discriminant(build_Eu(Rational(0))) == 0);
    auto E2 = build_Eu(Rational(2));
    CHECK(discriminant(E2) == -1664);
    auto O = Point<Rational>::affine(Rational(0), Rational(0));
    CHECK(naive_mul(7, O, E2).inf);
    for (int k = 1; k < 7; ++k) CHECK_FALSE(naive_mul(k, O, E2).inf);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        Rational u = q(static_cast<long>(rng() % 2000) - 1000, 1 + static_cast<long>(rng() % 50));
        auto E = build_Eu(u);
        if (discriminant(E) == 0) continue;
        CHECK(naive_mul(7, O, E).inf);
    }
}

TEST_CASE("A_v discriminant and the cubic") {
    auto r = check_Av_disc(41);
    CHECK(r.ok);
    CHECK(r.points > 24);
    CHECK(check_cubic_disc(42).ok);
    // spot value against a direct evaluation of the closed form
    Rational t(3), v(q(2, 5));
    CHECK(discriminant(build_Av_model(t, v)) == av_disc_formula(t, v));
}

TEST_CASE("A_v marked point over the cubic field") {
    auto fp = build_Av_cubic(Rational(-2), Rational(0));
    REQUIRE_FALSE(fp.degenerate);
    const auto& P = fp.marked->P;
    CHECK(on_curve(fp.model, P));
    CHECK(naive_mul(7, P, fp.model).inf);
    CHECK_FALSE(naive_mul(1, P, fp.model).inf);
    // the modulus is x^3 - x^2 - 2x + 1 at t = -2
    CHECK(fp.t.ring()->modulus == qpoly_ints({1, -2, -1, 1}));
    for (auto [t, v] : std::vector<std::pair<long, long>>{{-2, 3}, {-2, 5}, {1, 4}, {0, 2}, {5, -3}}) {
        auto f = build_Av_cubic(Rational(t), Rational(v));
        CHECK(naive_mul(7, f.marked->P, f.model).inf);
        CHECK(sigma_apply(f.marked->P) == naive_mul(4, f.marked->P, f.model));
    }
}

TEST_CASE("twisted family A_v^(d)") {
    Rational t(-2), v(3);
    auto A = build_Av_model(t, v);
    auto A1 = build_Avd(t, v, Rational(1));
    auto tc = twist_class(A, A1);
    CHECK(tc.same_j);
    CHECK(tc.d == 1);
    CHECK_THROWS(build_Avd(t, v, Rational(0)));
    // A_3^(-1/7) is carried onto B_3
    CHECK(apply_isomorphism(build_Avd(t, v, q(-1, 7)), avd_to_bv_iso(v)) == build_Bv(v));
    CHECK(check_avd_to_bv().ok);
    std::mt19937_64 rng(32);
    for (int i = 0; i < 20; ++i) {
        Rational tt(static_cast<long>(rng() % 21) - 10), vv = q(static_cast<long>(rng() % 41) - 20, 1 + rng() % 7);
        Rational d(static_cast<long>(rng() % 29) - 14);
        if (d == 0) d = 5;
        auto M = build_Av_model(tt, vv);
        if (discriminant(M) == 0) continue;
        CHECK(j_invariant(build_Avd(tt, vv, d)) == j_invariant(M));
    }
}

TEST_CASE("B_v model") {
    CHECK(check_Bv_disc().ok);
    CHECK(check_Bv_j().ok);
    CHECK(j_invariant(build_Bv(Rational(0))) == -3375);
    CHECK(discriminant(build_Bv(Rational(0))) == -343);
    // integrality: binomial expansion, and direct evaluation on a range of integers
    CHECK(integer_valued(bv_alpha()));
    CHECK(integer_valued(bv_beta()));
    for (long n = -60; n <= 60; ++n) {
        CHECK(bv_alpha().eval(Rational(n)).get_den() == 1);
        CHECK(bv_beta().eval(Rational(n)).get_den() == 1);
    }
    CHECK_FALSE(integer_valued(qpoly({q(1, 2), q(1, 3)})));
    CHECK(integer_valued(qpoly({Rational(0), q(1, 2), q(1, 2)})));  // n(n+1)/2
    // Res(Delta, c4) = 7^98, with a Sylvester determinant as oracle
    Rational res = disc_c4_resultant();
    CHECK(res == pow7(98));
    auto I = invariants(build_Bv(QPoly::x(Rational(0))));
    CHECK(oracle::sylvester_resultant(I.disc.coeffs(), I.c4.coeffs()) == res);
}

TEST_CASE("hat model at infinity") {
    for (long w : {1, 2, 3, 7, -5, 14}) {
        Rational W(w);
        auto H = build_Bhat(W);
        CHECK(apply_isomorphism(build_Bv(Rational(1 / W)), bhat_iso(W)) == H);
        CHECK(is_integral(H));
        Rational w24(1);
        for (int i = 0; i < 24; ++i) w24 *= W;
        CHECK(discriminant(H) == w24 * discriminant(build_Bv(Rational(1 / W))));
    }
    auto H = build_Bhat(QPoly::x(Rational(0)));
    CHECK(integer_valued(H.a4));
    CHECK(integer_valued(H.a6));
    // w = 0 is the fiber at infinity: j = -15^3
    CHECK(j_invariant(build_Bhat(Rational(0))) == -3375);
}

TEST_CASE("cyclotomic instance") {
    auto ci = lcw_cyclotomic_instance();
    CHECK(ci.t == -2);
    CHECK(ci.gamma_is_root);
    CHECK(ci.sigma_is_eta);
    CHECK(ci.roots_ok);
    CHECK(ci.sqrt_m7 * ci.sqrt_m7 == QElem::from_int(ci.ring, -7));
}

TEST_CASE("isogeny B_v -> B'_v") {
    auto b5 = isogenous_Bv_prime(Rational(5));
    CHECK(b5.isomorphic);
    CHECK(j_invariant(b5.codomain) == j_formula(Rational(-4)));
    CHECK(j_invariant(b5.codomain) == j_invariant(b5.twist_target));
    // the kernel divides the 7-division polynomial
    auto psi7 = division_polynomial(b5.domain, 7);
    CHECK((psi7 % b5.kernel).is_zero());
    CHECK(b5.kernel.degree() == 3);
    // CM fibers: v = 0 goes to the twist of B_1 (j = -15^3), v = 2 to that of B_{-1} (j = 255^3)
    CHECK(j_invariant(isogenous_Bv_prime(Rational(0)).codomain) == -3375);
    CHECK(j_invariant(isogenous_Bv_prime(Rational(2)).codomain) == 16581375);
    std::set<Rational> js{j_invariant(isogenous_Bv_prime(Rational(0)).codomain),
                          j_invariant(isogenous_Bv_prime(Rational(2)).codomain)};
    CHECK(js == std::set<Rational>{Rational(-3375), Rational(16581375)});
    std::mt19937_64 rng(33);
    for (int i = 0; i < 25; ++i) {
        Rational v = q(static_cast<long>(rng() % 81) - 40, 1 + rng() % 9);
        auto b = isogenous_Bv_prime(v);
        CHECK(b.isomorphic);
    }
}

TEST_CASE("generator transported to B_v") {
    std::mt19937_64 rng(34);
    std::vector<Rational> vs{Rational(3), Rational(0), q(1, 7)};
    for (int i = 0; i < 4; ++i) vs.push_back(q(static_cast<long>(rng() % 41) - 20, 1 + rng() % 5));
    for (const auto& v : vs) {
        auto g = bv_generator(v);
        CHECK(on_curve(g.model, g.P));
        CHECK(naive_mul(7, g.P, g.model).inf);
        CHECK_FALSE(g.P.inf);
    }
}

TEST_CASE("ord_7 table") {
    auto m3 = min_disc_and_profile(Rational(3));
    CHECK(m3.profile.cls == VClass::Three);
    CHECK(m3.profile.ord_f1 == 1);
    CHECK(m3.profile.ord_f2 == 0);
    CHECK(m3.profile.ord_disc == 4);
    CHECK(m3.profile.ord_min_disc == 4);
    CHECK(*m3.profile.ord_j >= 2);
    CHECK(m3.s_v == -6);
    CHECK(min_disc_and_profile(Rational(5)).ratio_ord7 == 0);
    auto m17 = min_disc_and_profile(q(1, 7));
    CHECK(m17.profile.ord_f1 == -3);
    CHECK(m17.profile.ord_f2 == -3);
    CHECK(m17.profile.ord_disc == -21);
    CHECK(m17.profile.ord_min_disc == 3);
    // Delta_min = Delta d^24; the hat model gives it independently
    Rational w(7);
    CHECK(m17.delta_min == discriminant(build_Bhat(w)));

    // every residue mod 49 and 20 non-integral samples
    std::vector<Rational> vs;
    for (long a = 0; a < 49; ++a) vs.push_back(Rational(a));
    std::mt19937_64 rng(35);
    for (int i = 0; i < 20; ++i) {
        long k = 1 + rng() % 2, den = 1;
        for (long j = 0; j < k; ++j) den *= 7;
        long num = static_cast<long>(rng() % 200) - 100;
        if (num % 7 == 0) num += 1;
        vs.push_back(q(num, den * (1 + rng() % 3)));
    }
    for (const auto& v : vs) {
        auto m = min_disc_and_profile(v);
        CHECK(profile_matches(m.profile, v));
        auto o = ord_p(m.delta_min, Integer(7));
        CHECK(*o == m.profile.ord_min_disc);
        CHECK((m.s_v == 6 || m.s_v == -6));
        CHECK(m.ratio_ord7 == m.ratio_ord7_formula);
        bool special = m.profile.cls == VClass::Three || m.profile.cls == VClass::Five;
        CHECK(m.ratio_ord7 == (special ? 0 : 6));
        CHECK((m.s_v == -6) == (m.profile.cls == VClass::Three));
    }
}

TEST_CASE("j-invariant and CM fibers") {
    CHECK(j_and_CM_classification(Rational(2)).j == 16581375);
    CHECK(j_and_CM_classification(q(1, 2)).j == 16581375);
    CHECK(j_and_CM_classification(Rational(-1)).j == 16581375);
    CHECK(j_and_CM_classification(std::nullopt).j == -3375);
    CHECK(j_and_CM_classification(Rational(1)).is_cm);
    CHECK_FALSE(j_and_CM_classification(Rational(3)).is_cm);
    for (long v : {-3, 4, 9}) CHECK(j_formula(Rational(v)) == j_invariant(build_Bv(Rational(v))));
    auto p1 = j_preimages(Rational(-3375));
    CHECK(p1 == std::vector<ProjRational>{Rational(0), Rational(1), std::nullopt});
    auto p2 = j_preimages(Rational(16581375));
    CHECK(p2 == std::vector<ProjRational>{Rational(-1), q(1, 2), Rational(2)});
    CHECK(rational_roots(qpoly_ints({-6, 1, 1})) == std::vector<Rational>{Rational(-3), Rational(2)});
    CHECK(rational_roots(qpoly_ints({-1, 0, 4})) == std::vector<Rational>{q(-1, 2), q(1, 2)});
}

TEST_CASE("exceptional candidates") {
    CHECK(exceptional_candidate_test(Rational(0)));
    CHECK(exceptional_candidate_test(Rational(2)));
    CHECK(exceptional_candidate_test(std::nullopt));
    CHECK_FALSE(exceptional_candidate_test(Rational(3)));
    // g(3) = 7/13 by direct evaluation
    CHECK(f1_poly().eval(Rational(3)) / f2_poly().eval(Rational(3)) == q(7, 13));
    auto s = exceptional_scan(30);
    std::set<std::string> hits;
    for (const auto& v : s.hits) hits.insert(proj_str(v));
    CHECK(hits == std::set<std::string>{"0", "1", "oo", "2", "1/2", "-1"});
    CHECK(s.tested > 1000);
}

TEST_CASE("S3 orbits") {
    CHECK(s3_orbit(Rational(0)) == std::vector<ProjRational>{Rational(0), Rational(1), std::nullopt});
    CHECK(s3_orbit(Rational(2)) == std::vector<ProjRational>{Rational(-1), q(1, 2), Rational(2)});
    CHECK(s3_orbit(Rational(5)).size() == 6);
    CHECK(s3_orbit(std::nullopt).size() == 3);
    CHECK(eta(eta(eta(Rational(5)))) == ProjRational(Rational(5)));
}

TEST_CASE("family identities") {
    auto rep = verify_family_identities(36, 12);
    for (const auto& c : rep.checks) {
        INFO(c.name << " " << c.failure);
        CHECK(c.ok);
        CHECK(c.points > 0);
    }
    CHECK(rep.ok());
}
