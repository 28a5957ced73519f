#include "exc7/report.hpp"

#include "exc7/curve.hpp"
#include "exc7/descent.hpp"
#include "exc7/families.hpp"
#include "exc7/padic.hpp"
#include "exc7/weierstrass.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace exc7::report {

namespace {

constexpr uint64_t kSeed = 20240607;

struct Outcome {
    bool pass = false;
    std::string computed;
    std::string detail;
};

class Recorder {
public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void run(const std::string& name, int criterion, const std::string& reference, const std::string& expected,
             const std::function<Outcome()>& fn) {
        CheckRecord c;
        c.suite = suite_;
        c.name = name;
        c.criterion = criterion;
        c.reference = reference;
        c.expected = expected;
        auto t0 = std::chrono::steady_clock::now();
        try {
            Outcome o = fn();
            c.status = o.pass ? Status::Pass : Status::Fail;
            c.computed = o.computed;
            c.detail = o.detail;
        } catch (const std::exception& e) {
            c.status = Status::Fail;
            c.computed = "error";
            c.detail = e.what();
        }
        c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out_.push_back(c);
    }

    std::vector<CheckRecord> take() { return std::move(out_); }

private:
    std::string suite_;
    std::vector<CheckRecord> out_;
};

template <class T>
std::string join(const T& xs, const std::string& sep = ", ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : xs) {
        if (!first) os << sep;
        os << x;
        first = false;
    }
    return os.str();
}

std::string mat_str(const Mat& m) {
    std::ostringstream os;
    for (const auto& row : m) os << join(row, "") << "\n";
    return os.str();
}

Outcome identity(const families::IdentityReport& r) {
    // points == 0: compared coefficientwise in Q[x]
    std::string how = r.points == 0 ? "as polynomials" : "at " + std::to_string(r.points) + " evaluation points";
    return {r.ok, (r.ok ? "holds " : "fails ") + how, r.failure};
}

// ------------------------------------------------------------------ families

std::vector<CheckRecord> families_suite(const RunConfig& cfg) {
    using namespace families;
    Recorder R("families");
    R.run("Delta(E_u) closed form", 1, "universal curve with a rational 7-torsion point (0,0)", "u^7 (u-1)^7 (u^3-8u^2+5u+1)",
          [] { return identity(check_Eu_disc()); });
    R.run("Delta(B_v) closed form", 1, "discriminant of B_v", "-7^3 f1(v) f2(v)^7", [] { return identity(check_Bv_disc()); });
    R.run("j(B_v) closed form", 1, "j-invariant of B_v", "quartic-product cube over f1 f2^7", [] { return identity(check_Bv_j()); });
    R.run("Delta(A_v) closed form", 1, "discriminant of the two-parameter family A_v", "c^8 f^7 times the listed factor",
          [] { return identity(check_Av_disc(kSeed)); });
    R.run("disc of the cubic = c^2", 1, "cubic x^3 + ... defining Q(gamma) over Q(t)", "c(t)^2",
          [] { return identity(check_cubic_disc(kSeed)); });
    R.run("Res(Delta(B_v), c4(B_v))", 2, "common zeros of Delta and c4 only at 7", "7^98", [] {
        Rational r = disc_c4_resultant();
        Rational p98 = rpow(Rational(7), 98);
        auto o = ord_p(r, Integer(7));
        std::string s = r == p98 ? "7^98" : "ord_7 = " + (o ? std::to_string(*o) : std::string("inf")) + ", cofactor sign " + std::to_string(sgn(r));
        return Outcome{r == p98, s, {}};
    });

    R.run("7P_v = oo and P_v^sigma = 4P_v", 3, "rational 7-torsion point on A_v with the Galois action of the cubic", "true at >= 10 (t, v)",
          [] {
              std::vector<std::pair<long, long>> tv{{-2, 0}, {-2, 3}, {-2, 5}, {1, 4}, {0, 2}, {5, -3}, {2, 1}, {-1, 2}, {3, -2}, {-4, 7}, {6, 3}};
              long n = 0;
              std::string bad;
              for (auto [t, v] : tv) {
                  auto f = build_Av_cubic(Rational(t), Rational(v));
                  if (f.degenerate) continue;
                  const auto& P = f.marked->P;
                  bool ok = point_mul(7, P, f.model).inf && !P.inf && sigma_apply(P) == point_mul(4, P, f.model);
                  if (!ok) bad += "(" + std::to_string(t) + "," + std::to_string(v) + ") ";
                  ++n;
              }
              return Outcome{bad.empty() && n >= 10, std::to_string(n) + " specializations, failures: " + (bad.empty() ? "none" : bad), {}};
          });
    R.run("7(0,0) = oo on E_u", 3, "universal curve with a rational 7-torsion point (0,0)", "true for 10 random u", [] {
        std::mt19937_64 rng(kSeed);
        int n = 0;
        std::string bad;
        while (n < 10) {
            Rational u = make_rational(static_cast<long>(rng() % 2000) - 1000, 1 + static_cast<long>(rng() % 50));
            auto E = build_Eu(u);
            if (discriminant(E) == 0) continue;
            auto O = Point<Rational>::affine(Rational(0), Rational(0));
            if (!point_mul(7, O, E).inf || point_mul(1, O, E).inf) bad += to_string(u) + " ";
            ++n;
        }
        return Outcome{bad.empty(), std::to_string(n) + " values, failures: " + (bad.empty() ? "none" : bad), {}};
    });
    R.run("family identities over cubic rings", 3, "lambda, sigma-equivariance and the eta automorphism", "all hold", [] {
        auto rep = verify_family_identities(kSeed, 12);
        std::string s, d;
        for (const auto& c : rep.checks) {
            s += c.name + ":" + (c.ok ? "ok" : "FAIL") + "(" + std::to_string(c.points) + ") ";
            if (!c.ok) d += c.name + ": " + c.failure + "\n";
        }
        return Outcome{rep.ok(), s, d};
    });

    R.run("ord_7 table over residues and non-integral v", 4, "ord_7 of f1, f2, Delta, Delta_min and j by residue class of v",
          "every row matches", [&cfg] {
              std::vector<Rational> vs;
              long m = cfg.mod49 ? 49 : 7;
              for (long a = 0; a < m; ++a) vs.push_back(Rational(a));
              std::mt19937_64 rng(kSeed + 4);
              for (int i = 0; i < 20; ++i) {
                  long den = (rng() % 2 == 0) ? 7 : 49;
                  long num = static_cast<long>(rng() % 200) - 100;
                  if (num % 7 == 0) num += 1;
                  vs.push_back(make_rational(num, den * static_cast<long>(1 + rng() % 3)));
              }
              std::string bad;
              std::map<std::string, long> rows;
              for (const auto& v : vs) {
                  auto r = min_disc_and_profile(v);
                  rows[vclass_str(r.profile.cls)]++;
                  auto o = ord_p(r.delta_min, Integer(7));
                  if (!profile_matches(r.profile, v) || !o || *o != r.profile.ord_min_disc) bad += to_string(v) + " ";
              }
              std::string s = std::to_string(vs.size()) + " values;";
              for (const auto& [k, c] : rows) s += " " + k + ":" + std::to_string(c);
              return Outcome{bad.empty(), s, bad};
          });
    R.run("ord_7 of Delta_min(B'_v)/Delta_min(B_v)", 4, "change of minimal discriminant along the 7-isogeny",
          "0 for v = 3, 5 mod 7, else 6", [&cfg] {
              std::vector<Rational> vs;
              long m = cfg.mod49 ? 49 : 7;
              for (long a = 0; a < m; ++a) vs.push_back(Rational(a));
              for (long a : {1, 2, 3, 4, 5, 6, 10, 17}) vs.push_back(make_rational(a, 7));
              std::string bad;
              std::set<long> seen;
              for (const auto& v : vs) {
                  auto r = min_disc_and_profile(v);
                  bool special = r.profile.cls == families::VClass::Three || r.profile.cls == families::VClass::Five;
                  seen.insert(r.ratio_ord7);
                  if (r.ratio_ord7 != (special ? 0 : 6) || r.ratio_ord7 != r.ratio_ord7_formula) bad += to_string(v) + " ";
              }
              return Outcome{bad.empty(), "values attained {" + join(seen) + "} over " + std::to_string(vs.size()) + " v", bad};
          });

    R.run("7-isogeny codomain is the -7 twist of B_{1-v}", 5, "Velu codomain versus twist of B_{1-v}", "isomorphic for 25 sampled v",
          [] {
              std::mt19937_64 rng(kSeed + 5);
              int ok = 0;
              std::string bad;
              for (int i = 0; i < 25; ++i) {
                  Rational v = make_rational(static_cast<long>(rng() % 81) - 40, 1 + static_cast<long>(rng() % 9));
                  if (isogenous_Bv_prime(v).isomorphic) ++ok;
                  else bad += to_string(v) + " ";
              }
              return Outcome{ok == 25, std::to_string(ok) + "/25", bad};
          });
    R.run("CM fibres v in {0, 2}", 5, "j of the isogenous curves on the CM fibres", "{-15^3, 255^3}", [] {
        std::set<Rational> js;
        for (long v : {0, 2}) js.insert(j_invariant(isogenous_Bv_prime(Rational(v)).codomain));
        bool ok = js == std::set<Rational>{Rational(-3375), Rational(16581375)};
        return Outcome{ok, "{" + join(std::vector<std::string>{to_string(*js.begin()), to_string(*js.rbegin())}) + "}", {}};
    });

    R.run("exceptional scan", 11, "v in P^1(Q) passing the exceptional-candidate test", "{0, 1, oo, 2, 1/2, -1}", [&cfg] {
        auto s = exceptional_scan(cfg.height_bound);
        std::set<std::string> hits;
        for (const auto& v : s.hits) hits.insert(proj_str(v));
        bool ok = hits == std::set<std::string>{"0", "1", "oo", "2", "1/2", "-1"};
        return Outcome{ok, "{" + join(hits) + "} among " + std::to_string(s.tested) + " values of height <= " + std::to_string(cfg.height_bound),
                       {}};
    });

    R.run("F2 census", 12, "curves over F_2 and the mod-7 Frobenius eigenvalues", "max #E(F2) <= 5, eigenvalues {3, 4}", [] {
        auto c = census_f2();
        bool ok = c.max_count <= 5 && c.eigenvalues == std::vector<uint32_t>{3, 4};
        return Outcome{ok,
                       std::to_string(c.models) + " nonsingular of 32, max #E(F2) = " + std::to_string(c.max_count) + ", eigenvalues {" +
                           join(c.eigenvalues) + "}",
                       {}};
    });
    return R.take();
}

// ------------------------------------------------------------------ local

std::vector<CheckRecord> local_suite(const RunConfig&) {
    Recorder R("local");
    for (long j = 1; j <= 6; ++j) {
        R.run("C_" + std::to_string(j) + "(Q_7) empty", 6, "local obstruction at 7 for the twisted curves C_j", "no 7-adic points", [j] {
            auto r = padic::local_solvability_Cj(j);
            std::string s = r.method + ", reduced j = " + std::to_string(r.reduced_j) + ", solutions mod 343: " + std::to_string(r.solutions.size());
            return Outcome{r.empty, s, r.detail};
        });
    }
    R.run("scan mod 7^3 for j = 1", 6, "both equations for j = 1", "0 solutions", [] {
        auto r = padic::local_solvability_Cj(1);
        return Outcome{r.method == "scan mod 343" && r.solutions.empty(), std::to_string(r.solutions.size()) + " solutions", {}};
    });
    R.run("valuation obstruction for j = 2, 3", 6, "7-adic valuations of f1, f2", "obstructed", [] {
        auto a = padic::local_solvability_Cj(2), b = padic::local_solvability_Cj(3);
        bool ok = a.method == "valuation" && b.method == "valuation" && a.empty && b.empty;
        return Outcome{ok, a.method + "/" + b.method, a.detail + "\n" + b.detail};
    });
    R.run("deg of the canonical divisor", 6, "(dv) = 6G1 + 6G2 - 2Dinf and the 12 differentials", "22 (genus 12)", [] {
        bool ok = curve::div_dv().degree() == 22;
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; j <= 5; ++j) {
                auto d = curve::differential_divisor(i, j);
                ok = ok && d.degree() == 22 && d.effective();
            }
        return Outcome{ok, std::to_string(curve::div_dv().degree()), {}};
    });
    return R.take();
}

// ------------------------------------------------------------------ count

std::vector<CheckRecord> count_suite(const RunConfig& cfg) {
    Recorder R("count");
    curve::ZetaData z;
    const std::string ref = "point counts of C over F_13^k, k <= 6, with J(C) ~ Jac(D)^2";
    R.run("N_k = #C(F_13^k), k = 1..6", 8, ref, "six counts within the Weil bound", [&] {
        z = curve::jacobian_order(13, 6, cfg.jobs);
        return Outcome{z.weil_counts && z.counts.size() == 6, join(z.counts), {}};
    });
    R.run("Q(T) integral", 8, ref, "integral Newton output", [&] { return Outcome{z.integral, join(z.Q, " "), {}}; });
    R.run("functional equation", 8, ref, "c_{12-i} = 13^(6-i) c_i", [&] { return Outcome{z.functional_equation, z.functional_equation ? "holds" : "fails", {}}; });
    R.run("counts reproduced from Q(T)", 8, ref, "N_1..N_6", [&] { return Outcome{z.roundtrip, z.roundtrip ? "all six match" : "mismatch", {}}; });
    R.run("reciprocal roots on |x| = sqrt(13)", 8, ref, "6 real roots of the real Weil polynomial in [-2 sqrt 13, 2 sqrt 13]",
          [&] { return Outcome{z.roots_on_circle, z.roots_on_circle ? "certified by Sturm count" : "not certified", {}}; });
    R.run("|J(F_13)|", 8, "order of the Jacobian over F_13", "3^6 7^4 13^2 349^2", [&] {
        Integer e = Integer(729) * 2401 * 169 * 121801;
        return Outcome{z.jacobian_order == e && z.Q1 * z.Q1 == z.jacobian_order, to_string(z.jacobian_order) + " = Q(1)^2, Q(1) = " + to_string(z.Q1), {}};
    });
    R.run("no 5-torsion in J(Q)", 8, "torsion injects into J(F_13)", "5 does not divide |J(F_13)|",
          [&] { return Outcome{z.jacobian_order != 0 && z.jacobian_order % 5 != 0, "|J(F_13)| mod 5 = " + to_string(Integer(z.jacobian_order % 5)), {}}; });
    return R.take();
}

// ------------------------------------------------------------------ descent

std::vector<CheckRecord> descent_suite(const RunConfig& cfg) {
    using namespace descent;
    Recorder R("descent");
    auto pts = load_local_points(data_path(cfg, "local_points.txt"));
    SelmerReport lo, hi;
    auto dump = [](const SelmerReport& r) {
        return "local basis:\n" + mat_str(r.local_basis) + "loc:\n" + mat_str(r.loc_matrix) + "N:\n" + mat_str(r.norm_matrix);
    };
    const std::string ref = "(x - T) descent over Q(zeta_7) localized at pi";
    R.run("local image dimension", 7, ref, "16", [&] {
        lo = selmer_bound_pipeline(pts, cfg.precision);
        return Outcome{lo.local_dim == 16, std::to_string(lo.local_dim), lo.local_dim == 16 ? "" : dump(lo)};
    });
    R.run("triple intersection dimension", 7, ref, "10", [&] {
        return Outcome{lo.intersection_dim == 10, std::to_string(lo.intersection_dim) + " (ker N " + std::to_string(lo.norm_kernel_dim) +
                                                      ", loc preimage " + std::to_string(lo.preimage_dim) + ")",
                       lo.intersection_dim == 10 ? "" : dump(lo)};
    });
    R.run("rank bounds", 7, "dim J(k)[pi] = 4 subtracted from the Selmer bound", "rank_O <= 6, rank_Z <= 6", [&] {
        bool ok = lo.rank_O_bound == 6 && lo.rank_Z_bound == 6;
        return Outcome{ok, "rank_O <= " + std::to_string(lo.rank_O_bound) + ", rank_Z <= " + std::to_string(lo.rank_Z_bound), {}};
    });
    R.run("stable at doubled precision", 7, ref, "16 and 10 at " + std::to_string(2 * cfg.precision) + " digits", [&] {
        hi = selmer_bound_pipeline(pts, 2 * cfg.precision);
        bool ok = hi.local_dim == lo.local_dim && hi.intersection_dim == lo.intersection_dim && hi.local_dim == 16 && hi.intersection_dim == 10;
        return Outcome{ok, std::to_string(hi.local_dim) + " and " + std::to_string(hi.intersection_dim), ok ? "" : dump(hi)};
    });
    R.run("ablation: Galois conjugates only", 0, "local image without the x-line automorphisms", "10",
          [&] { return Outcome{lo.galois_only_dim == 10, std::to_string(lo.galois_only_dim), {}}; });
    R.run("ablation: x-line automorphisms only", 0, "local image without Galois conjugates", "16",
          [&] { return Outcome{lo.s3_only_dim == 16, std::to_string(lo.s3_only_dim), {}}; });
    return R.take();
}

// ------------------------------------------------------------------ chabauty

std::vector<CheckRecord> chabauty_suite(const RunConfig& cfg) {
    using namespace curve;
    Recorder R("chabauty");
    auto aps = load_algebraic_points(data_path(cfg, "algebraic_points.txt"));
    for (const auto& ap : aps) {
        R.run("point " + ap.name + " of degree " + std::to_string(ap.minpoly.size() - 1) + " on C", 9,
              "closed points used to reach rank 6", "w^7 f2(x) - f1(x) = 0 mod minpoly", [ap] {
                  auto r = verify_algebraic_point(ap);
                  return Outcome{r.on_curve, r.on_curve ? "0" : r.residue.str("t"), {}};
              });
    }
    R.run("negative control", 9, "x-expression of the degree 8 point shifted by 1", "off C", [aps] {
        if (aps.empty()) return Outcome{false, "no points loaded", {}};
        auto bad = aps[0];
        bad.x_num[0] += 1;
        auto r = verify_algebraic_point(bad);
        return Outcome{!r.on_curve, r.on_curve ? "on C" : "off C", {}};
    });
    R.run("divisor bookkeeping", 0, "kernel-of-reduction generators and relations", "all of degree 0", [&cfg] {
        auto ds = load_divisors(data_path(cfg, "divisors.txt"));
        std::string bad;
        for (const auto& d : ds)
            if (d.divisor.degree() != 0) bad += d.name + " ";
        return Outcome{bad.empty() && !ds.empty(), std::to_string(ds.size()) + " divisors, nonzero degree: " + (bad.empty() ? "none" : bad), {}};
    });

    Mat rel = load_f5_rows(data_path(cfg, "relations_f5.txt"), 12);
    Mat om = load_f5_rows(data_path(cfg, "omega_f5.txt"), 12);
    if (om.size() != 1) throw std::runtime_error("omega_f5.txt must hold exactly one vector");
    ChabautyReport c;
    const std::string ref = "mod 5 Chabauty with the relation matrix as data";
    R.run("relation matrix rank over F5", 10, ref, "6", [&] {
        c = chabauty_verify(rel, om[0]);
        return Outcome{c.relation_rank == 6, std::to_string(c.relation_rank), c.relation_rank == 6 ? "" : mat_str(rel)};
    });
    R.run("omega annihilated by the relations", 10, ref, "(0, 0, 0, 0, 0, 0), r1 . omega = 10 over Z", [&] {
        long d = 0;
        for (std::size_t i = 0; i < 12; ++i) d += static_cast<long>(rel.at(0).at(i)) * om[0][i];
        return Outcome{c.annihilated && d == 10, "(" + join(c.dots) + "), r1 . omega = " + std::to_string(d), {}};
    });
    R.run("omega = h(v,w)/w^6 dv/f2", 10, ref, "coordinates (3,1,0,3,2,0,0,0,1,2,0,0)",
          [&] { return Outcome{c.h_matches, c.h_matches ? "matches" : "differs", {}}; });
    R.run("#C(F5)", 10, ref, "6", [&] { return Outcome{c.num_f5_points == 6, std::to_string(c.num_f5_points), {}}; });
    R.run("Z -> C(F5) bijective", 10, ref, "bijective", [&] {
        std::string s;
        for (const auto& p : c.points) s += p.name + "->" + p.reduction_str + " ";
        return Outcome{c.reduction_bijective, s, {}};
    });
    R.run("ord_P(omega) = 0 on C(F5)", 10, ref, "0 at all six points", [&] {
        std::string s;
        for (const auto& p : c.points) s += p.name + ":" + std::to_string(p.ord_omega) + "(lead " + p.leading + ") ";
        return Outcome{c.ords_zero && c.points.size() == 6, s, {}};
    });
    R.run("conclusion", 10, ref, "|C(Q)| = 6", [&] { return Outcome{c.ok, c.conclusion, {}}; });
    return R.take();
}

}  // namespace

std::vector<CheckRecord> run_one(const std::string& suite, const RunConfig& c) {
    if (suite == "families") return families_suite(c);
    if (suite == "local") return local_suite(c);
    if (suite == "count") return count_suite(c);
    if (suite == "descent") return descent_suite(c);
    if (suite == "chabauty") return chabauty_suite(c);
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace exc7::report
