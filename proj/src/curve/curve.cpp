#include "exc7/curve.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace exc7::curve {

namespace {

uint32_t inv(const FastField& F, uint32_t a) {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    return F.exp(F.q() - 1 - F.log(a));
}

uint32_t pw(const FastField& F, uint32_t a, unsigned e) {
    uint32_t r = F.from_int(1);
    for (unsigned i = 0; i < e; ++i) r = F.mul(r, a);
    return r;
}

// homogeneous cubic c0 u^3 + c1 v u^2 + c2 v^2 u + c3 v^3 for coefficient list (c0..c3)
uint32_t cubic(const FastField& F, const std::array<long, 4>& c, uint32_t v, uint32_t u) {
    uint32_t r = 0;
    for (int i = 0; i < 4; ++i) r = F.add(r, F.mul(F.from_int(c[i]), F.mul(pw(F, v, i), pw(F, u, 3 - i))));
    return r;
}

constexpr std::array<long, 4> kF1{1, -1, -2, 1};  // v^3 - 2v^2 - v + 1
constexpr std::array<long, 4> kF2{1, -2, -1, 1};  // v^3 - v^2 - 2v + 1

Rational rcubic(const std::array<long, 4>& c, const QP1& v) {
    // value of the homogeneous cubic at (v:1) or (1:0)
    if (!v) return c[3];
    Rational r = 0;
    for (int i = 4; i-- > 0;) r = r * *v + c[i];
    return r;
}

}  // namespace

std::pair<uint32_t, uint32_t> normalize_p1(const FastField& F, uint32_t a, uint32_t b) {
    if (a != 0) return {F.from_int(1), F.mul(b, inv(F, a))};
    if (b == 0) throw std::invalid_argument("normalize_p1: (0:0)");
    return {0, F.from_int(1)};
}

CPoint make_point(const FastField& F, uint32_t v, uint32_t u, uint32_t w, uint32_t z) {
    auto [a, b] = normalize_p1(F, v, u);
    auto [c, d] = normalize_p1(F, w, z);
    return {a, b, c, d};
}

std::optional<uint32_t> affine_v(const FastField& F, const CPoint& P) {
    if (P.u == 0) return std::nullopt;
    return F.mul(P.v, inv(F, P.u));
}

std::optional<uint32_t> affine_w(const FastField& F, const CPoint& P) {
    if (P.z == 0) return std::nullopt;
    return F.mul(P.w, inv(F, P.z));
}

std::string point_str(const FastField& F, const CPoint& P) {
    auto s = [](std::optional<uint32_t> x) { return x ? std::to_string(*x) : std::string("inf"); };
    return "(" + s(affine_v(F, P)) + ", " + s(affine_w(F, P)) + ")";
}

bool on_curve(const FastField& F, const CPoint& P) {
    uint32_t lhs = F.mul(pw(F, P.w, 7), cubic(F, kF2, P.v, P.u));
    uint32_t rhs = F.mul(pw(F, P.z, 7), cubic(F, kF1, P.v, P.u));
    return lhs == rhs;
}

std::vector<CPoint> enumerate_points(const FastField& F) {
    if (F.q() > kMaxEnumerate) throw std::invalid_argument("enumerate_points: field too large to list");
    if (F.p() == 7) throw std::invalid_argument("enumerate_points: characteristic 7 is bad reduction");
    const uint64_t n = F.q() - 1;
    const bool split = n % 7 == 0;
    uint64_t s = 0;
    if (!split)
        while ((7 * s) % n != 1 % n) ++s;
    const uint32_t one = F.from_int(1);
    std::vector<CPoint> out;
    auto add_fibre = [&](uint32_t v, uint32_t u) {
        uint32_t a = cubic(F, kF1, v, u), b = cubic(F, kF2, v, u);
        if (a == 0) {
            out.push_back(make_point(F, v, u, 0, one));
            return;
        }
        if (b == 0) {
            out.push_back(make_point(F, v, u, one, 0));
            return;
        }
        uint64_t L = (F.log(a) + n - F.log(b)) % n;
        if (!split) {
            out.push_back(make_point(F, v, u, F.exp(L * s % n), one));
        } else if (L % 7 == 0) {
            for (uint64_t j = 0; j < 7; ++j) out.push_back(make_point(F, v, u, F.exp(L / 7 + j * (n / 7)), one));
        }
    };
    for (uint32_t v = 0; v < F.q(); ++v) add_fibre(v, one);
    add_fibre(one, 0);
    return out;
}

CPoint sigma(const FastField& F, const CPoint& P) { return make_point(F, P.u, P.v, P.z, P.w); }

CPoint tau(const FastField& F, const CPoint& P) { return make_point(F, F.sub(P.u, P.v), P.u, P.z, P.w); }

// ------------------------------------------------------------------ rational points

bool on_curve(const QCPoint& P) {
    // w^7 F2 = z^7 F1 with w = (w:1) or (1:0)
    if (!P.w) return rcubic(kF2, P.v) == 0;
    Rational w7 = 1;
    for (int i = 0; i < 7; ++i) w7 *= *P.w;
    return w7 * rcubic(kF2, P.v) == rcubic(kF1, P.v);
}

std::vector<QCPoint> known_rational_points() {
    auto r = [](long n, long d = 1) { return QP1(Rational(n, d)); };
    return {
        {"P0", r(0), r(1)},  {"P1", r(1), r(1)},     {"Pinf", std::nullopt, r(1)},
        {"P2", r(2), r(-1)}, {"P3", r(1, 2), r(-1)}, {"P4", r(-1), r(-1)},
    };
}

CPoint reduce(const FastField& F, const QCPoint& P) {
    if (F.k() != 1) throw std::invalid_argument("reduce: prime fields only");
    const Integer p(std::to_string(F.p()));
    auto red = [&](const QP1& x) -> std::pair<uint32_t, uint32_t> {
        if (!x) return {1, 0};
        Integer n = x->get_num() % p, d = x->get_den() % p;
        if (n < 0) n += p;
        return {static_cast<uint32_t>(n.get_ui()), static_cast<uint32_t>(d.get_ui())};
    };
    auto [v, u] = red(P.v);
    auto [w, z] = red(P.w);
    return make_point(F, v, u, w, z);
}

// ------------------------------------------------------------------ algebraic points

AlgebraicPointCheck verify_algebraic_point(const AlgebraicPointSpec& s) {
    auto toq = [](const std::vector<Integer>& c) {
        std::vector<Rational> r(c.begin(), c.end());
        return QPoly(r, Rational(0));
    };
    if (s.minpoly.size() < 2) throw std::invalid_argument("verify_algebraic_point: minimal polynomial of degree < 1");
    if (s.x_den == 0) throw std::invalid_argument("verify_algebraic_point: zero denominator");
    auto ring = QElem::make_ring(toq(s.minpoly));
    QElem t = QElem::gen(ring);
    QElem x = QElem(ring, toq(s.x_num)) * QElem::scalar(ring, Rational(1) / Rational(s.x_den));
    auto cub = [&](const std::array<long, 4>& c) {
        QElem r = QElem::from_int(ring, 0);
        for (int i = 4; i-- > 0;) r = r * x + QElem::from_int(ring, c[i]);
        return r;
    };
    QElem w7 = QElem::from_int(ring, 1);
    for (int i = 0; i < 7; ++i) w7 = w7 * t;
    QElem res = w7 * cub(kF2) - cub(kF1);
    return {res.is_zero(), res.rep()};
}

std::vector<AlgebraicPointSpec> parse_algebraic_points(std::istream& in) {
    std::vector<AlgebraicPointSpec> out;
    std::string line;
    auto ints = [](std::istringstream& ss) {
        std::vector<Integer> v;
        std::string tok;
        while (ss >> tok) v.emplace_back(tok);
        return v;
    };
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key) || key == "version") continue;
        if (key == "point") {
            out.emplace_back();
            ss >> out.back().name;
            continue;
        }
        if (out.empty()) throw std::runtime_error("algebraic points: '" + key + "' before any point");
        auto& p = out.back();
        if (key == "minpoly") p.minpoly = ints(ss);
        else if (key == "x") p.x_num = ints(ss);
        else if (key == "den") {
            auto d = ints(ss);
            if (d.size() != 1) throw std::runtime_error("algebraic points: den takes one integer");
            p.x_den = d[0];
        } else throw std::runtime_error("algebraic points: unknown key '" + key + "'");
    }
    for (const auto& p : out)
        if (p.minpoly.empty() || p.x_num.empty()) throw std::runtime_error("algebraic points: incomplete entry " + p.name);
    return out;
}

std::vector<AlgebraicPointSpec> load_algebraic_points(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse_algebraic_points(f);
}

// ------------------------------------------------------------------ divisors

const std::map<std::string, long>& prime_degrees() {
    static const std::map<std::string, long> d{
        {"D0", 7}, {"D1", 7}, {"Dinf", 7}, {"G1", 3}, {"G2", 3},  //
        {"P0", 1}, {"P1", 1}, {"Pinf", 1}, {"P2", 1}, {"P3", 1}, {"P4", 1},
        {"Q1", 8}, {"Q2", 16}, {"Q3", 8}, {"Q4", 16},
    };
    return d;
}

CDivisor CDivisor::of(const std::string& name, long c) {
    if (!prime_degrees().count(name)) throw std::invalid_argument("unknown prime divisor " + name);
    CDivisor d;
    if (c != 0) d.terms[name] = c;
    return d;
}

CDivisor CDivisor::operator+(const CDivisor& o) const {
    CDivisor r = *this;
    for (const auto& [k, c] : o.terms)
        if ((r.terms[k] += c) == 0) r.terms.erase(k);
    return r;
}

CDivisor CDivisor::operator-(const CDivisor& o) const { return *this + o * -1; }

CDivisor CDivisor::operator*(long k) const {
    CDivisor r;
    if (k == 0) return r;
    for (const auto& [n, c] : terms) r.terms[n] = c * k;
    return r;
}

long CDivisor::degree() const {
    long d = 0;
    for (const auto& [n, c] : terms) d += c * prime_degrees().at(n);
    return d;
}

bool CDivisor::effective() const {
    for (const auto& [n, c] : terms)
        if (c < 0) return false;
    return true;
}

std::string CDivisor::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [n, c] : terms) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        long a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a);
        s += n;
    }
    return s;
}

CDivisor div_v() { return CDivisor::of("D0") - CDivisor::of("Dinf"); }
CDivisor div_w() { return CDivisor::of("G1") - CDivisor::of("G2"); }
CDivisor div_f2() { return CDivisor::of("G2", 7) - CDivisor::of("Dinf", 3); }
CDivisor div_dv() { return CDivisor::of("G1", 6) + CDivisor::of("G2", 6) - CDivisor::of("Dinf", 2); }

CDivisor differential_divisor(int i, int j) {
    if (i < 0 || i > 1 || j < 0 || j > 5) throw std::out_of_range("differential_divisor: need 0 <= i <= 1, 0 <= j <= 5");
    // v^i w^(j-6) / f2(v) dv
    return div_v() * i + div_w() * (j - 6) - div_f2() + div_dv();
}

std::vector<NamedDivisor> parse_divisors(std::istream& in) {
    std::vector<NamedDivisor> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        NamedDivisor d;
        if (!(ss >> d.kind) || d.kind == "version") continue;
        if (d.kind != "B" && d.kind != "rel") throw std::runtime_error("divisors: unknown kind '" + d.kind + "'");
        if (!(ss >> d.name)) throw std::runtime_error("divisors: missing name");
        long c;
        std::string p;
        while (ss >> c) {
            if (!(ss >> p)) throw std::runtime_error("divisors: dangling coefficient in " + d.name);
            d.divisor = d.divisor + CDivisor::of(p, c);
        }
        if (!ss.eof()) throw std::runtime_error("divisors: bad coefficient in " + d.name);
        out.push_back(d);
    }
    return out;
}

std::vector<NamedDivisor> load_divisors(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse_divisors(f);
}

}  // namespace exc7::curve
