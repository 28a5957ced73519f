#include "exc7/descent.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace exc7::descent {

using padic::LocalField;

namespace {

UnitClassVector scale_class(const UnitClassVector& c, uint32_t k) {
    UnitClassVector r{};
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (c[i] * k) % 7;
    return r;
}

}  // namespace

LocalElement localize(const Setup& S, const QElem& a) {
    LocalElement z = S.K->zeta(), acc = S.K->zero();
    const QPoly& p = a.rep();
    for (int i = p.degree(); i >= 0; --i) acc = acc * z + S.K->from_rational(p.coeff(i));
    return acc;
}

Setup cyclotomic_setup(long precision) {
    Setup S;
    S.ring = QElem::make_ring(QPoly::from_ints({1, 1, 1, 1, 1, 1, 1}, Rational(0)));
    auto k = [&](long n) { return QElem::from_int(S.ring, n); };
    S.zeta = QElem::gen(S.ring);
    S.pi = S.zeta - k(1);
    std::array<QElem, 7> zp;
    zp[0] = k(1);
    for (int i = 1; i < 7; ++i) zp[i] = zp[i - 1] * S.zeta;
    S.phi_ok = (zp[6] * S.zeta == k(1)) && !(S.zeta == k(1));
    for (int i = 1; i <= 3; ++i) {
        S.alpha[i - 1] = k(1) + zp[i] + zp[7 - i];
        S.alpha[2 + i] = k(0) - zp[i] - zp[7 - i];
    }
    // alpha_1..3 are the roots of x^3 - 2x^2 - x + 1, alpha_4..6 of x^3 - x^2 - 2x + 1
    auto horner = [&](const std::vector<long>& c, const QElem& x) {
        QElem acc = k(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + k(*it);
        return acc;
    };
    S.alpha_ok = true;
    for (std::size_t i = 0; i < kSlots; ++i) {
        const std::vector<long> f = i < 3 ? std::vector<long>{1, -1, -2, 1} : std::vector<long>{1, -2, -1, 1};
        if (!horner(f, S.alpha[i]).is_zero()) S.alpha_ok = false;
        for (std::size_t j = 0; j < i; ++j)
            if (S.alpha[i] == S.alpha[j]) S.alpha_ok = false;
    }
    S.global_basis = {S.zeta, k(1) + S.zeta, k(1) + S.zeta + zp[2], S.pi};
    S.K = LocalField::make(precision);
    for (std::size_t i = 0; i < kSlots; ++i) S.alpha_local[i] = localize(S, S.alpha[i]);
    for (std::size_t j = 0; j < kGlobalGens; ++j)
        S.basis_local_classes[j] = padic::unit_class_decompose(localize(S, S.global_basis[j]));
    return S;
}

std::array<std::size_t, kSlots> slot_permutation(long a) {
    if (a < 1 || a > 6) throw std::invalid_argument("slot_permutation: a must be in 1..6");
    std::array<std::size_t, kSlots> perm{};
    for (long i = 1; i <= 3; ++i) {
        long j = (a * i) % 7;
        long r = std::min(j, 7 - j);
        perm[i - 1] = r - 1;
        perm[2 + i] = 2 + r;
    }
    return perm;
}

LocalV xT_class_local(const Setup& S, const LocalElement& n, const LocalElement& d) {
    auto cd = padic::unit_class_decompose(d);
    LocalV v;
    for (std::size_t i = 0; i < kSlots; ++i) {
        LocalElement num = n - S.alpha_local[i] * d;
        if (num.is_zero()) throw std::domain_error("xT_class: x equals a root alpha_i");
        v.slots[i] = padic::class_sub(padic::unit_class_decompose(num), cd);
    }
    return v;
}

LocalV xT_class_local(const Setup& S, const LocalElement& x) { return xT_class_local(S, x, S.K->one()); }

std::array<uint32_t, kGlobalGens> global_class(const Setup& S, const QElem& a) {
    auto target = padic::unit_class_decompose(localize(S, a));
    // the four local classes are independent, so brute force over F_7^4 is exact
    std::array<uint32_t, kGlobalGens> c{};
    std::optional<std::array<uint32_t, kGlobalGens>> found;
    for (uint32_t code = 0; code < 7 * 7 * 7 * 7; ++code) {
        uint32_t m = code;
        for (auto& x : c) {
            x = m % 7;
            m /= 7;
        }
        UnitClassVector s{};
        for (std::size_t j = 0; j < kGlobalGens; ++j) s = padic::class_add(s, scale_class(S.basis_local_classes[j], c[j]));
        if (s == target) {
            if (found) throw std::logic_error("global_class: local classes of the basis are dependent");
            found = c;
        }
    }
    if (!found) throw std::domain_error("global_class: element is not a pi-unit");
    return *found;
}

GlobalV xT_class_global(const Setup& S, const Rational& x) {
    GlobalV v;
    QElem X = QElem::scalar(S.ring, x);
    for (std::size_t i = 0; i < kSlots; ++i) {
        QElem e = X - S.alpha[i];
        if (e.is_zero()) throw std::domain_error("xT_class: x equals a root alpha_i");
        v.slots[i] = global_class(S, e);
    }
    return v;
}

bool on_X(const LocalElement& n, const LocalElement& d) {
    const auto& K = n.field();
    LocalElement n2 = n * n, d2 = d * d;
    LocalElement F1 = n2 * n - K->from_int(2) * n2 * d - n * d2 + d2 * d;
    LocalElement F2 = n2 * n - n2 * d - K->from_int(2) * n * d2 + d2 * d;
    if (F1.is_zero() || F2.is_zero()) return false;
    auto c = padic::class_add(padic::unit_class_decompose(F1), scale_class(padic::unit_class_decompose(F2), 6));
    return c == UnitClassVector{};
}

Mat localization_matrix(const Setup& S) {
    Mat L(kLocalDim, Vec(kGlobalDim, 0));
    for (std::size_t col = 0; col < kGlobalDim; ++col) {
        std::size_t slot = 1 + col / kGlobalGens, j = col % kGlobalGens;
        for (std::size_t t = 0; t < kLocalGens; ++t)
            L[(slot - 1) * kLocalGens + t][col] = S.basis_local_classes[j][t];
    }
    return L;
}

LocalV localize(const Setup& S, const GlobalV& e) {
    LocalV r;
    for (std::size_t s = 0; s < kSlots; ++s) {
        UnitClassVector c{};
        for (std::size_t j = 0; j < kGlobalGens; ++j) c = padic::class_add(c, scale_class(S.basis_local_classes[j], e.slots[s][j]));
        r.slots[s] = c;
    }
    return r;
}

namespace {
constexpr std::array<uint32_t, kSlots> kNormWeights{1, 1, 1, 6, 6, 6};
}

Mat weighted_norm_matrix() {
    Mat N(kGlobalGens, Vec(kGlobalDim, 0));
    for (std::size_t col = 0; col < kGlobalDim; ++col) {
        std::size_t slot = 1 + col / kGlobalGens, j = col % kGlobalGens;
        N[j][col] = kNormWeights[slot];
    }
    return N;
}

std::array<uint32_t, kGlobalGens> weighted_norm(const GlobalV& e) {
    std::array<uint32_t, kGlobalGens> r{};
    for (std::size_t s = 0; s < kSlots; ++s)
        for (std::size_t j = 0; j < kGlobalGens; ++j) r[j] = (r[j] + kNormWeights[s] * e.slots[s][j]) % 7;
    return r;
}

// ------------------------------------------------------------------ data

std::vector<LocalPointSpec> parse_local_points(std::istream& in) {
    std::vector<LocalPointSpec> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string name, kind;
        if (!(ss >> name)) continue;
        if (name == "version") continue;
        if (!(ss >> kind)) throw std::runtime_error("local points: line " + std::to_string(lineno) + " has no kind");
        LocalPointSpec p;
        p.name = name;
        if (kind == "rational") {
            std::string q;
            ss >> q;
            p.rational = true;
            p.value = Rational(q);
            p.value.canonicalize();
        } else if (kind == "digits") {
            long d;
            while (ss >> d) {
                if (d < 0 || d > 6) throw std::runtime_error("local points: digit out of range on line " + std::to_string(lineno));
                p.digits.push_back(d);
            }
            if (p.digits.empty()) throw std::runtime_error("local points: no digits on line " + std::to_string(lineno));
        } else {
            throw std::runtime_error("local points: unknown kind '" + kind + "'");
        }
        out.push_back(p);
    }
    return out;
}

std::vector<LocalPointSpec> load_local_points(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse_local_points(f);
}

LocalElement materialize(const LocalFieldPtr& K, const LocalPointSpec& p) {
    return p.rational ? K->from_rational(p.value) : K->from_pi_digits(p.digits);
}

// ------------------------------------------------------------------ local image

std::string sigma_str(SigmaChoice c) {
    switch (c) {
        case SigmaChoice::Full: return "S3 x Gal";
        case SigmaChoice::GaloisOnly: return "Gal";
        case SigmaChoice::S3Only: return "S3";
    }
    return "";
}

std::pair<LocalElement, LocalElement> s3_apply(int g, const LocalElement& x) {
    auto one = x.field()->one();
    switch (g) {
        case 0: return {x, one};
        case 1: return {one, one - x};
        case 2: return {x - one, x};
        case 3: return {one - x, one};
        case 4: return {one, x};
        case 5: return {x, x - one};
    }
    throw std::invalid_argument("s3_apply: g must be in 0..5");
}

std::string s3_name(int g) {
    static const char* names[] = {"x", "1/(1-x)", "1-1/x", "1-x", "1/x", "x/(x-1)"};
    if (g < 0 || g > 5) throw std::invalid_argument("s3_name");
    return names[g];
}

LocalImage local_image_subspace(const Setup& S, const std::vector<LocalPointSpec>& pts, SigmaChoice choice) {
    LocalImage img;
    std::vector<long> gal{1};
    std::vector<int> s3{0};
    if (choice != SigmaChoice::S3Only) gal = {1, 2, 3, 4, 5, 6};
    if (choice != SigmaChoice::GaloisOnly) s3 = {0, 1, 2, 3, 4, 5};
    for (const auto& p : pts) {
        LocalElement x = materialize(S.K, p);
        padic::lift_point_on_X(x);  // throws when x is not an x-coordinate
        for (long a : gal) {
            LocalElement y = padic::galois_apply(a, x);
            for (int g : s3) {
                auto [n, d] = s3_apply(g, y);
                if (d.is_zero()) {
                    ++img.skipped;
                    continue;
                }
                if (!on_X(n, d)) throw std::logic_error("local image: " + p.name + " moved off the curve");
                img.vectors.push_back(xT_class_local(S, n, d).coords());
                img.labels.push_back(p.name + " a=" + std::to_string(a) + " g=" + s3_name(g));
            }
        }
    }
    img.space = Subspace::span(img.vectors, kLocalDim, 7);
    return img;
}

SelmerReport selmer_bound_pipeline(const std::vector<LocalPointSpec>& pts, long precision) {
    SelmerReport r;
    r.precision = precision;
    Setup S = cyclotomic_setup(precision);
    LocalImage W = local_image_subspace(S, pts, SigmaChoice::Full);
    r.local_dim = W.space.dim();
    r.local_basis = W.space.basis();
    r.galois_only_dim = local_image_subspace(S, pts, SigmaChoice::GaloisOnly).space.dim();
    r.s3_only_dim = local_image_subspace(S, pts, SigmaChoice::S3Only).space.dim();
    r.loc_matrix = localization_matrix(S);
    r.norm_matrix = weighted_norm_matrix();
    Subspace kerN = Subspace::kernel(r.norm_matrix, kGlobalDim, 7);
    Subspace pre = Subspace::preimage(r.loc_matrix, kGlobalDim, W.space);
    Subspace inter = kerN.intersect(pre);
    r.norm_kernel_dim = kerN.dim();
    r.preimage_dim = pre.dim();
    r.intersection_dim = inter.dim();
    r.rank_O_bound = static_cast<long>(r.intersection_dim) - r.torsion_dim;
    r.rank_Z_bound = r.rank_O_bound;
    r.ok = r.local_dim == 16 && r.intersection_dim == 10;
    return r;
}

}  // namespace exc7::descent
