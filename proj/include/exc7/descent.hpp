#pragma once
// The (x - T) descent for w^7 = f1(x) f2(x)^6 over Q(zeta_7): unit classes of
// x - alpha_i, the weighted norm, localization at pi = zeta - 1, and the linear
// algebra bounding dim J(k)/pi J(k).

#include "exc7/linalg.hpp"
#include "exc7/padic.hpp"
#include "exc7/quotient.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace exc7::descent {

using padic::LocalElement;
using padic::LocalFieldPtr;
using padic::UnitClassVector;

constexpr std::size_t kSlots = 6;
constexpr std::size_t kGlobalGens = 4;  // zeta, 1+zeta, 1+zeta+zeta^2, pi
constexpr std::size_t kLocalGens = 8;   // pi, 1+pi, ..., 1+pi^7
constexpr std::size_t kGlobalDim = kSlots * kGlobalGens - kGlobalGens;  // 20
constexpr std::size_t kLocalDim = kSlots * kLocalGens - kLocalGens;     // 40

// Six slot classes modulo the diagonal. Coordinates are normalized by
// subtracting slot 0 from every slot, so the quotient is slots 1..5 flattened.
template <std::size_t G>
struct VElement {
    std::array<std::array<uint32_t, G>, kSlots> slots{};

    Vec coords() const {
        Vec v;
        for (std::size_t s = 1; s < kSlots; ++s)
            for (std::size_t j = 0; j < G; ++j) v.push_back((slots[s][j] + 7 - slots[0][j]) % 7);
        return v;
    }
    bool operator==(const VElement& o) const { return coords() == o.coords(); }
    VElement operator+(const VElement& o) const {
        VElement r;
        for (std::size_t s = 0; s < kSlots; ++s)
            for (std::size_t j = 0; j < G; ++j) r.slots[s][j] = (slots[s][j] + o.slots[s][j]) % 7;
        return r;
    }
    static VElement diagonal(const std::array<uint32_t, G>& c) {
        VElement r;
        for (auto& s : r.slots) s = c;
        return r;
    }
};

using GlobalV = VElement<kGlobalGens>;
using LocalV = VElement<kLocalGens>;

struct Setup {
    QElem::RingPtr ring;  // Q[z]/(Phi_7)
    QElem zeta, pi;
    std::array<QElem, kSlots> alpha;           // 1+z^i+z^-i (i=1..3), -z^i-z^-i (i=1..3)
    std::array<QElem, kGlobalGens> global_basis;
    LocalFieldPtr K;
    std::array<LocalElement, kSlots> alpha_local;
    std::array<UnitClassVector, kGlobalGens> basis_local_classes;
    bool phi_ok = false, alpha_ok = false;
};

Setup cyclotomic_setup(long precision = padic::LocalField::kDefaultPrecision);

// zeta -> 1 + pi
LocalElement localize(const Setup& S, const QElem& a);
// a -> zeta^k permutation of the alpha slots induced by zeta -> zeta^a
std::array<std::size_t, kSlots> slot_permutation(long a);

// classes of (x - alpha_i); x given as n/d with d != 0
LocalV xT_class_local(const Setup& S, const LocalElement& n, const LocalElement& d);
LocalV xT_class_local(const Setup& S, const LocalElement& x);
// classes of a global element in the basis {zeta, 1+zeta, 1+zeta+zeta^2, pi},
// found by matching local classes (injective on the span)
std::array<uint32_t, kGlobalGens> global_class(const Setup& S, const QElem& a);
GlobalV xT_class_global(const Setup& S, const Rational& x);

// true when f(n/d) is a 7th power, i.e. n/d is an x-coordinate of X(k_pi)
bool on_X(const LocalElement& n, const LocalElement& d);

// localization V(O[1/pi]^x) -> V(k_pi^x) on normalized coordinates (40 x 20)
Mat localization_matrix(const Setup& S);
LocalV localize(const Setup& S, const GlobalV& e);
// N(z) = z1 z2 z3 (z4 z5 z6)^6 on normalized coordinates (4 x 20)
Mat weighted_norm_matrix();
std::array<uint32_t, kGlobalGens> weighted_norm(const GlobalV& e);

// Input x-coordinates: either a rational or pi-adic digits.
struct LocalPointSpec {
    std::string name;
    bool rational = false;
    Rational value;
    std::vector<long> digits;
};
std::vector<LocalPointSpec> parse_local_points(std::istream& in);
std::vector<LocalPointSpec> load_local_points(const std::string& path);
LocalElement materialize(const LocalFieldPtr& K, const LocalPointSpec& p);

// which maps generate the local image
enum class SigmaChoice { Full, GaloisOnly, S3Only };
std::string sigma_str(SigmaChoice c);

struct LocalImage {
    Subspace space{kLocalDim, 7};
    std::vector<std::string> labels;  // "x3 a=2 g=1/(1-x)"
    Mat vectors;
    long skipped = 0;  // images at infinity
};

// the six automorphisms of the x-line preserving X, as (numerator, denominator)
std::pair<LocalElement, LocalElement> s3_apply(int g, const LocalElement& x);
std::string s3_name(int g);

LocalImage local_image_subspace(const Setup& S, const std::vector<LocalPointSpec>& pts,
                                SigmaChoice choice = SigmaChoice::Full);

struct SelmerReport {
    long precision = 0;
    std::size_t local_dim = 0;
    std::size_t norm_kernel_dim = 0;
    std::size_t preimage_dim = 0;
    std::size_t intersection_dim = 0;
    long torsion_dim = 4;  // dim J(k)[pi], consumed as a cited input
    long rank_O_bound = 0, rank_Z_bound = 0;
    std::size_t galois_only_dim = 0, s3_only_dim = 0;
    Mat local_basis, loc_matrix, norm_matrix;
    bool ok = false;
};

SelmerReport selmer_bound_pipeline(const std::vector<LocalPointSpec>& pts, long precision = 120);

}  // namespace exc7::descent
