#pragma once
// p-adic integers and the local field k_pi = Q_7(zeta_7), pi = zeta_7 - 1.
//
// Elements of the ring of integers Z_7[pi] are stored as c0 + c1 pi + ... + c5 pi^5
// with ci in Z/7^M, reduced by the Eisenstein relation
//   pi^6 + 7 pi^5 + 21 pi^4 + 35 pi^3 + 35 pi^2 + 21 pi + 7 = 0,
// which is ((1+pi)^7 - 1)/pi = 0, so zeta_7 = 1 + pi holds exactly.
// Each element carries an absolute precision in pi-units: it is known modulo pi^prec.

#include "exc7/integer.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace exc7::padic {

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoSeventhRoot : std::domain_error {
    using std::domain_error::domain_error;
};

// Element of Z_p known modulo p^N.
class PadicInteger {
public:
    PadicInteger(long p, long N, const Integer& value);
    // Rational with denominator prime to p.
    static PadicInteger from_rational(long p, long N, const Rational& q);

    long prime() const { return p_; }
    long precision() const { return N_; }
    const Integer& residue() const { return r_; }
    // nullopt when the element is zero to the known precision
    std::optional<long> valuation() const;
    std::vector<long> digits() const;  // base-p digits, least significant first, length N
    std::string str() const;

    PadicInteger operator+(const PadicInteger& o) const;
    PadicInteger operator-(const PadicInteger& o) const;
    PadicInteger operator*(const PadicInteger& o) const;
    PadicInteger operator-() const;
    bool operator==(const PadicInteger& o) const;  // equal modulo the smaller precision

private:
    long p_, N_;
    Integer r_;
};

class LocalField;
using LocalFieldPtr = std::shared_ptr<const LocalField>;

class LocalElement {
public:
    LocalElement() = default;
    LocalElement(LocalFieldPtr K, std::array<Integer, 6> c, long prec);

    const LocalFieldPtr& field() const { return K_; }
    const std::array<Integer, 6>& coeffs() const { return c_; }
    long precision() const { return prec_; }
    LocalElement with_precision(long prec) const;  // can only lower

    // v(x) in pi-units; nullopt if x is zero to the known precision
    std::optional<long> valuation() const;
    bool is_zero() const { return !valuation().has_value(); }

    LocalElement operator+(const LocalElement& o) const;
    LocalElement operator-(const LocalElement& o) const;
    LocalElement operator*(const LocalElement& o) const;
    LocalElement operator-() const;
    LocalElement pow(long e) const;  // negative exponents need a unit
    // Inverse of a unit (v = 0); throws std::domain_error for non-units.
    LocalElement inverse() const;
    // Exact division by pi; requires v >= 1.  Loses one pi-digit of precision.
    LocalElement div_pi() const;
    LocalElement div_pi_pow(long k) const;

    // Congruent modulo pi^min(prec, prec of o).
    bool congruent(const LocalElement& o) const;
    // Same congruence, but only modulo pi^n.
    bool congruent(const LocalElement& o, long n) const;
    // Expansion sum d_i pi^i with d_i in {0..6}, i < count.
    std::vector<int> pi_digits(long count) const;
    std::string str(long count = 12) const;

private:
    LocalFieldPtr K_;
    std::array<Integer, 6> c_;
    long prec_ = 0;
};

class LocalField : public std::enable_shared_from_this<LocalField> {
public:
    static constexpr long kMinPrecision = 20;
    static constexpr long kDefaultPrecision = 120;

    // Working precision in pi-digits; below 20 is rejected.
    static LocalFieldPtr make(long precision = kDefaultPrecision);

    long precision() const { return N_; }
    long coeff_digits() const { return M_; }
    const Integer& coeff_modulus() const { return mod_; }
    // Eisenstein polynomial coefficients, lowest degree first, monic degree 6.
    static std::vector<long> eisenstein();

    LocalElement zero() const;
    LocalElement one() const;
    LocalElement from_int(const Integer& n) const;
    // Rational with 7-integral value.
    LocalElement from_rational(const Rational& q) const;
    LocalElement pi() const;
    LocalElement zeta() const;  // 1 + pi
    LocalElement from_pi_digits(const std::vector<long>& digits) const;
    // Teichmuller representative of a in F_7^x: the (6th root of unity) omega with omega = a mod 7.
    LocalElement teichmuller(long a) const;
    // 7 = pi^6 * seven_unit()
    LocalElement seven_unit() const;
    // (1 + pi^m)^(-1) for m = 1..7, cached
    LocalElement level_inverse(int m) const;

    void reduce(std::array<Integer, 11>& wide, std::array<Integer, 6>& out) const;
    void normalize(std::array<Integer, 6>& c) const;

private:
    LocalField(long N);
    long N_, M_;
    Integer mod_;
    std::array<Integer, 6> seven_unit_;
    std::array<std::array<Integer, 6>, 8> level_inv_;
};

// Class in k_pi^x / (k_pi^x)^7 in the basis {pi, 1+pi, ..., 1+pi^7}.
using UnitClassVector = std::array<uint32_t, 8>;

UnitClassVector unit_class_decompose(const LocalElement& u);
// Class of n/d for nonzero n, d.
UnitClassVector quotient_class(const LocalElement& n, const LocalElement& d);
UnitClassVector class_add(const UnitClassVector& a, const UnitClassVector& b);
UnitClassVector class_sub(const UnitClassVector& a, const UnitClassVector& b);

// Newton iteration for y^7 = c from the given seed.  The seed must lie in the certified
// basin v(seed^7 - c) > 2 v(7 seed^6); otherwise PrecisionError.  The returned element
// carries its guaranteed precision.
LocalElement seventh_root(const LocalElement& c, const LocalElement& seed);
// Finds a seed by scanning residues level by level, then runs Newton.
// Throws NoSeventhRoot when c is not a 7th power.
LocalElement seventh_root(const LocalElement& c);

// The plane model y^7 = f(x) with f = f1 f2^6.
LocalElement f_of_x(const LocalElement& x);
struct LocalPoint {
    LocalElement x, y;
};
// Throws NoSeventhRoot when f(x) is not a 7th power.
LocalPoint lift_point_on_X(const LocalElement& x);

// sigma_a: zeta -> zeta^a, i.e. pi -> (1+pi)^a - 1, a in 1..6.
LocalElement galois_apply(long a, const LocalElement& x);

struct CjReport {
    long j = 0;
    long reduced_j = 0;  // representative in {1, 2, 3}
    std::string method;   // "scan mod 343" or "valuation"
    // (equation index, v, w) solutions mod 7^3 found by the scan
    std::vector<std::array<long, 3>> solutions;
    long max_ord_f = 0;  // max ord_7 of f1(v), f2(v) over v mod 7^3, capped at 3
    bool empty = false;
    std::string detail;
};
CjReport local_solvability_Cj(long j);

}  // namespace exc7::padic
