#pragma once
// Prime-power finite fields F_{p^k} as Fp[x]/(m) with a canonical modulus.

#include "exc7/quotient.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace exc7 {

using FpPoly = Polynomial<Fp>;
using GF = QuotientElement<Fp>;

// Rabin irreducibility test over F_p.
bool is_irreducible(const FpPoly& f);

// Process-wide registry of moduli. For each (p, k) the modulus is the monic
// irreducible of degree k minimizing sum c_i p^i over its lower coefficients.
// Entries are computed once and never change.
class FiniteField {
public:
    static FiniteField get(uint64_t p, unsigned k);

    uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    uint64_t q() const { return q_; }
    const GF::RingPtr& ring() const { return ring_; }
    const FpPoly& modulus() const { return ring_->modulus; }

    GF zero() const;
    GF one() const;
    GF from_int(long n) const;
    // Packed index: element sum d_i x^i <-> sum d_i p^i.
    GF element(uint64_t packed) const;
    uint64_t pack(const GF& a) const;
    std::vector<GF> elements() const;

    // Snapshot of every modulus chosen so far, as (p, k) -> coefficient list.
    static std::map<std::pair<uint64_t, unsigned>, std::vector<uint64_t>> registry_snapshot();

private:
    FiniteField(uint64_t p, unsigned k, GF::RingPtr ring);
    uint64_t p_;
    unsigned k_;
    uint64_t q_;
    GF::RingPtr ring_;
};

// Table-driven F_q for q up to a few million: elements are packed integers,
// multiplication goes through discrete log / exp tables of a fixed generator.
class FastField {
public:
    explicit FastField(const FiniteField& field);

    uint64_t q() const { return q_; }
    uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t from_int(long n) const;
    // log of a nonzero element with respect to the stored generator.
    uint32_t log(uint32_t a) const { return log_[a]; }
    uint32_t exp(uint64_t e) const { return exp_[e % (q_ - 1)]; }
    uint32_t generator() const { return exp_[1]; }

private:
    uint64_t p_, q_;
    unsigned k_;
    std::vector<uint32_t> exp_, log_;
};

}  // namespace exc7
