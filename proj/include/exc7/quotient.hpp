#pragma once
// Elements of F[x]/(m) for a monic modulus m.

#include "exc7/polynomial.hpp"

#include <memory>
#include <stdexcept>

namespace exc7 {

template <class F>
struct QuotientRing {
    Polynomial<F> modulus;
    explicit QuotientRing(Polynomial<F> m) : modulus(std::move(m)) {
        if (modulus.degree() < 1) throw std::invalid_argument("quotient modulus must have degree >= 1");
        if (!(modulus.lc() == FieldTraits<F>::one(modulus.zero_elem())))
            throw std::invalid_argument("quotient modulus must be monic");
    }
    int degree() const { return modulus.degree(); }
};

// Raised by inverse() when gcd(rep, modulus) is nontrivial; carries that gcd.
template <class F>
struct NonInvertible : std::domain_error {
    Polynomial<F> factor;
    explicit NonInvertible(Polynomial<F> g) : std::domain_error("element is not invertible modulo the modulus"), factor(std::move(g)) {}
};

template <class F>
class QuotientElement {
public:
    using Ring = QuotientRing<F>;
    using RingPtr = std::shared_ptr<const Ring>;

    QuotientElement() = default;
    QuotientElement(RingPtr ring, const Polynomial<F>& rep) : ring_(std::move(ring)), rep_(rep % ring_->modulus) {}

    static RingPtr make_ring(const Polynomial<F>& m) { return std::make_shared<const Ring>(m); }
    static QuotientElement gen(const RingPtr& r) { return QuotientElement(r, Polynomial<F>::x(r->modulus.zero_elem())); }
    static QuotientElement scalar(const RingPtr& r, const F& a) { return QuotientElement(r, Polynomial<F>::constant(a)); }
    static QuotientElement from_int(const RingPtr& r, long n) {
        return scalar(r, FieldTraits<F>::from_int(n, r->modulus.zero_elem()));
    }

    const RingPtr& ring() const { return ring_; }
    const Polynomial<F>& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    // True when the representative is a constant (element of the base field).
    bool is_scalar() const { return rep_.degree() <= 0; }
    F scalar_value() const { return rep_.coeff(0); }

    QuotientElement operator+(const QuotientElement& o) const { return raw(rep_ + o.rep_); }
    QuotientElement operator-(const QuotientElement& o) const { return raw(rep_ - o.rep_); }
    QuotientElement operator-() const { return raw(-rep_); }
    QuotientElement operator*(const QuotientElement& o) const { return QuotientElement(ring_, rep_ * o.rep_); }
    QuotientElement& operator+=(const QuotientElement& o) { return *this = *this + o; }
    QuotientElement& operator-=(const QuotientElement& o) { return *this = *this - o; }
    QuotientElement& operator*=(const QuotientElement& o) { return *this = *this * o; }
    QuotientElement inverse() const {
        auto [g, s, t] = poly_xgcd(rep_, ring_->modulus);
        if (g.degree() != 0) throw NonInvertible<F>(g);
        return QuotientElement(ring_, s);
    }
    QuotientElement operator/(const QuotientElement& o) const { return *this * o.inverse(); }
    bool operator==(const QuotientElement& o) const { return rep_ == o.rep_; }
    bool operator!=(const QuotientElement& o) const { return !(rep_ == o.rep_); }

private:
    QuotientElement raw(const Polynomial<F>& p) const {
        QuotientElement e;
        e.ring_ = ring_;
        e.rep_ = p;
        return e;
    }
    RingPtr ring_;
    Polynomial<F> rep_;
};

template <class F>
struct FieldTraits<QuotientElement<F>> {
    using E = QuotientElement<F>;
    static E zero(const E& like) { return E(like.ring(), Polynomial<F>(like.ring()->modulus.zero_elem())); }
    static E one(const E& like) { return E::from_int(like.ring(), 1); }
    static E from_int(long n, const E& like) { return E::from_int(like.ring(), n); }
    static E from_integer(const Integer& n, const E& like) {
        return E::scalar(like.ring(), FieldTraits<F>::from_integer(n, like.ring()->modulus.zero_elem()));
    }
    static bool is_zero(const E& a) { return a.is_zero(); }
    static E inv(const E& a) { return a.inverse(); }
    static std::string str(const E& a) { return "[" + a.rep().str("g") + "]"; }
};

using QElem = QuotientElement<Rational>;

}  // namespace exc7
