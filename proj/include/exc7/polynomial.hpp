#pragma once
// Dense univariate polynomials over a generic coefficient ring.
// Coefficients are stored lowest degree first; a zero prototype carries
// whatever context the coefficient type needs (prime, modulus).

#include "exc7/field.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

namespace exc7 {

template <class F>
class Polynomial {
public:
    using Traits = FieldTraits<F>;

    Polynomial() : zero_(F{}) {}
    explicit Polynomial(const F& zero_proto) : zero_(Traits::zero(zero_proto)) {}
    Polynomial(std::vector<F> c, const F& zero_proto) : c_(std::move(c)), zero_(Traits::zero(zero_proto)) {
        trim();
    }
    // Convenience for integer literals lowest degree first.
    static Polynomial from_ints(const std::vector<long>& c, const F& like) {
        std::vector<F> v;
        for (long x : c) v.push_back(Traits::from_int(x, like));
        return Polynomial(v, like);
    }
    static Polynomial constant(const F& a) { return Polynomial(std::vector<F>{a}, a); }
    static Polynomial monomial(const F& a, std::size_t k) {
        std::vector<F> v(k + 1, Traits::zero(a));
        v[k] = a;
        return Polynomial(v, a);
    }
    static Polynomial x(const F& like) { return monomial(Traits::one(like), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const F& zero_elem() const { return zero_; }
    F one_elem() const { return Traits::one(zero_); }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    F lc() const { return c_.empty() ? zero_ : c_.back(); }
    const std::vector<F>& coeffs() const { return c_; }
    void set_coeff(std::size_t i, const F& a) {
        if (i >= c_.size()) c_.resize(i + 1, zero_);
        c_[i] = a;
        trim();
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<F> r(std::max(c_.size(), o.c_.size()), zero_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Polynomial(r, zero_);
    }
    Polynomial operator-(const Polynomial& o) const {
        std::vector<F> r(std::max(c_.size(), o.c_.size()), zero_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return Polynomial(r, zero_);
    }
    Polynomial operator-() const {
        std::vector<F> r;
        for (const auto& a : c_) r.push_back(zero_ - a);
        return Polynomial(r, zero_);
    }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial(zero_);
        std::vector<F> r(c_.size() + o.c_.size() - 1, zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (Traits::is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return Polynomial(r, zero_);
    }
    Polynomial scale(const F& a) const {
        std::vector<F> r;
        for (const auto& b : c_) r.push_back(b * a);
        return Polynomial(r, zero_);
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Division with remainder; the divisor's leading coefficient must be invertible.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Polynomial r = a;
        int db = b.degree();
        if (a.degree() < db) return {Polynomial(a.zero_), r};
        F inv = Traits::inv(b.lc());
        std::vector<F> q(a.degree() - db + 1, a.zero_);
        std::vector<F> rc = r.c_;
        for (int k = a.degree() - db; k >= 0; --k) {
            F t = rc[k + db] * inv;
            q[k] = t;
            if (Traits::is_zero(t)) continue;
            for (int i = 0; i <= db; ++i) rc[k + i] = rc[k + i] - t * b.c_[i];
        }
        rc.resize(db);
        return {Polynomial(q, a.zero_), Polynomial(rc, a.zero_)};
    }
    Polynomial operator/(const Polynomial& o) const { return divmod(*this, o).first; }
    Polynomial operator%(const Polynomial& o) const { return divmod(*this, o).second; }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scale(Traits::inv(lc()));
    }

    F eval(const F& x) const {
        F r = zero_;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }
    // Horner evaluation in another ring G given a coefficient embedding.
    template <class G, class Embed>
    G eval_in(const G& x, Embed embed) const {
        G r = x - x;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + embed(c_[i]);
        return r;
    }
    Polynomial compose(const Polynomial& inner) const {
        Polynomial r(zero_);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * inner + constant(c_[i]);
        return r;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial(zero_);
        std::vector<F> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Traits::from_int(static_cast<long>(i), zero_));
        return Polynomial(r, zero_);
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(one_elem()), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    static Polynomial from_roots(const std::vector<F>& roots, const F& like) {
        Polynomial r = constant(Traits::one(like));
        for (const auto& a : roots) r = r * Polynomial(std::vector<F>{Traits::zero(like) - a, Traits::one(like)}, like);
        return r;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (Traits::is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << Traits::str(c_[i]) << ")";
            if (i > 0) os << "*" << var << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
    F zero_;
};

template <class F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic (or zero when both inputs are zero).
template <class F>
std::tuple<Polynomial<F>, Polynomial<F>, Polynomial<F>> poly_xgcd(const Polynomial<F>& a, const Polynomial<F>& b) {
    using P = Polynomial<F>;
    F z = a.zero_elem();
    P r0 = a, r1 = b;
    P s0 = P::constant(a.one_elem()), s1(z);
    P t0(z), t1 = P::constant(a.one_elem());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        P s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        P t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = FieldTraits<F>::inv(r0.lc());
    return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

// Res(f, g) = lc(f)^deg g * prod over roots a of f of g(a).
template <class F>
F resultant(const Polynomial<F>& f, const Polynomial<F>& g) {
    using T = FieldTraits<F>;
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("resultant: both polynomials are zero");
    if (f.is_zero() || g.is_zero()) return f.zero_elem();
    int m = f.degree(), n = g.degree();
    if (m == 0) return field_pow(f.lc(), static_cast<long>(n));
    if (n == 0) return field_pow(g.lc(), static_cast<long>(m));
    Polynomial<F> r = f % g;
    if (r.is_zero()) return f.zero_elem();
    F sign = ((m * n) % 2 == 0) ? T::one(f.zero_elem()) : f.zero_elem() - T::one(f.zero_elem());
    return sign * field_pow(g.lc(), static_cast<long>(m - r.degree())) * resultant(g, r);
}

template <class F>
F discriminant(const Polynomial<F>& f) {
    using T = FieldTraits<F>;
    int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree < 1");
    F r = resultant(f, f.derivative()) * T::inv(f.lc());
    long e = static_cast<long>(n) * (n - 1) / 2;
    return (e % 2 == 0) ? r : f.zero_elem() - r;
}

// Polynomials form a ring; inv only succeeds on nonzero constants.
template <class F>
struct FieldTraits<Polynomial<F>> {
    using P = Polynomial<F>;
    static P zero(const P& like) { return P(like.zero_elem()); }
    static P one(const P& like) { return P::constant(like.one_elem()); }
    static P from_int(long n, const P& like) { return P::constant(FieldTraits<F>::from_int(n, like.zero_elem())); }
    static P from_integer(const Integer& n, const P& like) {
        return P::constant(FieldTraits<F>::from_integer(n, like.zero_elem()));
    }
    static bool is_zero(const P& a) { return a.is_zero(); }
    static P inv(const P& a) {
        if (a.degree() != 0) throw std::domain_error("polynomial is not a unit");
        return P::constant(FieldTraits<F>::inv(a.coeff(0)));
    }
    static std::string str(const P& a) { return a.str("v"); }
};

using QPoly = Polynomial<Rational>;

inline QPoly qpoly(const std::vector<Rational>& c) { return QPoly(c, Rational(0)); }
inline QPoly qpoly_ints(const std::vector<long>& c) { return QPoly::from_ints(c, Rational(0)); }

}  // namespace exc7
