#pragma once
// Truncated power series c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N).

#include "exc7/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace exc7 {

template <class F>
class PowerSeries {
public:
    using Traits = FieldTraits<F>;

    PowerSeries() : n_(0), zero_(F{}) {}
    PowerSeries(std::vector<F> c, std::size_t order, const F& like) : c_(std::move(c)), n_(order), zero_(Traits::zero(like)) {
        c_.resize(n_, zero_);
    }
    static PowerSeries from_poly(const Polynomial<F>& p, std::size_t order) {
        return PowerSeries(p.coeffs(), order, p.zero_elem());
    }
    static PowerSeries constant(const F& a, std::size_t order) { return PowerSeries({a}, order, a); }
    static PowerSeries t(std::size_t order, const F& like) {
        std::vector<F> c(2, Traits::zero(like));
        c[1] = Traits::one(like);
        return PowerSeries(c, order, like);
    }

    std::size_t order() const { return n_; }
    F coeff(std::size_t i) const { return i < n_ ? c_[i] : zero_; }
    const std::vector<F>& coeffs() const { return c_; }
    const F& zero_elem() const { return zero_; }

    // Index of the first nonzero coefficient, or nullopt if zero to this order.
    std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < n_; ++i)
            if (!Traits::is_zero(c_[i])) return i;
        return std::nullopt;
    }

    PowerSeries truncate(std::size_t order) const {
        return PowerSeries(std::vector<F>(c_.begin(), c_.begin() + std::min(order, n_)), std::min(order, n_), zero_);
    }

    PowerSeries operator+(const PowerSeries& o) const {
        std::size_t n = std::min(n_, o.n_);
        std::vector<F> r(n, zero_);
        for (std::size_t i = 0; i < n; ++i) r[i] = c_[i] + o.c_[i];
        return PowerSeries(r, n, zero_);
    }
    PowerSeries operator-(const PowerSeries& o) const {
        std::size_t n = std::min(n_, o.n_);
        std::vector<F> r(n, zero_);
        for (std::size_t i = 0; i < n; ++i) r[i] = c_[i] - o.c_[i];
        return PowerSeries(r, n, zero_);
    }
    PowerSeries operator-() const {
        std::vector<F> r;
        for (const auto& a : c_) r.push_back(zero_ - a);
        return PowerSeries(r, n_, zero_);
    }
    PowerSeries operator*(const PowerSeries& o) const {
        std::size_t n = std::min(n_, o.n_);
        std::vector<F> r(n, zero_);
        for (std::size_t i = 0; i < n; ++i) {
            if (Traits::is_zero(c_[i])) continue;
            for (std::size_t j = 0; i + j < n; ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return PowerSeries(r, n, zero_);
    }
    PowerSeries scale(const F& a) const {
        std::vector<F> r;
        for (const auto& b : c_) r.push_back(b * a);
        return PowerSeries(r, n_, zero_);
    }

    PowerSeries inverse() const {
        if (n_ == 0) return *this;
        if (Traits::is_zero(c_[0])) throw std::domain_error("power series inverse: zero constant term");
        F inv0 = Traits::inv(c_[0]);
        std::vector<F> r(n_, zero_);
        r[0] = inv0;
        for (std::size_t k = 1; k < n_; ++k) {
            F s = zero_;
            for (std::size_t i = 1; i <= k; ++i) s = s + c_[i] * r[k - i];
            r[k] = zero_ - s * inv0;
        }
        return PowerSeries(r, n_, zero_);
    }
    PowerSeries operator/(const PowerSeries& o) const { return *this * o.inverse(); }

    PowerSeries derivative() const {
        if (n_ == 0) return *this;
        std::vector<F> r;
        for (std::size_t i = 1; i < n_; ++i) r.push_back(c_[i] * Traits::from_int(static_cast<long>(i), zero_));
        return PowerSeries(r, n_ - 1, zero_);
    }

    // sum c_n t^n  ->  sum c_n t^{n+1}/(n+1). Fails when n+1 is not invertible
    // for a nonzero coefficient.
    PowerSeries formal_integrate() const {
        std::vector<F> r(n_ + 1, zero_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (Traits::is_zero(c_[i])) continue;
            F d = Traits::from_int(static_cast<long>(i + 1), zero_);
            if (Traits::is_zero(d)) throw std::domain_error("formal_integrate: division by " + std::to_string(i + 1) + " is not defined");
            r[i + 1] = c_[i] * Traits::inv(d);
        }
        return PowerSeries(r, n_ + 1, zero_);
    }

    // f(inner) for inner with zero constant term.
    PowerSeries compose(const PowerSeries& inner) const {
        if (inner.n_ > 0 && !Traits::is_zero(inner.c_[0]))
            throw std::domain_error("power series composition needs zero constant term");
        std::size_t n = std::min(n_, inner.n_);
        PowerSeries r = constant(zero_, n);
        for (std::size_t i = n_; i-- > 0;) r = r * inner.truncate(n) + constant(c_[i], n);
        return r.truncate(n);
    }

    F eval_poly_part(const F& x) const {
        F r = zero_;
        for (std::size_t i = n_; i-- > 0;) r = r * x + c_[i];
        return r;
    }

private:
    std::vector<F> c_;
    std::size_t n_;
    F zero_;
};

// Apply a polynomial with coefficients in F to a series.
template <class F>
PowerSeries<F> poly_of_series(const Polynomial<F>& p, const PowerSeries<F>& s) {
    PowerSeries<F> r = PowerSeries<F>::constant(p.zero_elem(), s.order());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * s + PowerSeries<F>::constant(p.coeffs()[i], s.order());
    return r;
}

struct SingularPoint : std::domain_error {
    using std::domain_error::domain_error;
};
struct NoRoot : std::domain_error {
    using std::domain_error::domain_error;
};

// F(t, y) given as coefficients in y: F = sum_k Fy[k](t) y^k.
template <class F>
PowerSeries<F> eval_bivariate(const std::vector<Polynomial<F>>& Fy, const PowerSeries<F>& y) {
    std::size_t n = y.order();
    PowerSeries<F> r = PowerSeries<F>::constant(y.zero_elem(), n);
    for (std::size_t k = Fy.size(); k-- > 0;) r = r * y + PowerSeries<F>::from_poly(Fy[k], n);
    return r;
}

// Solve F(t, y(t)) = 0 mod t^N with y(0) = y0 by Newton iteration with doubling precision.
template <class F>
PowerSeries<F> series_newton_solve(const std::vector<Polynomial<F>>& Fy, const F& y0, std::size_t N) {
    using T = FieldTraits<F>;
    F z = T::zero(y0);
    // residual and derivative at the base point
    F val = z, der = z;
    for (std::size_t k = Fy.size(); k-- > 0;) val = val * y0 + Fy[k].coeff(0);
    for (std::size_t k = Fy.size(); k-- > 1;) der = der * y0 + Fy[k].coeff(0) * T::from_int(static_cast<long>(k), y0);
    if (!T::is_zero(val)) throw NoRoot("series_newton_solve: y0 is not a root at t = 0");
    if (T::is_zero(der)) throw SingularPoint("series_newton_solve: derivative vanishes at the base point");

    std::vector<Polynomial<F>> dFy;
    for (std::size_t k = 1; k < Fy.size(); ++k) dFy.push_back(Fy[k].scale(T::from_int(static_cast<long>(k), y0)));

    PowerSeries<F> y = PowerSeries<F>::constant(y0, 1);
    std::size_t prec = 1;
    while (prec < N) {
        prec = std::min(2 * prec, N);
        PowerSeries<F> yy(y.coeffs(), prec, y0);
        PowerSeries<F> f = eval_bivariate(Fy, yy);
        PowerSeries<F> fp = eval_bivariate(dFy, yy);
        y = yy - f / fp;
    }
    return PowerSeries<F>(y.coeffs(), N, y0);
}

}  // namespace exc7
