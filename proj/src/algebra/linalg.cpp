#include "exc7/linalg.hpp"

#include "exc7/integer.hpp"

#include <sstream>
#include <stdexcept>

namespace exc7 {

Mat rref(Mat rows, uint32_t p) {
    if (rows.empty()) return rows;
    std::size_t n = rows[0].size(), rank = 0;
    for (auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("rref: ragged matrix");
        for (auto& x : r) x %= p;
    }
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        uint64_t inv = invmod_u64(rows[rank][c], p);
        for (auto& x : rows[rank]) x = static_cast<uint32_t>(x * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            uint64_t f = rows[i][c];
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] = static_cast<uint32_t>((rows[i][j] + (p - f) * rows[rank][j]) % p);
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

std::size_t matrix_rank(const Mat& rows, uint32_t p) { return rref(rows, p).size(); }

Subspace Subspace::span(const Mat& vectors, std::size_t n, uint32_t p) {
    Subspace s(n, p);
    for (const auto& v : vectors)
        if (v.size() != n) throw std::invalid_argument("Subspace::span: dimension mismatch");
    s.basis_ = rref(vectors, p);
    return s;
}

Subspace Subspace::whole(std::size_t n, uint32_t p) {
    Mat id(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return span(id, n, p);
}

Subspace Subspace::kernel(const Mat& A, std::size_t n, uint32_t p) {
    for (const auto& r : A)
        if (r.size() != n) throw std::invalid_argument("Subspace::kernel: dimension mismatch");
    Mat R = rref(A, p);
    std::vector<std::size_t> pivots;
    for (const auto& r : R) {
        std::size_t c = 0;
        while (r[c] == 0) ++c;
        pivots.push_back(c);
    }
    std::vector<bool> is_piv(n, false);
    for (auto c : pivots) is_piv[c] = true;
    Mat out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        Vec v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < R.size(); ++i) v[pivots[i]] = (p - R[i][f]) % p;
        out.push_back(v);
    }
    return span(out, n, p);
}

void Subspace::check(const Subspace& o) const {
    if (n_ != o.n_ || p_ != o.p_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != n_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
    Mat m = basis_;
    m.push_back(v);
    return matrix_rank(m, p_) == basis_.size();
}

Subspace Subspace::sum(const Subspace& o) const {
    check(o);
    Mat m = basis_;
    m.insert(m.end(), o.basis_.begin(), o.basis_.end());
    return span(m, n_, p_);
}

Subspace Subspace::annihilator() const { return kernel(basis_, n_, p_); }

Subspace Subspace::intersect(const Subspace& o) const {
    check(o);
    // U cap W = ann(ann U + ann W)
    return annihilator().sum(o.annihilator()).annihilator();
}

Subspace Subspace::preimage(const Mat& A, std::size_t n, const Subspace& W) {
    if (A.size() != W.ambient()) throw std::invalid_argument("Subspace::preimage: dimension mismatch");
    for (const auto& r : A)
        if (r.size() != n) throw std::invalid_argument("Subspace::preimage: dimension mismatch");
    uint32_t p = W.prime();
    // x in preimage iff every annihilator vector a of W has a.(A x) = 0, i.e. (a^T A) x = 0.
    Mat cond;
    Subspace ann = W.annihilator();
    for (const auto& a : ann.basis()) {
        Vec row(n, 0);
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<uint32_t>((row[j] + uint64_t(a[i]) * A[i][j]) % p);
        }
        cond.push_back(row);
    }
    if (cond.empty()) return whole(n, p);
    return kernel(cond, n, p);
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "dim " << dim() << " in F_" << p_ << "^" << n_ << "\n";
    for (const auto& r : basis_) {
        for (auto x : r) os << x;
        os << "\n";
    }
    return os.str();
}

Vec mat_vec(const Mat& A, const Vec& x, uint32_t p) {
    Vec r(A.size(), 0);
    for (std::size_t i = 0; i < A.size(); ++i) r[i] = dot(A[i], x, p);
    return r;
}

uint32_t dot(const Vec& a, const Vec& b, uint32_t p) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = (s + uint64_t(a[i]) * b[i]) % p;
    return static_cast<uint32_t>(s);
}

}  // namespace exc7
