#pragma once
// Linear algebra over a small prime field F_p (p < 2^31), mainly F_7 and F_5.

#include <cstdint>
#include <string>
#include <vector>

namespace exc7 {

using Vec = std::vector<uint32_t>;
using Mat = std::vector<Vec>;  // row-major

// Reduced row echelon form; returns the nonzero rows.
Mat rref(Mat rows, uint32_t p);
std::size_t matrix_rank(const Mat& rows, uint32_t p);

// A subspace of F_p^n stored as its RREF basis, so equality is row equality.
class Subspace {
public:
    Subspace(std::size_t n, uint32_t p) : n_(n), p_(p) {}
    static Subspace span(const Mat& vectors, std::size_t n, uint32_t p);
    static Subspace whole(std::size_t n, uint32_t p);
    // Kernel of the matrix A (m x n) acting on column vectors in F_p^n.
    static Subspace kernel(const Mat& A, std::size_t n, uint32_t p);

    std::size_t ambient() const { return n_; }
    uint32_t prime() const { return p_; }
    std::size_t dim() const { return basis_.size(); }
    const Mat& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    // Vectors annihilating the subspace under the standard dot product.
    Subspace annihilator() const;
    // {x in F_p^n : A x in W}, for A with A.size() == W.ambient() rows.
    static Subspace preimage(const Mat& A, std::size_t n, const Subspace& W);

    bool operator==(const Subspace& o) const { return n_ == o.n_ && p_ == o.p_ && basis_ == o.basis_; }
    std::string str() const;

private:
    void check(const Subspace& o) const;
    std::size_t n_;
    uint32_t p_;
    Mat basis_;
};

Vec mat_vec(const Mat& A, const Vec& x, uint32_t p);
uint32_t dot(const Vec& a, const Vec& b, uint32_t p);

}  // namespace exc7
