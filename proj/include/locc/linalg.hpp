#ifndef LOCC_LINALG_HPP
#define LOCC_LINALG_HPP

#include <vector>

#include "locc/rational.hpp"

namespace locc {

using Vec = std::vector<Rational>;

// Dense row-major rational matrix.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    bool is_zero() const;
    Rational trace() const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> e_;
};

// Exact inner product of equal-length vectors. All vectors in this project are
// real, so no conjugation is involved.
Rational dot(const Vec& u, const Vec& v);

Vec mat_vec(const Mat& m, const Vec& v);

Vec scale(const Vec& v, const Rational& c);
Vec add(const Vec& u, const Vec& v);
Vec sub(const Vec& u, const Vec& v);
bool is_zero(const Vec& v);

// Basis of {x : m x = 0}. Exact Gauss-Jordan elimination; the pivot for each
// column is the first remaining row with a nonzero entry, scanning columns left
// to right, so the returned basis is identical across runs and platforms.
// An empty matrix yields the full standard basis.
std::vector<Vec> kernel_basis(const Mat& m);

int rank(const Mat& m);

// Orthogonal projector onto span(basis) where basis vectors need not be
// orthogonal (Gram-matrix solve). Exact and rational throughout.
Mat projector_onto(const std::vector<Vec>& basis);

}  // namespace locc

#endif
