#include "locc/linalg.hpp"

#include <utility>

namespace locc {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix add: shape mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix sub: shape mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw dimension_error("matrix mul: shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Rational Mat::trace() const {
    Rational t;
    int n = rows_ < cols_ ? rows_ : cols_;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
}

Rational dot(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw dimension_error("dot: length mismatch");
    Rational s;
    for (size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero() && !v[i].is_zero()) s += u[i] * v[i];
    return s;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    if (static_cast<size_t>(m.cols()) != v.size()) throw dimension_error("mat_vec: shape mismatch");
    Vec r(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Rational s;
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Vec scale(const Vec& v, const Rational& c) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
    return r;
}

Vec add(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw dimension_error("add: length mismatch");
    Vec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
}

Vec sub(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw dimension_error("sub: length mismatch");
    Vec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

struct Rref {
    Mat r;
    std::vector<int> pivot_cols;  // pivot column of each reduced row, ascending
};

Rref rref(const Mat& m) {
    Rref out{m, {}};
    Mat& r = out.r;
    int lead = 0;
    for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
        int pivot = -1;
        for (int i = lead; i < r.rows(); ++i) {
            if (!r.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < r.cols(); ++j) std::swap(r.at(pivot, j), r.at(lead, j));
        Rational inv = Rational(1) / r.at(lead, col);
        for (int j = 0; j < r.cols(); ++j) r.at(lead, j) = r.at(lead, j) * inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            Rational f = r.at(i, col);
            for (int j = 0; j < r.cols(); ++j) r.at(i, j) = r.at(i, j) - f * r.at(lead, j);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    return out;
}

}  // namespace

std::vector<Vec> kernel_basis(const Mat& m) {
    if (m.cols() == 0) return {};
    if (m.rows() == 0) {
        std::vector<Vec> basis;
        for (int j = 0; j < m.cols(); ++j) {
            Vec v(m.cols());
            v[j] = Rational(1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    Rref rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Rational(1);
        for (size_t row = 0; row < rr.pivot_cols.size(); ++row)
            v[rr.pivot_cols[row]] = -rr.r.at(static_cast<int>(row), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<int>(rref(m).pivot_cols.size());
}

Mat projector_onto(const std::vector<Vec>& basis) {
    if (basis.empty()) throw dimension_error("projector_onto: empty basis");
    int dim = static_cast<int>(basis[0].size());
    // Drop linearly dependent generators first.
    std::vector<Vec> b;
    {
        Mat probe(0, 0);
        std::vector<Vec> kept;
        for (const auto& v : basis) {
            std::vector<Vec> trial = kept;
            trial.push_back(v);
            Mat m(static_cast<int>(trial.size()), dim);
            for (size_t i = 0; i < trial.size(); ++i)
                for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) = trial[i][j];
            if (rank(m) == static_cast<int>(trial.size())) kept = std::move(trial);
        }
        b = std::move(kept);
    }
    int k = static_cast<int>(b.size());
    // Gram matrix and its inverse via Gauss-Jordan on [G | I].
    Mat aug(k, 2 * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) aug.at(i, j) = dot(b[i], b[j]);
        aug.at(i, k + i) = Rational(1);
    }
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int i = col; i < k; ++i)
            if (!aug.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::logic_error("projector_onto: singular Gram matrix");
        if (pivot != col)
            for (int j = 0; j < 2 * k; ++j) std::swap(aug.at(pivot, j), aug.at(col, j));
        Rational inv = Rational(1) / aug.at(col, col);
        for (int j = 0; j < 2 * k; ++j) aug.at(col, j) = aug.at(col, j) * inv;
        for (int i = 0; i < k; ++i) {
            if (i == col || aug.at(i, col).is_zero()) continue;
            Rational f = aug.at(i, col);
            for (int j = 0; j < 2 * k; ++j) aug.at(i, j) = aug.at(i, j) - f * aug.at(col, j);
        }
    }
    // P = B^T G^{-1} B with B the k x dim matrix of generators.
    Mat p(dim, dim);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const Rational& g = aug.at(i, k + j);
            if (g.is_zero()) continue;
            for (int r = 0; r < dim; ++r) {
                if (b[i][r].is_zero()) continue;
                Rational f = g * b[i][r];
                for (int c = 0; c < dim; ++c)
                    if (!b[j][c].is_zero()) p.at(r, c) += f * b[j][c];
            }
        }
    }
    return p;
}

}  // namespace locc
