#include "cyclarc/linalg.hpp"

#include "cyclarc/errors.hpp"

namespace cyclarc {

Mat::Mat(FieldPtr f, int rows, int cols) : f_(std::move(f)), r_(rows), c_(cols) {
    a_.assign(static_cast<size_t>(rows) * cols, f_->zero());
}

Mat Mat::identity(const FieldPtr& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw MathError("matrix dimension mismatch");
    Mat r(f_, r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Element& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::scaled(const Element& s) const {
    Mat r = *this;
    for (auto& e : r.a_) e *= s;
    return r;
}

std::vector<Element> Mat::apply(const std::vector<Element>& v) const {
    if (static_cast<int>(v.size()) != c_) throw MathError("matrix-vector dimension mismatch");
    std::vector<Element> out(r_, f_->zero());
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Mat Mat::transpose() const {
    Mat r(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Element Mat::det() const {
    if (r_ != c_) throw MathError("determinant of non-square matrix");
    Mat m = *this;
    Element d = f_->one();
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int row = col; row < r_; ++row)
            if (!m.at(row, col).is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) return f_->zero();
        if (piv != col) {
            for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Element inv = m.at(col, col).inverse();
        for (int row = col + 1; row < r_; ++row) {
            if (m.at(row, col).is_zero()) continue;
            Element fct = m.at(row, col) * inv;
            for (int j = col; j < c_; ++j) m.at(row, j) -= fct * m.at(col, j);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    if (r_ != c_) throw MathError("inverse of non-square matrix");
    Mat m = *this;
    Mat inv = identity(f_, r_);
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int row = col; row < r_; ++row)
            if (!m.at(row, col).is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) throw MathError("matrix is singular");
        if (piv != col)
            for (int j = 0; j < c_; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Element s = m.at(col, col).inverse();
        for (int j = 0; j < c_; ++j) {
            m.at(col, j) *= s;
            inv.at(col, j) *= s;
        }
        for (int row = 0; row < r_; ++row) {
            if (row == col || m.at(row, col).is_zero()) continue;
            Element fct = m.at(row, col);
            for (int j = 0; j < c_; ++j) {
                m.at(row, j) -= fct * m.at(col, j);
                inv.at(row, j) -= fct * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::pair<int, std::vector<std::vector<Element>>> Mat::nullspace() const {
    Mat m = *this;
    std::vector<int> pivot_of_col(c_, -1);
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
        int piv = -1;
        for (int row = rank; row < r_; ++row)
            if (!m.at(row, col).is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Element s = m.at(rank, col).inverse();
        for (int j = col; j < c_; ++j) m.at(rank, j) *= s;
        for (int row = 0; row < r_; ++row) {
            if (row == rank || m.at(row, col).is_zero()) continue;
            Element fct = m.at(row, col);
            for (int j = col; j < c_; ++j) m.at(row, j) -= fct * m.at(rank, j);
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<std::vector<Element>> basis;
    for (int col = 0; col < c_; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<Element> v(c_, f_->zero());
        v[col] = f_->one();
        for (int j = 0; j < c_; ++j)
            if (pivot_of_col[j] >= 0) v[j] = -m.at(pivot_of_col[j], col);
        basis.push_back(std::move(v));
    }
    return {rank, basis};
}

std::pair<bool, std::vector<Element>> Mat::solve(const std::vector<Element>& b) const {
    if (static_cast<int>(b.size()) != r_) throw MathError("solve: dimension mismatch");
    Mat m(f_, r_, c_ + 1);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
        m.at(i, c_) = b[i];
    }
    std::vector<int> pivot_of_col(c_, -1);
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
        int piv = -1;
        for (int row = rank; row < r_; ++row)
            if (!m.at(row, col).is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j <= c_; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Element s = m.at(rank, col).inverse();
        for (int j = col; j <= c_; ++j) m.at(rank, j) *= s;
        for (int row = 0; row < r_; ++row) {
            if (row == rank || m.at(row, col).is_zero()) continue;
            Element fct = m.at(row, col);
            for (int j = col; j <= c_; ++j) m.at(row, j) -= fct * m.at(rank, j);
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    for (int row = rank; row < r_; ++row)
        if (!m.at(row, c_).is_zero()) return {false, {}};
    std::vector<Element> x(c_, f_->zero());
    for (int col = 0; col < c_; ++col)
        if (pivot_of_col[col] >= 0) x[col] = m.at(pivot_of_col[col], c_);
    return {true, x};
}

}  // namespace cyclarc
