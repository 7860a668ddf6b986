#pragma once

#include <vector>

#include "cyclarc/field.hpp"

namespace cyclarc {

/// Dense matrix over a finite field. Row-major.
class Mat {
public:
    Mat() = default;
    Mat(FieldPtr f, int rows, int cols);
    static Mat identity(const FieldPtr& f, int n);

    const FieldPtr& field() const { return f_; }
    int rows() const { return r_; }
    int cols() const { return c_; }
    Element& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Element& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Element& s) const;
    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    std::vector<Element> apply(const std::vector<Element>& v) const;

    Element det() const;
    Mat inverse() const;
    Mat transpose() const;

    /// Applies a coefficient map entrywise (e.g. Frobenius).
    template <typename F>
    Mat map(F&& fn) const {
        Mat r = *this;
        for (auto& e : r.a_) e = fn(e);
        return r;
    }

    /// Returns (rank, basis of the right nullspace).
    std::pair<int, std::vector<std::vector<Element>>> nullspace() const;

    /// Solves M x = b; empty optional if inconsistent. If the solution space
    /// is positive-dimensional the pivot-based particular solution is
    /// returned.
    std::pair<bool, std::vector<Element>> solve(const std::vector<Element>& b) const;

private:
    FieldPtr f_;
    int r_ = 0, c_ = 0;
    std::vector<Element> a_;
};

}  // namespace cyclarc
