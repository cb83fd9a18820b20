#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace kinex {

// Dense row-major matrix; just enough linear algebra for the n x n
// noise-shaping matrices and their checks.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return v_[static_cast<size_t>(i) * cols_ + j];
    }
    double operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return v_[static_cast<size_t>(i) * cols_ + j];
    }

    const double* row(int i) const { return v_.data() + static_cast<size_t>(i) * cols_; }
    std::span<const double> data() const { return v_; }

    // y = M x
    void apply_into(std::span<const double> x, std::span<double> y) const {
        assert(static_cast<int>(x.size()) == cols_ && static_cast<int>(y.size()) == rows_);
        for (int i = 0; i < rows_; ++i) {
            const double* r = row(i);
            double acc = 0.0;
            for (int j = 0; j < cols_; ++j) acc += r[j] * x[j];
            y[i] = acc;
        }
    }
    std::vector<double> apply(std::span<const double> x) const {
        std::vector<double> y(rows_);
        apply_into(x, y);
        return y;
    }

    Matrix multiply(const Matrix& other) const {
        assert(cols_ == other.rows_);
        Matrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const double a = (*this)(i, k);
                if (a == 0.0) continue;
                for (int j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
            }
        return out;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> v_;
};

}  // namespace kinex
