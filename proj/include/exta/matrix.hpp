#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "exta/core.hpp"

namespace exta {

/// Minimal dense row-major matrix. Extensor coefficient storage and Gram
/// matrices; not a general linear-algebra type.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
        : rows_(rows), cols_(cols), a_(std::move(data)) {
        if (a_.size() != rows * cols) throw Error("matrix data size does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    double max_abs() const {
        double s = 0.0;
        for (double v : a_) s = std::max(s, std::fabs(v));
        return s;
    }

    double max_row_norm() const {
        double best = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * at(i, j);
            best = std::max(best, std::sqrt(s));
        }
        return best;
    }

    /// Product of euclidean row norms, the Hadamard bound on |det|.
    double row_norm_product() const {
        double prod = 1.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * at(i, j);
            prod *= std::sqrt(s);
        }
        return prod;
    }

    double max_col_norm() const {
        double best = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < rows_; ++i) s += at(i, j) * at(i, j);
            best = std::max(best, std::sqrt(s));
        }
        return best;
    }

private:
    std::size_t rows_, cols_;
    std::vector<double> a_;
};

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    }
    return t;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    }
    return c;
}

inline Matrix add(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw Error("matrix sum shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    }
    return c;
}

inline Matrix scale(const Matrix& a, double s) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) * s;
    }
    return c;
}

inline bool approx_equal(const Matrix& a, const Matrix& b, double rel = kRelTol,
                         double abs = kAbsTol) {
    if (!a.same_shape(b)) return false;
    const double scale = std::max(a.max_abs(), b.max_abs());
    const double bound = std::max(abs, rel * scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (std::fabs(a.at(i, j) - b.at(i, j)) > bound) return false;
        }
    }
    return true;
}

struct GaussJordanResult {
    Matrix inverse;
    double det = 0.0;
    bool singular = false;
};

/// Gauss-Jordan elimination with partial pivoting. Reports singularity via
/// the flag instead of throwing so callers can apply their own thresholds.
inline GaussJordanResult gauss_jordan_invert(Matrix m) {
    if (m.rows() != m.cols()) throw Error("only square matrices can be inverted");
    const std::size_t n = m.rows();
    Matrix inv = Matrix::identity(n);
    double det = 1.0;
    const double pivot_floor = 1e-300;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::fabs(m.at(r, col)) > std::fabs(m.at(pivot, col))) pivot = r;
        }
        if (std::fabs(m.at(pivot, col)) < pivot_floor) {
            return {Matrix(n, n), 0.0, true};
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
            det = -det;
        }
        const double p = m.at(col, col);
        det *= p;
        const double ip = 1.0 / p;
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) *= ip;
            inv.at(col, j) *= ip;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = m.at(r, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m.at(r, j) -= f * m.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return {std::move(inv), det, false};
}

} // namespace exta
