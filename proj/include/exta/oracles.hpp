#pragma once

// Brute-force reference implementations used to validate the main algebra
// path. Deliberately self-contained: plain nested vectors, no blade or
// matrix helpers from the rest of the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace exta::oracles {

using Matrix = std::vector<std::vector<double>>;

inline std::size_t square_size(const Matrix& m, const char* who) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument(std::string(who) + ": matrix not square");
    }
    return n;
}

/// Determinant by explicit permutation expansion. Guarded at n <= 8 since
/// the sum has n! terms.
inline double oracle_det(const Matrix& m) {
    const std::size_t n = square_size(m, "oracle_det");
    if (n > 8) throw std::invalid_argument("oracle_det: size guard, n must be <= 8");
    if (n == 0) return 1.0;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    double det = 0.0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        double term = (inversions % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Inverse by Gauss-Jordan elimination with partial pivoting.
inline Matrix oracle_inverse(Matrix m) {
    const std::size_t n = square_size(m, "oracle_inverse");
    double max_abs = 0.0;
    for (const auto& row : m) {
        for (double v : row) max_abs = std::max(max_abs, std::fabs(v));
    }
    const double pivot_tol = 1e-12 * std::max(max_abs, 1.0);

    Matrix inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
        }
        if (std::fabs(m[pivot][col]) < pivot_tol) {
            throw std::invalid_argument("oracle_inverse: singular matrix");
        }
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const double ip = 1.0 / m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= ip;
            inv[col][j] *= ip;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = m[r][col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// All p-element subsets of {0..n-1} as ascending index lists, in colex
/// order (the order induced by increasing bitmask).
inline std::vector<std::vector<std::size_t>> subsets_colex(std::size_t n, std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t full = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < full; ++mask) {
        std::size_t bits = 0;
        for (std::size_t m = mask; m != 0; m >>= 1) bits += m & 1u;
        if (bits != p) continue;
        std::vector<std::size_t> subset;
        for (std::size_t b = 0; b < n; ++b) {
            if ((mask >> b) & 1u) subset.push_back(b);
        }
        out.push_back(std::move(subset));
    }
    return out;
}

/// p-th compound matrix: entry (A,B) is the determinant of the p x p
/// submatrix of m with rows A and columns B, subsets in colex order.
inline Matrix oracle_outermorphism_minor(const Matrix& m, std::size_t p) {
    const std::size_t n = square_size(m, "oracle_outermorphism_minor");
    if (n > 8 || p > n) {
        throw std::invalid_argument("oracle_outermorphism_minor: size guard, p <= n <= 8");
    }
    const auto subsets = subsets_colex(n, p);
    Matrix out(subsets.size(), std::vector<double>(subsets.size(), 0.0));
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (std::size_t b = 0; b < subsets.size(); ++b) {
            Matrix sub(p, std::vector<double>(p, 0.0));
            for (std::size_t i = 0; i < p; ++i) {
                for (std::size_t j = 0; j < p; ++j) sub[i][j] = m[subsets[a][i]][subsets[b][j]];
            }
            out[a][b] = oracle_det(sub);
        }
    }
    return out;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    Matrix c(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    }
    return c;
}

} // namespace exta::oracles
