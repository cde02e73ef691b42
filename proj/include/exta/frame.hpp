#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "exta/core.hpp"
#include "exta/matrix.hpp"
#include "exta/multivector.hpp"

namespace exta {

/// Ordered basis {e_1..e_n} of the underlying vector space, held together
/// with its Gram matrix gram[j][k] = e_{j+1}.e_{k+1}. Vectors must be
/// grade 1, nonzero and linearly independent; construction throws
/// SingularFrame otherwise.
class Frame {
public:
    explicit Frame(std::vector<Multivector> vectors) : vectors_(std::move(vectors)) {
        if (vectors_.empty()) throw Error("frame needs at least one vector");
        dim_ = vectors_.front().dim();
        require_dim(dim_);
        if (vectors_.size() != static_cast<std::size_t>(dim_)) {
            throw Error("frame must have exactly dim vectors");
        }
        for (const Multivector& v : vectors_) {
            require_same_dim(dim_, v.dim());
            if (!v.is_homogeneous(1)) throw Error("frame vectors must be grade 1");
            if (v.is_zero()) throw Error("frame vectors must be nonzero");
        }
        gram_ = Matrix(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
        for (int j = 0; j < dim_; ++j) {
            for (int k = 0; k < dim_; ++k) {
                gram_.at(j, k) = scalar_product(vectors_[j], vectors_[k]);
            }
        }
        auto gj = gauss_jordan_invert(gram_);
        // Scale-aware singularity test against the Hadamard bound: the Gram
        // determinant of an independent set stays a bounded fraction of the
        // product of its row norms.
        if (gj.singular || std::fabs(gj.det) <= kSingularEps * gram_.row_norm_product()) {
            throw SingularFrame("frame vectors are linearly dependent");
        }
        gram_inverse_ = std::move(gj.inverse);
    }

    /// The orthonormal reference frame u_1..u_n.
    static Frame canonical(int dim) {
        require_dim(dim);
        std::vector<Multivector> vs;
        vs.reserve(static_cast<std::size_t>(dim));
        for (int j = 1; j <= dim; ++j) vs.push_back(Multivector::basis_vector(dim, j));
        return Frame(std::move(vs));
    }

    int dim() const { return dim_; }
    const std::vector<Multivector>& vectors() const { return vectors_; }

    /// Frame vector e_j, 1-based index.
    const Multivector& vector(int j) const {
        if (j < 1 || j > dim_) throw Error("frame vector index out of range");
        return vectors_[static_cast<std::size_t>(j - 1)];
    }

    const Matrix& gram() const { return gram_; }
    const Matrix& gram_inverse() const { return gram_inverse_; }

private:
    int dim_;
    std::vector<Multivector> vectors_;
    Matrix gram_;
    Matrix gram_inverse_;
};

/// Euclidean reciprocal frame {e^k}: e^k = sum_j (gram^-1)[k][j] e_j, so
/// e_j.e^k = delta_j^k.
inline Frame reciprocal_frame(const Frame& f) {
    const int n = f.dim();
    std::vector<Multivector> recip;
    recip.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Multivector v = Multivector::zero(n);
        for (int j = 0; j < n; ++j) {
            v = v + f.vectors()[static_cast<std::size_t>(j)] *
                        f.gram_inverse().at(static_cast<std::size_t>(k),
                                            static_cast<std::size_t>(j));
        }
        recip.push_back(std::move(v));
    }
    return Frame(std::move(recip));
}

/// True when the Gram matrix is the identity within tolerance.
inline bool is_orthonormal(const Frame& f, double rel = kRelTol, double abs = kAbsTol) {
    const std::size_t n = static_cast<std::size_t>(f.dim());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const double want = (j == k) ? 1.0 : 0.0;
            if (!approx_equal(f.gram().at(j, k), want, rel, abs)) return false;
        }
    }
    return true;
}

/// Induced k-vector e_{j1} ^ ... ^ e_{jk} for strictly ascending 1-based
/// indices; the empty index list gives the scalar 1.
inline Multivector induced_blade(const Frame& f, const std::vector<int>& indices) {
    Multivector acc = Multivector::scalar(f.dim(), 1.0);
    int prev = 0;
    for (int j : indices) {
        if (j < 1 || j > f.dim()) throw Error("induced blade index out of range");
        if (j <= prev) throw Error("induced blade indices must be strictly ascending");
        prev = j;
        acc = wedge(acc, f.vector(j));
    }
    return acc;
}

/// Induced blade for a canonical blade mask (bit i set selects e_{i+1}).
inline Multivector induced_blade(const Frame& f, BladeMask mask) {
    std::vector<int> indices;
    for (int b : mask_bits(mask)) indices.push_back(b + 1);
    return induced_blade(f, indices);
}

} // namespace exta
