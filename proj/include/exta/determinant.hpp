#pragma once

#include <cmath>

#include "exta/core.hpp"
#include "exta/extensors.hpp"
#include "exta/frame.hpp"
#include "exta/multivector.hpp"
#include "exta/operators.hpp"

namespace exta {

/// Nonzero element of the top exterior power. Grade n has a single
/// canonical blade, so the value is one nonzero coefficient at the full
/// mask.
class Pseudoscalar {
public:
    explicit Pseudoscalar(Multivector value) : value_(std::move(value)) {
        const int n = value_.dim();
        if (!value_.is_homogeneous(n)) {
            throw Error("pseudoscalar must be concentrated in the top grade");
        }
        if (value_.is_zero()) throw Error("pseudoscalar must be nonzero");
    }

    static Pseudoscalar canonical(int dim) {
        require_dim(dim);
        return Pseudoscalar(Multivector::blade(dim, (BladeMask{1} << dim) - 1));
    }

    int dim() const { return value_.dim(); }
    const Multivector& value() const { return value_; }

    BladeMask top_mask() const { return (BladeMask{1} << value_.dim()) - 1; }
    double top_coeff() const { return value_.coeff(top_mask()); }

    /// The same pseudoscalar rescaled to coefficient one. Dividing the
    /// single coefficient by itself is exact, so every nonzero pseudoscalar
    /// normalizes to the identical unit blade; quantities defined as
    /// independent of the pseudoscalar choice are computed through this.
    Multivector normalized() const {
        return Multivector::blade(value_.dim(), top_mask(), top_coeff() / top_coeff());
    }

private:
    Multivector value_;
};

/// Determinant of a (1,1)-extensor: the factor by which its outermorphism
/// scales the top grade, i.e. the top coefficient of the wedge of the basis
/// images.
inline double det(const PqExtensor& t) {
    detail::require_operator(t);
    Multivector acc = Multivector::scalar(t.dim(), 1.0);
    for (int j = 0; j < t.dim(); ++j) acc = wedge(acc, t.image(static_cast<std::size_t>(j)));
    return acc.coeff((BladeMask{1} << t.dim()) - 1);
}

/// Determinant computed through a given pseudoscalar; the result does not
/// depend on the choice of I.
inline double det_with(const PqExtensor& t, const Pseudoscalar& i) {
    detail::require_operator(t);
    require_same_dim(t.dim(), i.dim());
    const Multivector unit = i.normalized();
    return extend_apply(t, unit).coeff(i.top_mask());
}

/// Determinant through an arbitrary frame: the outermorphism applied to the
/// full induced blade of one frame of the reciprocal pair, dotted with the
/// full blade of the other. Both orderings agree.
inline double det_in_frame(const PqExtensor& t, const Frame& f, bool frame_first = true) {
    detail::require_operator(t);
    require_same_dim(t.dim(), f.dim());
    const Frame recip = reciprocal_frame(f);
    const BladeMask full = (BladeMask{1} << t.dim()) - 1;
    const Multivector a = induced_blade(frame_first ? f : recip, full);
    const Multivector b = induced_blade(frame_first ? recip : f, full);
    return scalar_product(extend_apply(t, a), b);
}

inline double singularity_threshold(const PqExtensor& t) {
    // Scale-aware Hadamard-bound test: rows of the stored matrix are the
    // basis images, and |det| never exceeds the product of their norms.
    return kSingularEps * t.matrix().row_norm_product();
}

/// Inverse of a nonsingular (1,1)-extensor through the pseudoscalar
/// formula: t^-1(v) = det^-1[t] adj(t)-outermorphism(v I) I^-1, with
/// Clifford products against I and its inverse.
inline PqExtensor invert_with(const PqExtensor& t, const Pseudoscalar& i) {
    detail::require_operator(t);
    require_same_dim(t.dim(), i.dim());
    const double d = det_with(t, i);
    if (std::fabs(d) <= singularity_threshold(t)) {
        throw SingularExtensor("extensor determinant below singularity threshold");
    }
    const int n = t.dim();
    const Multivector unit = i.normalized();
    const Multivector unit_rev = reversion(unit);
    const double norm2 = clifford_product(unit, unit_rev).coeff(0);
    const Multivector unit_inv = unit_rev * (1.0 / norm2);
    const PqExtensor t_adj = adjoint(t);

    Matrix rows(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const Multivector vi = clifford_product(Multivector::basis_vector(n, j), unit);
        const Multivector w = clifford_product(extend_apply(t_adj, vi), unit_inv);
        for (int b = 0; b < n; ++b) {
            rows.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(b)) =
                w.coeff(BladeMask{1} << b) / d;
        }
    }
    return PqExtensor(n, 1, 1, std::move(rows));
}

inline PqExtensor invert(const PqExtensor& t) {
    return invert_with(t, Pseudoscalar::canonical(t.dim()));
}

} // namespace exta
