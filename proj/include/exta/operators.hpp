#pragma once

#include <utility>
#include <vector>

#include "exta/core.hpp"
#include "exta/extensors.hpp"
#include "exta/frame.hpp"
#include "exta/multivector.hpp"

namespace exta {

namespace detail {

inline void require_operator(const PqExtensor& t) {
    if (t.p() != 1 || t.q() != 1) {
        throw GradeMismatch("operation requires a (1,1)-extensor");
    }
}

/// Images of the canonical basis vectors under a (1,1)-extensor.
inline std::vector<Multivector> basis_images(const PqExtensor& t) {
    std::vector<Multivector> images;
    images.reserve(static_cast<std::size_t>(t.dim()));
    for (int j = 0; j < t.dim(); ++j) images.push_back(t.image(static_cast<std::size_t>(j)));
    return images;
}

} // namespace detail

/// Outermorphism action of a (1,1)-extensor: fixes scalars, agrees with t on
/// vectors and multiplies across exterior products, so each canonical blade
/// maps to the wedge of the images of its factors. Grade preserving and
/// linear in the multivector argument.
inline Multivector extend_apply(const PqExtensor& t, const Multivector& x) {
    detail::require_operator(t);
    require_same_dim(t.dim(), x.dim());
    const auto images = detail::basis_images(t);
    MultivectorBuilder r(x.dim());
    r.set(0, x.coeff(0));
    for (BladeMask m = 1; m < x.size(); ++m) {
        const double c = x.coeff(m);
        if (c == 0.0) continue;
        Multivector acc = Multivector::scalar(x.dim(), 1.0);
        for (int b : mask_bits(m)) acc = wedge(acc, images[static_cast<std::size_t>(b)]);
        for (BladeMask out = 0; out < acc.size(); ++out) {
            const double a = acc.coeff(out);
            if (a != 0.0) r.add(out, c * a);
        }
    }
    return r.take();
}

/// Outermorphism action computed through an arbitrary frame: the multivector
/// is expanded over induced blades of one frame of a reciprocal pair and the
/// images are wedged over the other. `reciprocal_weights` selects which of
/// the two equivalent expansions is used; both must agree with the canonical
/// path for every nonsingular frame.
inline Multivector extend_apply_in_frame(const PqExtensor& t, const Multivector& x,
                                         const Frame& f, bool reciprocal_weights = true) {
    detail::require_operator(t);
    require_same_dim(t.dim(), x.dim());
    require_same_dim(t.dim(), f.dim());
    const Frame recip = reciprocal_frame(f);
    const Frame& weight_frame = reciprocal_weights ? recip : f;
    const Frame& image_frame = reciprocal_weights ? f : recip;

    Multivector result = Multivector::scalar(x.dim(), x.coeff(0));
    const BladeMask full = BladeMask{1} << x.dim();
    for (BladeMask m = 1; m < full; ++m) {
        const double w = scalar_product(induced_blade(weight_frame, m), x);
        if (w == 0.0) continue;
        Multivector acc = Multivector::scalar(x.dim(), 1.0);
        for (int b : mask_bits(m)) acc = wedge(acc, t.apply(image_frame.vector(b + 1)));
        result = result + acc * w;
    }
    return result;
}

/// Materialized outermorphism over canonical blades; block diagonal by
/// grade, the grade-k block being the k-th compound (minor) matrix of t.
inline GeneralExtensor extend_matrix(const PqExtensor& t) {
    detail::require_operator(t);
    const std::size_t full = std::size_t{1} << t.dim();
    std::vector<Multivector> images;
    images.reserve(full);
    for (std::size_t m = 0; m < full; ++m) {
        images.push_back(extend_apply(t, Multivector::blade(t.dim(), static_cast<BladeMask>(m))));
    }
    return GeneralExtensor::from_images(t.dim(), images);
}

/// Standard adjoint: the unique map with X.t'(Y) = t(X).Y. Over canonical
/// orthonormal blades this is the matrix transpose, with input and output
/// grades swapped.
inline PqExtensor adjoint(const PqExtensor& t) {
    return PqExtensor(t.dim(), t.q(), t.p(), transpose(t.matrix()));
}

inline GeneralExtensor adjoint(const GeneralExtensor& t) {
    return GeneralExtensor(t.dim(), transpose(t.matrix()));
}

/// Adjoint evaluated through a frame: sums the extensor's values on induced
/// blades of one frame of the reciprocal pair against blades of the other.
/// `reciprocal_inside` selects which frame feeds the extensor. Must agree
/// with the transpose adjoint for every nonsingular frame.
inline Multivector adjoint_apply_in_frame(const PqExtensor& t, const Multivector& y,
                                          const Frame& f, bool reciprocal_inside = true) {
    require_same_dim(t.dim(), f.dim());
    require_same_dim(t.dim(), y.dim());
    const Frame recip = reciprocal_frame(f);
    const Frame& inside = reciprocal_inside ? recip : f;
    const Frame& outside = reciprocal_inside ? f : recip;
    Multivector result = Multivector::zero(t.dim());
    // The domain projector restricts the collective index to the extensor's
    // input grade.
    for (BladeMask m : blades_of_grade(t.dim(), t.p())) {
        const double w = scalar_product(t.apply(induced_blade(inside, m)), y);
        if (w == 0.0) continue;
        result = result + induced_blade(outside, m) * w;
    }
    return result;
}

inline Multivector adjoint_apply_in_frame(const GeneralExtensor& t, const Multivector& y,
                                          const Frame& f, const GradeSet& domain,
                                          bool reciprocal_inside = true) {
    require_same_dim(t.dim(), f.dim());
    require_same_dim(t.dim(), y.dim());
    require_same_dim(t.dim(), domain.dim());
    const Frame recip = reciprocal_frame(f);
    const Frame& inside = reciprocal_inside ? recip : f;
    const Frame& outside = reciprocal_inside ? f : recip;
    Multivector result = Multivector::zero(t.dim());
    const BladeMask full = BladeMask{1} << t.dim();
    for (BladeMask m = 0; m < full; ++m) {
        if (!domain.contains(grade_of(m))) continue;
        const double w = scalar_product(t.apply(induced_blade(inside, m)), y);
        if (w == 0.0) continue;
        result = result + induced_blade(outside, m) * w;
    }
    return result;
}

inline Multivector adjoint_apply_in_frame(const GeneralExtensor& t, const Multivector& y,
                                          const Frame& f, bool reciprocal_inside = true) {
    return adjoint_apply_in_frame(t, y, f, GradeSet::full(t.dim()), reciprocal_inside);
}

/// Derivation extension of a (1,1)-extensor: vanishes on scalars, agrees
/// with t on vectors and satisfies the Leibniz rule over exterior products.
/// Computed as the sum of t(u_k) ^ (u_k _| X) over the reference frame;
/// grade preserving and frame independent.
inline Multivector generalize_apply(const PqExtensor& t, const Multivector& x) {
    detail::require_operator(t);
    require_same_dim(t.dim(), x.dim());
    const auto images = detail::basis_images(t);
    Multivector result = Multivector::zero(x.dim());
    for (int k = 0; k < x.dim(); ++k) {
        const Multivector e_k = Multivector::basis_vector(x.dim(), k + 1);
        result = result + wedge(images[static_cast<std::size_t>(k)], left_contraction(e_k, x));
    }
    return result;
}

/// Derivation extension computed through an arbitrary frame; the two
/// orderings of the reciprocal pair give the same value.
inline Multivector generalize_apply_in_frame(const PqExtensor& t, const Multivector& x,
                                             const Frame& f, bool reciprocal_inside = true) {
    detail::require_operator(t);
    require_same_dim(t.dim(), x.dim());
    require_same_dim(t.dim(), f.dim());
    const Frame recip = reciprocal_frame(f);
    const Frame& inside = reciprocal_inside ? recip : f;
    const Frame& outside = reciprocal_inside ? f : recip;
    Multivector result = Multivector::zero(x.dim());
    for (int k = 1; k <= x.dim(); ++k) {
        result = result + wedge(t.apply(inside.vector(k)), left_contraction(outside.vector(k), x));
    }
    return result;
}

inline GeneralExtensor generalize_matrix(const PqExtensor& t) {
    detail::require_operator(t);
    const std::size_t full = std::size_t{1} << t.dim();
    std::vector<Multivector> images;
    images.reserve(full);
    for (std::size_t m = 0; m < full; ++m) {
        images.push_back(generalize_apply(t, Multivector::blade(t.dim(), static_cast<BladeMask>(m))));
    }
    return GeneralExtensor::from_images(t.dim(), images);
}

/// Characteristic bivector of a (1,1)-extensor, the sum of t(u_k) ^ u_k;
/// zero exactly when t is symmetric, frame independent.
inline Multivector biv(const PqExtensor& t) {
    detail::require_operator(t);
    Multivector result = Multivector::zero(t.dim());
    for (int k = 1; k <= t.dim(); ++k) {
        result = result + wedge(t.image(static_cast<std::size_t>(k - 1)),
                                Multivector::basis_vector(t.dim(), k));
    }
    return result;
}

inline Multivector biv_in_frame(const PqExtensor& t, const Frame& f) {
    detail::require_operator(t);
    require_same_dim(t.dim(), f.dim());
    const Frame recip = reciprocal_frame(f);
    Multivector result = Multivector::zero(t.dim());
    for (int k = 1; k <= t.dim(); ++k) {
        result = result + wedge(t.apply(recip.vector(k)), f.vector(k));
    }
    return result;
}

/// Symmetric and skew parts (t + t')/2 and (t - t')/2.
inline std::pair<PqExtensor, PqExtensor> sym_skew_parts(const PqExtensor& t) {
    detail::require_operator(t);
    const PqExtensor adj = adjoint(t);
    const PqExtensor sym = scale(add(t, adj), 0.5);
    const PqExtensor skew = scale(add(t, scale(adj, -1.0)), 0.5);
    return {sym, skew};
}

} // namespace exta
