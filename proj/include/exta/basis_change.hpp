#pragma once

#include <utility>
#include <vector>

#include "exta/core.hpp"
#include "exta/determinant.hpp"
#include "exta/extensors.hpp"
#include "exta/frame.hpp"
#include "exta/operators.hpp"

namespace exta {

/// The unique invertible (1,1)-extensor carrying the frame E onto E', in
/// this order: eps(e_k) = e'_k. Defined pointwise by eps(v) = sum_s
/// (e^s.v) e'_s over the reciprocal of E.
inline PqExtensor changing_basis(const Frame& e, const Frame& eprime) {
    require_same_dim(e.dim(), eprime.dim());
    const int n = e.dim();
    const Frame recip = reciprocal_frame(e);
    Matrix rows(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int s = 1; s <= n; ++s) {
            const double w = recip.vector(s).coeff(BladeMask{1} << i);
            if (w == 0.0) continue;
            for (int b = 0; b < n; ++b) {
                rows.at(static_cast<std::size_t>(i), static_cast<std::size_t>(b)) +=
                    w * eprime.vector(s).coeff(BladeMask{1} << b);
            }
        }
    }
    return PqExtensor(n, 1, 1, std::move(rows));
}

/// Transport of a reciprocal frame pair by an invertible (1,1)-extensor:
/// e_k = f(b_k) and e^k = f*(b^k) with f* = (f adjoint) inverse. The two
/// returned frames are reciprocal to each other, and an orthogonal f maps
/// orthonormal frames to orthonormal frames.
inline std::pair<Frame, Frame> frame_transport(const PqExtensor& f, const Frame& b) {
    detail::require_operator(f);
    require_same_dim(f.dim(), b.dim());
    const PqExtensor f_star = invert(adjoint(f));
    const Frame b_recip = reciprocal_frame(b);
    std::vector<Multivector> direct;
    std::vector<Multivector> recip;
    for (int k = 1; k <= b.dim(); ++k) {
        direct.push_back(f.apply(b.vector(k)));
        recip.push_back(f_star.apply(b_recip.vector(k)));
    }
    return {Frame(std::move(direct)), Frame(std::move(recip))};
}

/// The unique extensor mapping frame B onto frame E, recovered from the two
/// frames alone: f(v) = sum_j (b^j.v) e_j, so that f(b_k) = e_k.
inline PqExtensor recover_transport(const Frame& b, const Frame& e) {
    require_same_dim(b.dim(), e.dim());
    const int n = b.dim();
    const Frame b_recip = reciprocal_frame(b);
    Matrix rows(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const double w = b_recip.vector(j).coeff(BladeMask{1} << i);
            if (w == 0.0) continue;
            for (int col = 0; col < n; ++col) {
                rows.at(static_cast<std::size_t>(i), static_cast<std::size_t>(col)) +=
                    w * e.vector(j).coeff(BladeMask{1} << col);
            }
        }
    }
    return PqExtensor(n, 1, 1, std::move(rows));
}

} // namespace exta
