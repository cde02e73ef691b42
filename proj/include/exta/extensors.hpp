#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exta/blades.hpp"
#include "exta/core.hpp"
#include "exta/frame.hpp"
#include "exta/matrix.hpp"
#include "exta/multivector.hpp"

namespace exta {

/// Linear map from p-vectors to q-vectors, stored as a C(n,p) x C(n,q)
/// coefficient matrix over canonical blades: row a holds the coordinates of
/// the image of the a-th canonical p-blade (colex order).
class PqExtensor {
public:
    PqExtensor(int dim, int p, int q, Matrix m)
        : dim_(dim), p_(p), q_(q), m_(std::move(m)) {
        require_dim(dim);
        if (p < 0 || p > dim || q < 0 || q > dim) throw GradeMismatch("extensor grade out of range");
        if (m_.rows() != binomial(dim, p) || m_.cols() != binomial(dim, q)) {
            throw Error("extensor matrix shape must be C(n,p) x C(n,q)");
        }
    }

    static PqExtensor zero(int dim, int p, int q) {
        return PqExtensor(dim, p, q,
                          Matrix(binomial(dim, p), binomial(dim, q)));
    }

    static PqExtensor identity(int dim, int p) {
        return PqExtensor(dim, p, p, Matrix::identity(binomial(dim, p)));
    }

    /// Build from the images of the canonical p-blades, given in colex order.
    static PqExtensor from_images(int dim, int p, int q,
                                  const std::vector<Multivector>& images) {
        Matrix m(binomial(dim, p), binomial(dim, q));
        if (images.size() != m.rows()) throw Error("wrong number of blade images");
        const auto out_blades = blades_of_grade(dim, q);
        for (std::size_t a = 0; a < images.size(); ++a) {
            require_same_dim(dim, images[a].dim());
            if (!images[a].is_homogeneous(q)) {
                throw GradeMismatch("blade image must be homogeneous of the output grade");
            }
            for (std::size_t b = 0; b < out_blades.size(); ++b) {
                m.at(a, b) = images[a].coeff(out_blades[b]);
            }
        }
        return PqExtensor(dim, p, q, std::move(m));
    }

    int dim() const { return dim_; }
    int p() const { return p_; }
    int q() const { return q_; }
    const Matrix& matrix() const { return m_; }

    /// Image of the a-th canonical p-blade as a multivector.
    Multivector image(std::size_t a) const {
        MultivectorBuilder r(dim_);
        const auto out_blades = blades_of_grade(dim_, q_);
        for (std::size_t b = 0; b < out_blades.size(); ++b) r.set(out_blades[b], m_.at(a, b));
        return r.take();
    }

    /// Apply to a homogeneous multivector of grade p. Inputs with any
    /// component outside grade p are rejected rather than projected.
    Multivector apply(const Multivector& x) const {
        require_same_dim(dim_, x.dim());
        if (!x.is_homogeneous(p_)) {
            throw GradeMismatch("input must be homogeneous of grade " + std::to_string(p_));
        }
        const auto in_blades = blades_of_grade(dim_, p_);
        const auto out_blades = blades_of_grade(dim_, q_);
        MultivectorBuilder r(dim_);
        for (std::size_t a = 0; a < in_blades.size(); ++a) {
            const double xa = x.coeff(in_blades[a]);
            if (xa == 0.0) continue;
            for (std::size_t b = 0; b < out_blades.size(); ++b) {
                r.add(out_blades[b], xa * m_.at(a, b));
            }
        }
        return r.take();
    }

private:
    int dim_, p_, q_;
    Matrix m_;
};

/// Linear operator on the whole exterior algebra, stored as a 2^n x 2^n
/// coefficient matrix over canonical blades (row = input mask, column =
/// output mask).
class GeneralExtensor {
public:
    GeneralExtensor(int dim, Matrix m) : dim_(dim), m_(std::move(m)) {
        require_dim(dim);
        const std::size_t full = std::size_t{1} << dim;
        if (m_.rows() != full || m_.cols() != full) {
            throw Error("general extensor matrix must be 2^n x 2^n");
        }
    }

    static GeneralExtensor zero(int dim) {
        require_dim(dim);
        const std::size_t full = std::size_t{1} << dim;
        return GeneralExtensor(dim, Matrix(full, full));
    }

    static GeneralExtensor identity(int dim) {
        require_dim(dim);
        return GeneralExtensor(dim, Matrix::identity(std::size_t{1} << dim));
    }

    static GeneralExtensor from_images(int dim, const std::vector<Multivector>& images) {
        require_dim(dim);
        const std::size_t full = std::size_t{1} << dim;
        if (images.size() != full) throw Error("wrong number of blade images");
        Matrix m(full, full);
        for (std::size_t a = 0; a < full; ++a) {
            require_same_dim(dim, images[a].dim());
            for (std::size_t b = 0; b < full; ++b) m.at(a, b) = images[a].coeff(b);
        }
        return GeneralExtensor(dim, std::move(m));
    }

    int dim() const { return dim_; }
    const Matrix& matrix() const { return m_; }

    Multivector image(BladeMask a) const {
        MultivectorBuilder r(dim_);
        for (std::size_t b = 0; b < m_.cols(); ++b) r.set(static_cast<BladeMask>(b), m_.at(a, b));
        return r.take();
    }

    Multivector apply(const Multivector& x) const {
        require_same_dim(dim_, x.dim());
        MultivectorBuilder r(dim_);
        for (std::size_t a = 0; a < m_.rows(); ++a) {
            const double xa = x.coeff(static_cast<BladeMask>(a));
            if (xa == 0.0) continue;
            for (std::size_t b = 0; b < m_.cols(); ++b) r.add(static_cast<BladeMask>(b), xa * m_.at(a, b));
        }
        return r.take();
    }

private:
    int dim_;
    Matrix m_;
};

/// Composition s after t for maps with matching middle grade. With row =
/// input storage the coefficient matrix of s.t is matrix(t) * matrix(s).
inline PqExtensor compose(const PqExtensor& s, const PqExtensor& t) {
    require_same_dim(s.dim(), t.dim());
    if (t.q() != s.p()) throw GradeMismatch("composition grades do not chain");
    return PqExtensor(s.dim(), t.p(), s.q(), multiply(t.matrix(), s.matrix()));
}

inline GeneralExtensor compose(const GeneralExtensor& s, const GeneralExtensor& t) {
    require_same_dim(s.dim(), t.dim());
    return GeneralExtensor(s.dim(), multiply(t.matrix(), s.matrix()));
}

inline PqExtensor add(const PqExtensor& a, const PqExtensor& b) {
    require_same_dim(a.dim(), b.dim());
    if (a.p() != b.p() || a.q() != b.q()) throw GradeMismatch("extensor sum grade mismatch");
    return PqExtensor(a.dim(), a.p(), a.q(), add(a.matrix(), b.matrix()));
}

inline PqExtensor scale(const PqExtensor& a, double s) {
    return PqExtensor(a.dim(), a.p(), a.q(), scale(a.matrix(), s));
}

inline bool approx_equal(const PqExtensor& a, const PqExtensor& b, double rel = kRelTol,
                         double abs = kAbsTol) {
    return a.dim() == b.dim() && a.p() == b.p() && a.q() == b.q() &&
           approx_equal(a.matrix(), b.matrix(), rel, abs);
}

inline bool approx_equal(const GeneralExtensor& a, const GeneralExtensor& b,
                         double rel = kRelTol, double abs = kAbsTol) {
    return a.dim() == b.dim() && approx_equal(a.matrix(), b.matrix(), rel, abs);
}

/// Multilinear map taking k vector arguments to q-vectors, stored as the
/// n^k x C(n,q) component tensor over the canonical frame. Tuple (j1..jk)
/// of 1-based indices flattens row-major with j1 most significant.
class ElementaryKExtensor {
public:
    ElementaryKExtensor(int dim, int k, int q, Matrix components)
        : dim_(dim), k_(k), q_(q), comp_(std::move(components)) {
        require_dim(dim);
        if (k < 1) throw Error("elementary extensor arity must be at least 1");
        if (q < 0 || q > dim) throw GradeMismatch("output grade out of range");
        const std::uint64_t rows = pow_dim(dim, k);
        const std::uint64_t entries = rows * binomial(dim, q);
        if (entries > kMaxEntries) {
            throw Error("elementary extensor storage exceeds the " +
                        std::to_string(kMaxEntries) + "-entry cap");
        }
        if (comp_.rows() != rows || comp_.cols() != binomial(dim, q)) {
            throw Error("component tensor shape must be n^k x C(n,q)");
        }
    }

    static ElementaryKExtensor zero(int dim, int k, int q) {
        require_dim(dim);
        if (k < 1) throw Error("elementary extensor arity must be at least 1");
        const std::uint64_t entries = pow_dim(dim, k) * binomial(dim, q);
        if (entries > kMaxEntries) {
            throw Error("elementary extensor storage exceeds the " +
                        std::to_string(kMaxEntries) + "-entry cap");
        }
        return ElementaryKExtensor(dim, k, q,
                                   Matrix(pow_dim(dim, k), binomial(dim, q)));
    }

    static constexpr std::uint64_t kMaxEntries = 1000000;

    int dim() const { return dim_; }
    int arity() const { return k_; }
    int q() const { return q_; }
    const Matrix& components() const { return comp_; }

    /// Flat row index of a tuple of 1-based vector indices.
    std::size_t tuple_index(const std::vector<int>& tuple) const {
        if (tuple.size() != static_cast<std::size_t>(k_)) throw Error("tuple arity mismatch");
        std::size_t idx = 0;
        for (int j : tuple) {
            if (j < 1 || j > dim_) throw Error("tuple index out of range");
            idx = idx * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j - 1);
        }
        return idx;
    }

    /// Evaluate on exactly k grade-1 arguments; multilinear in each slot.
    Multivector eval(const std::vector<Multivector>& args) const {
        if (args.size() != static_cast<std::size_t>(k_)) {
            throw Error("expected " + std::to_string(k_) + " vector arguments");
        }
        for (const Multivector& v : args) {
            require_same_dim(dim_, v.dim());
            if (!v.is_homogeneous(1)) throw GradeMismatch("arguments must be grade 1");
        }
        const auto out_blades = blades_of_grade(dim_, q_);
        MultivectorBuilder r(dim_);
        std::vector<int> tuple(static_cast<std::size_t>(k_), 1);
        const std::size_t rows = comp_.rows();
        for (std::size_t row = 0; row < rows; ++row) {
            // decode row into the tuple (j1 most significant)
            std::size_t rem = row;
            for (int slot = k_ - 1; slot >= 0; --slot) {
                tuple[static_cast<std::size_t>(slot)] =
                    static_cast<int>(rem % static_cast<std::size_t>(dim_)) + 1;
                rem /= static_cast<std::size_t>(dim_);
            }
            double weight = 1.0;
            for (int slot = 0; slot < k_; ++slot) {
                const BladeMask m = BladeMask{1} << (tuple[static_cast<std::size_t>(slot)] - 1);
                weight *= args[static_cast<std::size_t>(slot)].coeff(m);
                if (weight == 0.0) break;
            }
            if (weight == 0.0) continue;
            for (std::size_t b = 0; b < out_blades.size(); ++b) {
                r.add(out_blades[b], weight * comp_.at(row, b));
            }
        }
        return r.take();
    }

    static std::uint64_t pow_dim(int dim, int k) {
        std::uint64_t r = 1;
        for (int i = 0; i < k; ++i) {
            r *= static_cast<std::uint64_t>(dim);
            if (r > kMaxEntries) return r; // caller's cap check reports the error
        }
        return r;
    }

private:
    int dim_, k_, q_;
    Matrix comp_;
};

inline bool approx_equal(const ElementaryKExtensor& a, const ElementaryKExtensor& b,
                         double rel = kRelTol, double abs = kAbsTol) {
    return a.dim() == b.dim() && a.arity() == b.arity() && a.q() == b.q() &&
           approx_equal(a.components(), b.components(), rel, abs);
}

/// Complete skew-symmetry in the vector slots; arity 1 (and the arity-0
/// convention) count as skew by definition.
inline bool is_exform(const ElementaryKExtensor& t, double rel = kRelTol,
                      double abs = kAbsTol) {
    const int k = t.arity();
    if (k <= 1) return true;
    const int n = t.dim();
    const std::size_t rows = t.components().rows();
    const std::size_t cols = t.components().cols();
    const double bound = std::max(abs, rel * t.components().max_abs());

    std::vector<int> tuple(static_cast<std::size_t>(k));
    for (std::size_t row = 0; row < rows; ++row) {
        std::size_t rem = row;
        for (int slot = k - 1; slot >= 0; --slot) {
            tuple[static_cast<std::size_t>(slot)] = static_cast<int>(rem % static_cast<std::size_t>(n)) + 1;
            rem /= static_cast<std::size_t>(n);
        }
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                std::vector<int> swapped = tuple;
                std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(j)]);
                const std::size_t other = t.tuple_index(swapped);
                for (std::size_t b = 0; b < cols; ++b) {
                    if (std::fabs(t.components().at(row, b) + t.components().at(other, b)) > bound) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// --- component sets --------------------------------------------------------

enum class Variance { covariant, contravariant };

enum class ComponentKind { pq, general, elementary };

/// Components of an extensor in an arbitrary frame: scalar products of the
/// extensor's values on frame (or reciprocal-frame) blades. Stored over
/// ascending multi-indices only, one representative per antisymmetric class.
struct ComponentSet {
    ComponentKind kind;
    Variance variance;
    Frame frame;
    int p = 0, q = 0, k = 0; // pq kinds use p,q; elementary kinds use k,q
    Matrix values;
};

namespace detail {

/// Coordinates of the grade-g induced blades of a frame over canonical
/// g-blades: column j holds the j-th induced blade.
inline Matrix induced_blade_coords(const Frame& f, int g) {
    const auto masks = blades_of_grade(f.dim(), g);
    Matrix coords(masks.size(), masks.size());
    for (std::size_t j = 0; j < masks.size(); ++j) {
        const Multivector blade = induced_blade(f, masks[j]);
        for (std::size_t a = 0; a < masks.size(); ++a) coords.at(a, j) = blade.coeff(masks[a]);
    }
    return coords;
}

/// Coordinates of every induced blade over all canonical blades, 2^n square.
inline Matrix induced_blade_coords_full(const Frame& f) {
    const std::size_t full = std::size_t{1} << f.dim();
    Matrix coords(full, full);
    for (std::size_t j = 0; j < full; ++j) {
        const Multivector blade = induced_blade(f, static_cast<BladeMask>(j));
        for (std::size_t a = 0; a < full; ++a) coords.at(a, j) = blade.coeff(static_cast<BladeMask>(a));
    }
    return coords;
}

/// Matrix W[i][j] = u_{i+1}.v_j for the frame's vectors (their coordinate
/// columns).
inline Matrix vector_coords(const Frame& f) {
    const std::size_t n = static_cast<std::size_t>(f.dim());
    Matrix w(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            w.at(i, j) = f.vectors()[j].coeff(BladeMask{1} << i);
        }
    }
    return w;
}

/// Contract one tensor slot of the n^k x m component matrix with W:
/// out[... i ...][b] = sum_j W[i][j] in[... j ...][b].
inline Matrix contract_slot(const Matrix& comp, const Matrix& w, int k, int slot, int n) {
    Matrix out(comp.rows(), comp.cols());
    std::size_t stride = 1;
    for (int s = k - 1; s > slot; --s) stride *= static_cast<std::size_t>(n);
    const std::size_t block = stride * static_cast<std::size_t>(n);
    for (std::size_t base = 0; base < comp.rows(); base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
                const std::size_t out_row = base + i * stride + off;
                for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
                    const double wij = w.at(i, j);
                    if (wij == 0.0) continue;
                    const std::size_t in_row = base + j * stride + off;
                    for (std::size_t b = 0; b < comp.cols(); ++b) {
                        out.at(out_row, b) += wij * comp.at(in_row, b);
                    }
                }
            }
        }
    }
    return out;
}

} // namespace detail

/// Components of a (p,q)-extensor: value[J][K] is the extensor applied to
/// the J-th induced p-blade, dotted with the K-th induced q-blade, of the
/// frame itself (covariant) or its reciprocal (contravariant).
inline ComponentSet components(const PqExtensor& t, const Frame& f, Variance variance) {
    require_same_dim(t.dim(), f.dim());
    const Frame& eval = (variance == Variance::covariant) ? f : reciprocal_frame(f);
    const auto in_masks = blades_of_grade(t.dim(), t.p());
    const auto out_masks = blades_of_grade(t.dim(), t.q());
    Matrix values(in_masks.size(), out_masks.size());
    for (std::size_t a = 0; a < in_masks.size(); ++a) {
        const Multivector img = t.apply(induced_blade(eval, in_masks[a]));
        for (std::size_t b = 0; b < out_masks.size(); ++b) {
            values.at(a, b) = scalar_product(img, induced_blade(eval, out_masks[b]));
        }
    }
    return ComponentSet{ComponentKind::pq, variance, f, t.p(), t.q(), 0, std::move(values)};
}

inline ComponentSet components(const GeneralExtensor& t, const Frame& f, Variance variance) {
    require_same_dim(t.dim(), f.dim());
    const Frame& eval = (variance == Variance::covariant) ? f : reciprocal_frame(f);
    const std::size_t full = std::size_t{1} << t.dim();
    std::vector<Multivector> blades;
    blades.reserve(full);
    for (std::size_t j = 0; j < full; ++j) {
        blades.push_back(induced_blade(eval, static_cast<BladeMask>(j)));
    }
    Matrix values(full, full);
    for (std::size_t a = 0; a < full; ++a) {
        const Multivector img = t.apply(blades[a]);
        for (std::size_t b = 0; b < full; ++b) values.at(a, b) = scalar_product(img, blades[b]);
    }
    return ComponentSet{ComponentKind::general, variance, f, 0, 0, 0, std::move(values)};
}

inline ComponentSet components(const ElementaryKExtensor& t, const Frame& f,
                               Variance variance) {
    require_same_dim(t.dim(), f.dim());
    const Frame& eval = (variance == Variance::covariant) ? f : reciprocal_frame(f);
    const int n = t.dim();
    const int k = t.arity();
    const auto out_masks = blades_of_grade(n, t.q());
    std::vector<Multivector> out_blades;
    out_blades.reserve(out_masks.size());
    for (BladeMask m : out_masks) out_blades.push_back(induced_blade(eval, m));

    Matrix values(t.components().rows(), out_masks.size());
    std::vector<Multivector> args;
    std::vector<int> tuple(static_cast<std::size_t>(k));
    for (std::size_t row = 0; row < values.rows(); ++row) {
        std::size_t rem = row;
        for (int slot = k - 1; slot >= 0; --slot) {
            tuple[static_cast<std::size_t>(slot)] = static_cast<int>(rem % static_cast<std::size_t>(n)) + 1;
            rem /= static_cast<std::size_t>(n);
        }
        args.clear();
        for (int slot = 0; slot < k; ++slot) args.push_back(eval.vector(tuple[static_cast<std::size_t>(slot)]));
        const Multivector img = t.eval(args);
        for (std::size_t b = 0; b < out_blades.size(); ++b) {
            values.at(row, b) = scalar_product(img, out_blades[b]);
        }
    }
    return ComponentSet{ComponentKind::elementary, variance, f, 0, t.q(), k, std::move(values)};
}

using AnyExtensor = std::variant<PqExtensor, GeneralExtensor, ElementaryKExtensor>;

/// Rebuild the extensor from its components via the expansion over basis
/// extensors. Covariant components pair with reciprocal-frame basis
/// extensors and contravariant ones with frame-built basis extensors;
/// restricting to ascending multi-indices absorbs the factorial repetition
/// factors of the unrestricted expansion.
inline AnyExtensor reconstruct(const ComponentSet& c) {
    const int n = c.frame.dim();
    const Frame dualf =
        (c.variance == Variance::covariant) ? reciprocal_frame(c.frame) : c.frame;
    switch (c.kind) {
        case ComponentKind::pq: {
            if (c.p < 0 || c.p > n || c.q < 0 || c.q > n ||
                c.values.rows() != binomial(n, c.p) || c.values.cols() != binomial(n, c.q)) {
                throw MalformedComponents("component shape does not match a (p,q)-extensor");
            }
            // t(u_A) = sum_{J,K} V[J][K] (d_J . u_A) d_K with d the dual
            // blades, so the canonical matrix is P V Q with P[a][J] the
            // canonical coordinates of d_J and Q[K][b] likewise.
            const Matrix pcoords = detail::induced_blade_coords(dualf, c.p);
            const Matrix qcoords = transpose(detail::induced_blade_coords(dualf, c.q));
            return PqExtensor(n, c.p, c.q, multiply(multiply(pcoords, c.values), qcoords));
        }
        case ComponentKind::general: {
            const std::size_t full = std::size_t{1} << n;
            if (c.values.rows() != full || c.values.cols() != full) {
                throw MalformedComponents("component shape does not match a general extensor");
            }
            const Matrix pcoords = detail::induced_blade_coords_full(dualf);
            const Matrix qcoords = transpose(pcoords);
            return GeneralExtensor(n, multiply(multiply(pcoords, c.values), qcoords));
        }
        case ComponentKind::elementary: {
            if (c.k < 1 || c.q < 0 || c.q > n ||
                c.values.rows() != ElementaryKExtensor::pow_dim(n, c.k) ||
                c.values.cols() != binomial(n, c.q)) {
                throw MalformedComponents("component shape does not match an elementary extensor");
            }
            // Each slot contracts with the canonical coordinates of the dual
            // vectors; the output index transforms like a q-blade.
            const Matrix w = detail::vector_coords(dualf);
            Matrix comp = c.values;
            for (int slot = 0; slot < c.k; ++slot) {
                comp = detail::contract_slot(comp, w, c.k, slot, n);
            }
            comp = multiply(comp, transpose(detail::induced_blade_coords(dualf, c.q)));
            return ElementaryKExtensor(n, c.k, c.q, std::move(comp));
        }
    }
    throw MalformedComponents("unknown component kind");
}

// --- dimension formulas -----------------------------------------------------

enum class SpaceKind { pq, general, elementary, exform };

/// Closed-form dimension of an extensor space: C(n,p)C(n,q) for (p,q)-maps,
/// 2^n 2^n for general extensors, n^k C(n,q) for elementary k-extensors and
/// C(n,k)C(n,p) for k-exforms.
inline std::uint64_t dim_of(SpaceKind kind, int n, int a = 0, int b = 0) {
    require_dim(n);
    auto check_grade = [n](int g) {
        if (g < 0 || g > n) throw GradeMismatch("grade out of range");
    };
    switch (kind) {
        case SpaceKind::pq:
            check_grade(a);
            check_grade(b);
            return binomial(n, a) * binomial(n, b);
        case SpaceKind::general:
            return (std::uint64_t{1} << n) * (std::uint64_t{1} << n);
        case SpaceKind::elementary: {
            if (a < 1) throw Error("elementary arity must be at least 1");
            check_grade(b);
            std::uint64_t r = 1;
            for (int i = 0; i < a; ++i) r *= static_cast<std::uint64_t>(n);
            return r * binomial(n, b);
        }
        case SpaceKind::exform:
            check_grade(a);
            check_grade(b);
            return binomial(n, a) * binomial(n, b);
    }
    throw Error("unknown space kind");
}

} // namespace exta
