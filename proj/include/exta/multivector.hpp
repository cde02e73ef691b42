#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "exta/blades.hpp"
#include "exta/core.hpp"

namespace exta {

/// Dense element of the full exterior algebra over an n-dimensional real
/// vector space with euclidean scalar product, stored as 2^n coefficients
/// over canonical blades of a fixed orthonormal reference frame.
///
/// Immutable after construction; all operations are pure and return new
/// values, so Multivectors may be shared freely across threads.
class Multivector {
public:
    explicit Multivector(int dim) : dim_(dim), coeffs_(std::size_t{1} << check_dim(dim), 0.0) {}

    Multivector(int dim, std::vector<double> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
        check_dim(dim);
        if (coeffs_.size() != (std::size_t{1} << dim_)) {
            throw Error("coefficient array must have 2^dim entries");
        }
        for (double c : coeffs_) {
            if (!std::isfinite(c)) throw Error("multivector coefficients must be finite");
        }
    }

    static Multivector zero(int dim) { return Multivector(dim); }

    static Multivector scalar(int dim, double value) {
        Multivector x(dim);
        x.coeffs_[0] = value;
        return x;
    }

    /// Basis vector u_j, 1-based index.
    static Multivector basis_vector(int dim, int j) {
        Multivector x(dim);
        if (j < 1 || j > dim) throw Error("basis vector index out of range");
        x.coeffs_[std::size_t{1} << (j - 1)] = 1.0;
        return x;
    }

    static Multivector blade(int dim, BladeMask mask, double coeff = 1.0) {
        Multivector x(dim);
        if (mask >= (BladeMask{1} << dim)) throw Error("blade mask out of range");
        x.coeffs_[mask] = coeff;
        return x;
    }

    int dim() const { return dim_; }
    std::size_t size() const { return coeffs_.size(); }
    double coeff(BladeMask mask) const { return coeffs_[mask]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
    }

    /// True when every nonzero coefficient sits at grade k.
    bool is_homogeneous(int k) const {
        for (BladeMask m = 0; m < coeffs_.size(); ++m) {
            if (coeffs_[m] != 0.0 && grade_of(m) != k) return false;
        }
        return true;
    }

    double norm() const {
        double s = 0.0;
        for (double c : coeffs_) s += c * c;
        return std::sqrt(s);
    }

    double max_abs_coeff() const {
        double s = 0.0;
        for (double c : coeffs_) s = std::max(s, std::fabs(c));
        return s;
    }

    Multivector operator+(const Multivector& o) const {
        require_same_dim(dim_, o.dim_);
        Multivector r(dim_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return r;
    }

    Multivector operator-(const Multivector& o) const {
        require_same_dim(dim_, o.dim_);
        Multivector r(dim_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return r;
    }

    Multivector operator-() const {
        Multivector r(dim_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
        return r;
    }

    Multivector operator*(double s) const {
        Multivector r(dim_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * s;
        return r;
    }

    friend Multivector operator*(double s, const Multivector& x) { return x * s; }

private:
    static int check_dim(int n) {
        require_dim(n);
        return n;
    }

    friend class MultivectorBuilder;

    int dim_;
    std::vector<double> coeffs_;
};

/// Accumulation helper for operations that build a result coefficient by
/// coefficient; keeps Multivector itself immutable.
class MultivectorBuilder {
public:
    explicit MultivectorBuilder(int dim) : value_(dim) {}

    void add(BladeMask mask, double c) { value_.coeffs_[mask] += c; }
    void set(BladeMask mask, double c) { value_.coeffs_[mask] = c; }

    Multivector take() { return std::move(value_); }

private:
    Multivector value_;
};

/// Set of grades {0..n} identifying a sum of homogeneous subspaces of the
/// exterior algebra; the empty set stands for the trivial subspace {0}.
class GradeSet {
public:
    explicit GradeSet(int dim) : dim_(dim), bits_(0) { require_dim(dim); }

    GradeSet(int dim, std::initializer_list<int> grades) : GradeSet(dim) {
        for (int g : grades) insert(g);
    }

    GradeSet(int dim, const std::vector<int>& grades) : GradeSet(dim) {
        for (int g : grades) insert(g);
    }

    static GradeSet empty(int dim) { return GradeSet(dim); }

    static GradeSet full(int dim) {
        GradeSet s(dim);
        s.bits_ = (std::uint32_t{1} << (dim + 1)) - 1;
        return s;
    }

    static GradeSet single(int dim, int grade) { return GradeSet(dim, {grade}); }

    int dim() const { return dim_; }
    bool is_empty() const { return bits_ == 0; }
    bool contains(int g) const { return g >= 0 && g <= dim_ && (bits_ >> g) & 1u; }

    std::vector<int> grades() const {
        std::vector<int> out;
        for (int g = 0; g <= dim_; ++g) {
            if (contains(g)) out.push_back(g);
        }
        return out;
    }

    GradeSet intersect(const GradeSet& o) const {
        require_same_dim(dim_, o.dim_);
        GradeSet s(dim_);
        s.bits_ = bits_ & o.bits_;
        return s;
    }

    GradeSet unite(const GradeSet& o) const {
        require_same_dim(dim_, o.dim_);
        GradeSet s(dim_);
        s.bits_ = bits_ | o.bits_;
        return s;
    }

    bool disjoint(const GradeSet& o) const {
        require_same_dim(dim_, o.dim_);
        return (bits_ & o.bits_) == 0;
    }

    bool operator==(const GradeSet& o) const { return dim_ == o.dim_ && bits_ == o.bits_; }

private:
    void insert(int g) {
        if (g < 0 || g > dim_) throw Error("grade out of range for grade set");
        bits_ |= std::uint32_t{1} << g;
    }

    int dim_;
    std::uint32_t bits_;
};

// --- products over canonical blades ---------------------------------------
//
// The three bilinear products below share one loop skeleton (ascending mask
// iteration, zero-coefficient skipping, += accumulation) so that algebraic
// identities relating them, e.g. ab = a.b + a^b for vectors, hold to the
// last bit and not merely to tolerance.

/// Exterior product. Grade-additive: grade p times grade q lands in grade
/// p+q, zero beyond n. On blades: u_A ^ u_B = reorder_sign(A,B) u_{A|B} when
/// A and B are disjoint, else 0.
inline Multivector wedge(const Multivector& x, const Multivector& y) {
    require_same_dim(x.dim(), y.dim());
    MultivectorBuilder r(x.dim());
    const std::size_t n = x.size();
    for (BladeMask a = 0; a < n; ++a) {
        const double xa = x.coeff(a);
        if (xa == 0.0) continue;
        for (BladeMask b = 0; b < n; ++b) {
            const double yb = y.coeff(b);
            if (yb == 0.0) continue;
            if (a & b) continue;
            r.add(a | b, reorder_sign(a, b) * (xa * yb));
        }
    }
    return r.take();
}

/// Clifford (geometric) product for the euclidean scalar product: on blades
/// u_A u_B = reorder_sign(A,B) u_{A xor B}, shared factors contracting with
/// u_i u_i = 1.
inline Multivector clifford_product(const Multivector& x, const Multivector& y) {
    require_same_dim(x.dim(), y.dim());
    MultivectorBuilder r(x.dim());
    const std::size_t n = x.size();
    for (BladeMask a = 0; a < n; ++a) {
        const double xa = x.coeff(a);
        if (xa == 0.0) continue;
        for (BladeMask b = 0; b < n; ++b) {
            const double yb = y.coeff(b);
            if (yb == 0.0) continue;
            r.add(a ^ b, reorder_sign(a, b) * (xa * yb));
        }
    }
    return r.take();
}

/// Euclidean scalar product of multivectors; canonical blades are
/// orthonormal, so this is the dot product of coefficient arrays.
inline double scalar_product(const Multivector& x, const Multivector& y) {
    require_same_dim(x.dim(), y.dim());
    double s = 0.0;
    for (BladeMask a = 0; a < x.size(); ++a) {
        const double xa = x.coeff(a);
        if (xa == 0.0) continue;
        const double yb = y.coeff(a);
        if (yb == 0.0) continue;
        s += xa * yb;
    }
    return s;
}

/// Left contraction, the adjoint of left exterior multiplication:
/// Z.(X _| Y) = (X ^ Z).Y for all Z. On blades: u_A _| u_B =
/// reorder_sign(A, B\A) u_{B\A} when A is a subset of B, else 0.
inline Multivector left_contraction(const Multivector& x, const Multivector& y) {
    require_same_dim(x.dim(), y.dim());
    MultivectorBuilder r(x.dim());
    const std::size_t n = x.size();
    for (BladeMask a = 0; a < n; ++a) {
        const double xa = x.coeff(a);
        if (xa == 0.0) continue;
        for (BladeMask b = 0; b < n; ++b) {
            const double yb = y.coeff(b);
            if (yb == 0.0) continue;
            if (a & ~b) continue;
            const BladeMask rest = b & ~a;
            r.add(rest, reorder_sign(a, rest) * (xa * yb));
        }
    }
    return r.take();
}

/// Projection onto the sum of homogeneous subspaces named by the grade set;
/// the empty set projects onto the trivial subspace, giving 0.
inline Multivector grade_project(const Multivector& x, const GradeSet& s) {
    require_same_dim(x.dim(), s.dim());
    MultivectorBuilder r(x.dim());
    for (BladeMask m = 0; m < x.size(); ++m) {
        if (x.coeff(m) != 0.0 && s.contains(grade_of(m))) r.set(m, x.coeff(m));
    }
    return r.take();
}

inline Multivector grade_part(const Multivector& x, int k) {
    return grade_project(x, GradeSet::single(x.dim(), k));
}

enum class Involution { grade_involution, reversion, conjugation };

inline Multivector involution(const Multivector& x, Involution kind) {
    MultivectorBuilder r(x.dim());
    for (BladeMask m = 0; m < x.size(); ++m) {
        const double c = x.coeff(m);
        if (c == 0.0) continue;
        const int k = grade_of(m);
        double s = 1.0;
        switch (kind) {
            case Involution::grade_involution: s = grade_involution_sign(k); break;
            case Involution::reversion: s = reversion_sign(k); break;
            case Involution::conjugation: s = conjugation_sign(k); break;
        }
        r.set(m, s * c);
    }
    return r.take();
}

inline Multivector grade_involution(const Multivector& x) {
    return involution(x, Involution::grade_involution);
}

inline Multivector reversion(const Multivector& x) {
    return involution(x, Involution::reversion);
}

inline Multivector conjugation(const Multivector& x) {
    return involution(x, Involution::conjugation);
}

/// Commutator product X x Y = (XY - YX)/2 in the Clifford algebra.
inline Multivector commutator(const Multivector& x, const Multivector& y) {
    return (clifford_product(x, y) - clifford_product(y, x)) * 0.5;
}

inline bool approx_equal(const Multivector& x, const Multivector& y, double rel = kRelTol,
                         double abs = kAbsTol) {
    require_same_dim(x.dim(), y.dim());
    const double scale = std::max(x.max_abs_coeff(), y.max_abs_coeff());
    const double bound = std::max(abs, rel * scale);
    for (BladeMask m = 0; m < x.size(); ++m) {
        if (std::fabs(x.coeff(m) - y.coeff(m)) > bound) return false;
    }
    return true;
}

} // namespace exta
