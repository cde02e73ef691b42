#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "exta/determinant.hpp"
#include "exta/extensors.hpp"
#include "exta/frame.hpp"
#include "exta/multivector.hpp"

namespace exta {

/// splitmix64 generator. Small state, reproducible across platforms; the
/// seed printed by the check suite replays the exact run.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

inline Multivector random_multivector(SplitMix64& rng, int dim) {
    std::vector<double> coeffs(std::size_t{1} << dim);
    for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
    return Multivector(dim, std::move(coeffs));
}

inline Multivector random_vector(SplitMix64& rng, int dim) {
    MultivectorBuilder b(dim);
    for (int i = 0; i < dim; ++i) b.set(BladeMask{1} << i, rng.uniform(-1.0, 1.0));
    return b.take();
}

inline Multivector random_homogeneous(SplitMix64& rng, int dim, int grade) {
    MultivectorBuilder b(dim);
    for (BladeMask m : blades_of_grade(dim, grade)) b.set(m, rng.uniform(-1.0, 1.0));
    return b.take();
}

inline GradeSet random_grade_set(SplitMix64& rng, int dim) {
    std::vector<int> grades;
    for (int g = 0; g <= dim; ++g) {
        if (rng.next() & 1u) grades.push_back(g);
    }
    return GradeSet(dim, grades);
}

inline Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.uniform(-1.0, 1.0);
    }
    return m;
}

inline PqExtensor random_pq_extensor(SplitMix64& rng, int dim, int p, int q) {
    return PqExtensor(dim, p, q, random_matrix(rng, binomial(dim, p), binomial(dim, q)));
}

inline PqExtensor random_operator(SplitMix64& rng, int dim) {
    return random_pq_extensor(rng, dim, 1, 1);
}

/// Random (1,1)-extensor with determinant comfortably above the singularity
/// threshold; draws until the determinant clears a percent of the Hadamard
/// bound, keeping inverses and transported frames well conditioned.
inline PqExtensor random_nonsingular_operator(SplitMix64& rng, int dim) {
    for (;;) {
        PqExtensor t = random_operator(rng, dim);
        if (std::fabs(det(t)) > 1e-2 * t.matrix().row_norm_product()) return t;
    }
}

/// Random orthogonal (1,1)-extensor via Gram-Schmidt on random images. A
/// second projection pass restores the orthogonality that cancellation in
/// the first pass can erode; near-dependent draws are rejected outright.
inline PqExtensor random_orthogonal_operator(SplitMix64& rng, int dim) {
    for (;;) {
        std::vector<Multivector> rows;
        bool degenerate = false;
        for (int i = 0; i < dim && !degenerate; ++i) {
            Multivector v = random_vector(rng, dim);
            for (int pass = 0; pass < 2; ++pass) {
                for (const Multivector& u : rows) v = v - u * scalar_product(u, v);
                const double norm = v.norm();
                if (pass == 0 && norm < 1e-3) {
                    degenerate = true;
                    break;
                }
                v = v * (1.0 / norm);
            }
            if (!degenerate) rows.push_back(v);
        }
        if (!degenerate) return PqExtensor::from_images(dim, 1, 1, rows);
    }
}

inline GeneralExtensor random_general_extensor(SplitMix64& rng, int dim) {
    const std::size_t full = std::size_t{1} << dim;
    return GeneralExtensor(dim, random_matrix(rng, full, full));
}

inline ElementaryKExtensor random_elementary_extensor(SplitMix64& rng, int dim, int k, int q) {
    return ElementaryKExtensor(
        dim, k, q, random_matrix(rng, ElementaryKExtensor::pow_dim(dim, k), binomial(dim, q)));
}

inline Frame random_frame(SplitMix64& rng, int dim) {
    for (;;) {
        std::vector<Multivector> vs;
        for (int i = 0; i < dim; ++i) vs.push_back(random_vector(rng, dim));
        try {
            Frame f(std::move(vs));
            // Keep the conditioning comfortable: reciprocal-based identities
            // are compared at 1e-9, and the reciprocal frame itself must stay
            // clear of the singularity threshold.
            auto gj = gauss_jordan_invert(f.gram());
            if (std::fabs(gj.det) < 1e-3 * f.gram().row_norm_product()) continue;
            reciprocal_frame(f);
            return f;
        } catch (const SingularFrame&) {
        }
    }
}

inline Frame random_orthonormal_frame(SplitMix64& rng, int dim) {
    const PqExtensor rot = random_orthogonal_operator(rng, dim);
    std::vector<Multivector> vs;
    for (int i = 0; i < dim; ++i) vs.push_back(rot.image(static_cast<std::size_t>(i)));
    return Frame(std::move(vs));
}

} // namespace exta
