#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace exta {

/// Hard cap on the vector-space dimension: dense storage is 2^n coefficients
/// per multivector and 2^n x 2^n per general extensor.
inline constexpr int kMaxDim = 12;

/// Default comparison tolerances: relative 1e-9, absolute floor 1e-12 near zero.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

/// Scale factor for singularity thresholds (scaled by the relevant norm^n).
inline constexpr double kSingularEps = 1e-12;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct GradeMismatch : Error {
    using Error::Error;
};

struct SingularFrame : Error {
    using Error::Error;
};

struct SingularExtensor : Error {
    using Error::Error;
};

/// Shape or index data inconsistent with a component-set kind.
struct MalformedComponents : Error {
    using Error::Error;
};

inline bool approx_equal(double a, double b, double rel = kRelTol, double abs = kAbsTol) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <= std::max(abs, rel * scale);
}

inline void require_dim(int n) {
    if (n < 1 || n > kMaxDim) {
        throw Error("dimension must be between 1 and " + std::to_string(kMaxDim) +
                    ", got " + std::to_string(n));
    }
}

inline void require_same_dim(int a, int b) {
    if (a != b) {
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
    }
}

} // namespace exta
