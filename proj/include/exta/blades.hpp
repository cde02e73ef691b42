#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace exta {

/// Canonical blade index: bit i set means basis vector u_{i+1} is a factor,
/// factors in ascending index order. Mask 0 is the scalar blade.
using BladeMask = std::uint32_t;

inline int grade_of(BladeMask m) { return std::popcount(m); }

/// Sign of sorting the concatenation u_A u_B into ascending order: one
/// transposition per pair (i in A, j in B) with i > j.
inline double reorder_sign(BladeMask a, BladeMask b) {
    int swaps = 0;
    a >>= 1;
    while (a != 0) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1.0 : 1.0;
}

/// Sign of the grade involution on grade k: (-1)^k.
inline double grade_involution_sign(int k) { return (k & 1) ? -1.0 : 1.0; }

/// Sign of reversion on grade k: (-1)^(k(k-1)/2).
inline double reversion_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1.0 : 1.0; }

/// Sign of conjugation on grade k: (-1)^(k(k+1)/2).
inline double conjugation_sign(int k) { return ((k * (k + 1) / 2) & 1) ? -1.0 : 1.0; }

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

/// All masks of the given grade, in increasing numeric order (colex order on
/// the underlying index sets). This is the canonical blade enumeration used
/// for extensor matrix rows and columns.
inline std::vector<BladeMask> blades_of_grade(int n, int k) {
    std::vector<BladeMask> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    const BladeMask top = BladeMask{1} << n;
    for (BladeMask m = 0; m < top; ++m) {
        if (std::popcount(m) == k) out.push_back(m);
    }
    return out;
}

/// Position of `mask` within blades_of_grade(n, grade_of(mask)); colex rank,
/// independent of n.
inline std::size_t blade_rank(BladeMask mask) {
    std::size_t rank = 0;
    int i = 0;
    for (int bit = 0; mask != 0; ++bit, mask >>= 1) {
        if (mask & 1u) {
            ++i;
            rank += static_cast<std::size_t>(binomial(bit, i));
        }
    }
    return rank;
}

/// Bit positions of `mask` in ascending order (0-based).
inline std::vector<int> mask_bits(BladeMask mask) {
    std::vector<int> bits;
    for (int b = 0; mask != 0; ++b, mask >>= 1) {
        if (mask & 1u) bits.push_back(b);
    }
    return bits;
}

} // namespace exta
