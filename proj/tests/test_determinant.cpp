#include <catch2/catch_amalgamated.hpp>

#include "exta/determinant.hpp"
#include "exta/oracles.hpp"
#include "exta/random.hpp"

using namespace exta;

namespace {

PqExtensor diag(int dim, std::vector<double> entries) {
    Matrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return PqExtensor(dim, 1, 1, std::move(m));
}

oracles::Matrix to_plain(const Matrix& m) {
    oracles::Matrix out(m.rows(), std::vector<double>(m.cols(), 0.0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
    }
    return out;
}

Matrix from_plain(const oracles::Matrix& m) {
    Matrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m[i].size(); ++j) out.at(i, j) = m[i][j];
    }
    return out;
}

} // namespace

TEST_CASE("pseudoscalar validation") {
    CHECK_NOTHROW(Pseudoscalar::canonical(3));
    CHECK_THROWS_AS(Pseudoscalar(Multivector::scalar(2, 1.0)), Error);
    CHECK_THROWS_AS(Pseudoscalar(Multivector::zero(2)), Error);
    const Pseudoscalar i(Multivector::blade(2, 0b11, -4.0));
    CHECK(i.top_coeff() == -4.0);
    CHECK(i.normalized().coeff(0b11) == 1.0);
}

TEST_CASE("determinant basics") {
    CHECK(det(PqExtensor::identity(4, 1)) == 1.0);
    CHECK(det(diag(3, {2, 3, 4})) == 24.0);

    // Dependent images wedge to zero.
    Matrix m(2, 2);
    m.at(0, 0) = 1.0;
    m.at(1, 0) = 1.0;
    CHECK(det(PqExtensor(2, 1, 1, m)) == 0.0);
}

TEST_CASE("determinant equals the permutation oracle") {
    SplitMix64 rng(91);
    for (int n = 2; n <= 6; ++n) {
        for (int rep = 0; rep < 25; ++rep) {
            const auto t = random_operator(rng, n);
            CHECK(approx_equal(det(t), oracles::oracle_det(to_plain(t.matrix()))));
        }
    }
}

TEST_CASE("determinant laws") {
    SplitMix64 rng(92);
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto t = random_nonsingular_operator(rng, n);
            const auto u = random_operator(rng, n);
            CHECK(approx_equal(det(compose(u, t)), det(u) * det(t)));
            CHECK(approx_equal(det(invert(t)), 1.0 / det(t)));
            CHECK(approx_equal(det(adjoint(t)), det(t)));
        }
    }
}

TEST_CASE("frame formulas for the determinant agree") {
    SplitMix64 rng(93);
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto t = random_operator(rng, n);
            const Frame f = random_frame(rng, n);
            const double want = det(t);
            CHECK(approx_equal(det_in_frame(t, f, true), want, 1e-9, 1e-8));
            CHECK(approx_equal(det_in_frame(t, f, false), want, 1e-9, 1e-8));
        }
    }
}

TEST_CASE("determinant and inverse are pseudoscalar independent") {
    SplitMix64 rng(94);
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto t = random_nonsingular_operator(rng, n);
            const Pseudoscalar i = Pseudoscalar::canonical(n);
            const Pseudoscalar i7(i.value() * 7.0);

            // Bit-exact agreement, not merely within tolerance.
            CHECK(det_with(t, i) == det_with(t, i7));
            const auto inv_a = invert_with(t, i);
            const auto inv_b = invert_with(t, i7);
            for (std::size_t r = 0; r < inv_a.matrix().rows(); ++r) {
                for (std::size_t c = 0; c < inv_a.matrix().cols(); ++c) {
                    CHECK(inv_a.matrix().at(r, c) == inv_b.matrix().at(r, c));
                }
            }
        }
    }
}

TEST_CASE("inversion formula") {
    CHECK(approx_equal(invert(PqExtensor::identity(3, 1)), PqExtensor::identity(3, 1)));
    CHECK(approx_equal(invert(diag(2, {2, 3})), diag(2, {0.5, 1.0 / 3.0})));

    // t(u1) = u1, t(u2) = u1 is singular.
    Matrix m(2, 2);
    m.at(0, 0) = 1.0;
    m.at(1, 0) = 1.0;
    CHECK_THROWS_AS(invert(PqExtensor(2, 1, 1, m)), SingularExtensor);
}

TEST_CASE("inversion agrees with the elimination oracle") {
    SplitMix64 rng(95);
    for (int n = 2; n <= 6; ++n) {
        for (int rep = 0; rep < 25; ++rep) {
            const auto t = random_nonsingular_operator(rng, n);
            const auto inv = invert(t);
            const auto want = PqExtensor(n, 1, 1, from_plain(oracles::oracle_inverse(to_plain(t.matrix()))));
            CHECK(approx_equal(inv, want, 1e-9, 1e-8));
            CHECK(approx_equal(compose(inv, t), PqExtensor::identity(n, 1), 1e-9, 1e-8));
            CHECK(approx_equal(compose(t, inv), PqExtensor::identity(n, 1), 1e-9, 1e-8));
        }
    }
}
