#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "exta/frame.hpp"
#include "exta/random.hpp"

using namespace exta;

namespace {

Multivector vec(int dim, std::vector<double> coords) {
    MultivectorBuilder b(dim);
    for (std::size_t i = 0; i < coords.size(); ++i) b.set(BladeMask{1} << i, coords[i]);
    return b.take();
}

} // namespace

TEST_CASE("reciprocal of the canonical frame is itself") {
    const Frame f = Frame::canonical(3);
    const Frame r = reciprocal_frame(f);
    for (int j = 1; j <= 3; ++j) {
        CHECK(approx_equal(r.vector(j), f.vector(j)));
    }
}

TEST_CASE("reciprocal frame from a hand-inverted Gram matrix") {
    // e1 = u1, e2 = u1 + u2; gram = [[1,1],[1,2]], inverse [[2,-1],[-1,1]].
    const Frame f({vec(2, {1, 0}), vec(2, {1, 1})});
    const Frame r = reciprocal_frame(f);
    CHECK(approx_equal(r.vector(1), vec(2, {1, -1})));
    CHECK(approx_equal(r.vector(2), vec(2, {0, 1})));

    for (int j = 1; j <= 2; ++j) {
        for (int k = 1; k <= 2; ++k) {
            CHECK(approx_equal(scalar_product(f.vector(j), r.vector(k)), j == k ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("dependent vectors are rejected") {
    CHECK_THROWS_AS(Frame({vec(2, {1, 1}), vec(2, {2, 2})}), SingularFrame);
    CHECK_THROWS_AS(Frame({vec(2, {1, 0}), vec(2, {0, 0})}), Error);
    CHECK_THROWS_AS(Frame({Multivector::blade(2, 0b11), vec(2, {0, 1})}), Error);
}

TEST_CASE("is_orthonormal") {
    CHECK(is_orthonormal(Frame::canonical(3)));
    CHECK_FALSE(is_orthonormal(Frame({vec(2, {2, 0}), vec(2, {0, 1})})));

    const double a = std::acos(-1.0) / 7.0;
    const Frame rotated({vec(2, {std::cos(a), std::sin(a)}), vec(2, {-std::sin(a), std::cos(a)})});
    CHECK(is_orthonormal(rotated));
}

TEST_CASE("induced blades") {
    const Frame f = Frame::canonical(3);
    CHECK(approx_equal(induced_blade(f, std::vector<int>{1, 2}), Multivector::blade(3, 0b011)));
    CHECK(approx_equal(induced_blade(f, std::vector<int>{}), Multivector::scalar(3, 1.0)));

    const Frame g({vec(2, {1, 0}), vec(2, {1, 1})});
    CHECK(approx_equal(induced_blade(g, std::vector<int>{1, 2}), Multivector::blade(2, 0b11)));

    CHECK_THROWS_AS(induced_blade(f, std::vector<int>{2, 1}), Error);
    CHECK_THROWS_AS(induced_blade(f, std::vector<int>{1, 4}), Error);
}

TEST_CASE("double reciprocal returns the frame") {
    SplitMix64 rng(41);
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const Frame f = random_frame(rng, n);
            const Frame rr = reciprocal_frame(reciprocal_frame(f));
            for (int j = 1; j <= n; ++j) {
                CHECK(approx_equal(rr.vector(j), f.vector(j), 1e-9, 1e-9));
            }
        }
    }
}

TEST_CASE("vector expansion over a reciprocal pair") {
    SplitMix64 rng(42);
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const Frame f = random_frame(rng, n);
            const Frame r = reciprocal_frame(f);
            const Multivector v = random_vector(rng, n);
            Multivector sum = Multivector::zero(n);
            for (int k = 1; k <= n; ++k) {
                sum = sum + f.vector(k) * scalar_product(v, r.vector(k));
            }
            CHECK(approx_equal(sum, v, 1e-9, 1e-9));
        }
    }
}

TEST_CASE("induced blade pairing is a delta") {
    SplitMix64 rng(43);
    for (int n = 2; n <= 4; ++n) {
        const Frame f = random_frame(rng, n);
        const Frame r = reciprocal_frame(f);
        const BladeMask full = BladeMask{1} << n;
        for (BladeMask a = 0; a < full; ++a) {
            for (BladeMask b = 0; b < full; ++b) {
                const double got = scalar_product(induced_blade(f, a), induced_blade(r, b));
                CHECK(approx_equal(got, a == b ? 1.0 : 0.0, 1e-9, 1e-9));
            }
        }
        // Top-grade pairing in particular.
        CHECK(approx_equal(scalar_product(induced_blade(f, full - 1), induced_blade(r, full - 1)),
                           1.0));
    }
}
