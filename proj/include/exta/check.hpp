#pragma once

// Seeded property suite behind the `check` subcommand: every proved identity
// of the operator calculus, run on random inputs with one pass/fail line per
// property. Deterministic for a given (dim, seed, tolerance) triple.

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "exta/basis_change.hpp"
#include "exta/determinant.hpp"
#include "exta/operators.hpp"
#include "exta/oracles.hpp"
#include "exta/random.hpp"

namespace exta {

struct CheckResult {
    std::string id;
    std::string label;
    bool pass = false;
};

struct CheckReport {
    int dim = 0;
    std::uint64_t seed = 0;
    double tolerance = kRelTol;
    std::vector<CheckResult> results;

    bool all_passed() const {
        for (const auto& r : results) {
            if (!r.pass) return false;
        }
        return true;
    }
};

namespace detail {

class CheckRunner {
public:
    CheckRunner(int dim, std::uint64_t seed, double tol)
        : dim_(dim), seed_(seed), rel_(tol), abs_(tol * 10.0) {}

    int dim() const { return dim_; }
    double rel() const { return rel_; }
    double abs() const { return abs_; }

    bool mv_eq(const Multivector& a, const Multivector& b) const {
        return approx_equal(a, b, rel_, abs_);
    }

    bool num_eq(double a, double b) const { return approx_equal(a, b, rel_, abs_); }

    void run(std::string id, std::string label,
             const std::function<bool(SplitMix64&)>& body) {
        // Independent stream per property: renumbering or skipping earlier
        // properties does not shift later draws.
        SplitMix64 rng(SplitMix64(seed_ + 0x517CC1B727220A95ull * (results.size() + 1)).next());
        bool pass = false;
        try {
            pass = body(rng);
        } catch (...) {
            pass = false;
        }
        results.push_back({std::move(id), std::move(label), pass});
    }

    std::vector<CheckResult> results;

private:
    int dim_;
    std::uint64_t seed_;
    double rel_;
    double abs_;
};

inline oracles::Matrix to_plain(const Matrix& m) {
    oracles::Matrix out(m.rows(), std::vector<double>(m.cols(), 0.0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
    }
    return out;
}

} // namespace detail

inline CheckReport run_check_suite(int dim, std::uint64_t seed, double tol = kRelTol) {
    if (dim < 2 || dim > 6) throw Error("check suite runs at dimensions 2 through 6");
    detail::CheckRunner c(dim, seed, tol);
    const int n = dim;
    const int trials = 10;

    // --- projector laws ----------------------------------------------------
    c.run("P.2a", "nested grade projections intersect", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto x = random_multivector(rng, n);
            const auto s1 = random_grade_set(rng, n);
            const auto s2 = random_grade_set(rng, n);
            if (!c.mv_eq(grade_project(grade_project(x, s1), s2),
                         grade_project(x, s1.intersect(s2)))) {
                return false;
            }
        }
        return true;
    });

    c.run("P.2b", "disjoint grade projections add", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto x = random_multivector(rng, n);
            const auto s1 = random_grade_set(rng, n);
            GradeSet s2 = random_grade_set(rng, n);
            std::vector<int> rest;
            for (int g = 0; g <= n; ++g) {
                if (!s1.contains(g) && s2.contains(g)) rest.push_back(g);
            }
            s2 = GradeSet(n, rest);
            if (!c.mv_eq(grade_project(x, s1) + grade_project(x, s2),
                         grade_project(x, s1.unite(s2)))) {
                return false;
            }
        }
        return true;
    });

    c.run("P.2c", "grade projection is self-adjoint", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto x = random_multivector(rng, n);
            const auto y = random_multivector(rng, n);
            const auto s = random_grade_set(rng, n);
            if (!c.num_eq(scalar_product(grade_project(x, s), y),
                          scalar_product(x, grade_project(y, s)))) {
                return false;
            }
        }
        return true;
    });

    // --- multivector product identities -------------------------------------
    c.run("X.dual", "contraction is dual to the wedge", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto a = random_vector(rng, n);
            const auto x = random_multivector(rng, n);
            const auto y = random_multivector(rng, n);
            if (!c.num_eq(scalar_product(x, left_contraction(a, y)),
                          scalar_product(wedge(a, x), y))) {
                return false;
            }
            if (!c.num_eq(scalar_product(x, wedge(a, y)),
                          scalar_product(left_contraction(a, x), y))) {
                return false;
            }
        }
        return true;
    });

    c.run("X.comm", "bivector commutator is a derivation", [&](SplitMix64& rng) {
        using Product = Multivector (*)(const Multivector&, const Multivector&);
        const Product products[] = {&wedge, &clifford_product, &left_contraction};
        for (int i = 0; i < trials; ++i) {
            const auto b = random_homogeneous(rng, n, 2);
            const auto x = random_multivector(rng, n);
            const auto y = random_multivector(rng, n);
            for (Product star : products) {
                if (!c.mv_eq(commutator(b, star(x, y)),
                             star(commutator(b, x), y) + star(x, commutator(b, y)))) {
                    return false;
                }
            }
        }
        return true;
    });

    c.run("X.cliff", "vector clifford product splits exactly", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto a = random_vector(rng, n);
            const auto b = random_vector(rng, n);
            const auto prod = clifford_product(a, b);
            const auto split = Multivector::scalar(n, scalar_product(a, b)) + wedge(a, b);
            for (BladeMask m = 0; m < prod.size(); ++m) {
                if (prod.coeff(m) != split.coeff(m)) return false;
            }
        }
        return true;
    });

    // --- frames --------------------------------------------------------------
    c.run("F.recip", "double reciprocal returns the frame", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const Frame f = random_frame(rng, n);
            const Frame rr = reciprocal_frame(reciprocal_frame(f));
            for (int k = 1; k <= n; ++k) {
                if (!c.mv_eq(rr.vector(k), f.vector(k))) return false;
            }
        }
        return true;
    });

    c.run("F.expand", "vectors expand over a reciprocal pair", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const Frame f = random_frame(rng, n);
            const Frame r = reciprocal_frame(f);
            const auto v = random_vector(rng, n);
            Multivector sum = Multivector::zero(n);
            for (int k = 1; k <= n; ++k) sum = sum + f.vector(k) * scalar_product(v, r.vector(k));
            if (!c.mv_eq(sum, v)) return false;
        }
        return true;
    });

    c.run("F.pair", "induced blades pair to a delta", [&](SplitMix64& rng) {
        const int m = std::min(n, 4);
        for (int i = 0; i < 3; ++i) {
            const Frame f = random_frame(rng, m);
            const Frame r = reciprocal_frame(f);
            const BladeMask full = BladeMask{1} << m;
            for (BladeMask a = 0; a < full; ++a) {
                for (BladeMask b = 0; b < full; ++b) {
                    if (!c.num_eq(scalar_product(induced_blade(f, a), induced_blade(r, b)),
                                  a == b ? 1.0 : 0.0)) {
                        return false;
                    }
                }
            }
        }
        return true;
    });

    // --- extensor representations -------------------------------------------
    c.run("GE.1", "extensor application is linear", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
            const int q = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
            const auto t = random_pq_extensor(rng, n, p, q);
            const auto x = random_homogeneous(rng, n, p);
            const auto y = random_homogeneous(rng, n, p);
            const double a = rng.uniform(-2.0, 2.0);
            const double b = rng.uniform(-2.0, 2.0);
            if (!c.mv_eq(t.apply(x * a + y * b), t.apply(x) * a + t.apply(y) * b)) return false;
            const auto g = random_general_extensor(rng, std::min(n, 5));
            const auto gx = random_multivector(rng, std::min(n, 5));
            const auto gy = random_multivector(rng, std::min(n, 5));
            if (!approx_equal(g.apply(gx * a + gy * b), g.apply(gx) * a + g.apply(gy) * b,
                              c.rel(), c.abs())) {
                return false;
            }
        }
        return true;
    });

    c.run("GE.rt", "component round-trips for all six kinds", [&](SplitMix64& rng) {
        const int m = std::min(n, 4);
        for (int i = 0; i < 3; ++i) {
            const Frame f = random_frame(rng, m);
            for (auto variance : {Variance::covariant, Variance::contravariant}) {
                const auto t = random_pq_extensor(rng, m, 1, std::min(2, m));
                if (!approx_equal(std::get<PqExtensor>(reconstruct(components(t, f, variance))),
                                  t, c.rel(), c.abs())) {
                    return false;
                }
                const auto g = random_general_extensor(rng, m);
                if (!approx_equal(
                        std::get<GeneralExtensor>(reconstruct(components(g, f, variance))), g,
                        c.rel(), c.abs())) {
                    return false;
                }
                const auto l = random_elementary_extensor(rng, m, 2, 1);
                if (!approx_equal(
                        std::get<ElementaryKExtensor>(reconstruct(components(l, f, variance))),
                        l, c.rel(), c.abs())) {
                    return false;
                }
            }
        }
        return true;
    });

    c.run("GE.var", "covariant components equal contravariant in the reciprocal",
          [&](SplitMix64& rng) {
              const int m = std::min(n, 4);
              for (int i = 0; i < 5; ++i) {
                  const Frame f = random_frame(rng, m);
                  const auto t = random_pq_extensor(rng, m, 1, 1);
                  const auto cov = components(t, f, Variance::covariant);
                  const auto contra =
                      components(t, reciprocal_frame(f), Variance::contravariant);
                  if (!approx_equal(cov.values, contra.values, c.rel(), c.abs())) return false;
              }
              return true;
          });

    c.run("GE.dim", "enumerated bases count to the dimension formulas", [&](SplitMix64&) {
        const int m = std::min(n, 4);
        for (int p = 0; p <= m; ++p) {
            for (int q = 0; q <= m; ++q) {
                const std::uint64_t count = binomial(m, p) * binomial(m, q);
                if (count != dim_of(SpaceKind::pq, m, p, q)) return false;
                if (count != dim_of(SpaceKind::exform, m, p, q)) return false;
            }
        }
        if ((std::uint64_t{1} << (2 * m)) != dim_of(SpaceKind::general, m)) return false;
        for (int k = 1; k <= 3; ++k) {
            for (int q = 0; q <= m; ++q) {
                if (ElementaryKExtensor::pow_dim(m, k) * binomial(m, q) !=
                    dim_of(SpaceKind::elementary, m, k, q)) {
                    return false;
                }
            }
        }
        return true;
    });

    // --- extension operator ---------------------------------------------------
    c.run("e1", "extension preserves grade", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto t = random_operator(rng, n);
            for (int k = 0; k <= n; ++k) {
                if (!extend_apply(t, random_homogeneous(rng, n, k)).is_homogeneous(k)) {
                    return false;
                }
            }
        }
        return true;
    });

    c.run("e2", "extension fixes scalars, extends vectors and simple blades",
          [&](SplitMix64& rng) {
              for (int i = 0; i < trials; ++i) {
                  const auto t = random_operator(rng, n);
                  const double alpha = rng.uniform(-3.0, 3.0);
                  if (!c.mv_eq(extend_apply(t, Multivector::scalar(n, alpha)),
                               Multivector::scalar(n, alpha))) {
                      return false;
                  }
                  const auto v = random_vector(rng, n);
                  if (!c.mv_eq(extend_apply(t, v), t.apply(v))) return false;
                  // Simple blade: wedge of random vectors.
                  Multivector blade = Multivector::scalar(n, 1.0);
                  Multivector image = Multivector::scalar(n, 1.0);
                  const int k = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
                  for (int s = 0; s < k; ++s) {
                      const auto w = random_vector(rng, n);
                      blade = wedge(blade, w);
                      image = wedge(image, t.apply(w));
                  }
                  if (!c.mv_eq(extend_apply(t, blade), image)) return false;
              }
              return true;
          });

    c.run("e3", "extension distributes over the wedge", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto t = random_operator(rng, n);
            const auto x = random_multivector(rng, n);
            const auto y = random_multivector(rng, n);
            if (!c.mv_eq(extend_apply(t, wedge(x, y)),
                         wedge(extend_apply(t, x), extend_apply(t, y)))) {
                return false;
            }
        }
        return true;
    });

    c.run("e4", "extension of a composition is the composition", [&](SplitMix64& rng) {
        for (int i = 0; i < 5; ++i) {
            const auto s = random_operator(rng, n);
            const auto t = random_operator(rng, n);
            if (!approx_equal(extend_matrix(compose(s, t)),
                              compose(extend_matrix(s), extend_matrix(t)), c.rel(), c.abs())) {
                return false;
            }
        }
        return true;
    });

    c.run("e5", "extension of the inverse is the inverse", [&](SplitMix64& rng) {
        for (int i = 0; i < 5; ++i) {
            const auto t = random_nonsingular_operator(rng, n);
            const auto lhs = extend_matrix(invert(t));
            const auto rhs = compose(lhs, extend_matrix(t));
            if (!approx_equal(rhs, GeneralExtensor::identity(n), c.rel(), c.abs())) return false;
        }
        return true;
    });

    c.run("e6", "both frame formulas compute the extension", [&](SplitMix64& rng) {
        const int m = std::min(n, 4);
        for (int i = 0; i < 5; ++i) {
            const auto t = random_operator(rng, m);
            const auto x = random_multivector(rng, m);
            const Frame f = random_frame(rng, m);
            const auto want = extend_apply(t, x);
            if (!approx_equal(extend_apply_in_frame(t, x, f, true), want, c.rel(), c.abs())) {
                return false;
            }
            if (!approx_equal(extend_apply_in_frame(t, x, f, false), want, c.rel(), c.abs())) {
                return false;
            }
        }
        return true;
    });

    // --- standard adjoint ------------------------------------------------------
    c.run("SAO.3", "adjoint duality", [&](SplitMix64& rng) {
        const int m = std::min(n, 4);
        for (int p = 0; p <= m; ++p) {
            for (int q = 0; q <= m; ++q) {
                SplitMix64 local(rng.next());
                const auto t = random_pq_extensor(local, m, p, q);
                const auto adj = adjoint(t);
                for (BladeMask a : blades_of_grade(m, p)) {
                    for (BladeMask b : blades_of_grade(m, q)) {
                        const auto x = Multivector::blade(m, a);
                        const auto y = Multivector::blade(m, b);
                        if (!c.num_eq(scalar_product(x, adj.apply(y)),
                                      scalar_product(t.apply(x), y))) {
                            return false;
                        }
                    }
                }
            }
        }
        for (int i = 0; i < trials; ++i) {
            const auto g = random_general_extensor(rng, n);
            const auto x = random_multivector(rng, n);
            const auto y = random_multivector(rng, n);
            if (!c.num_eq(scalar_product(x, adjoint(g).apply(y)),
                          scalar_product(g.apply(x), y))) {
                return false;
            }
        }
        return true;
    });

    c.run("SAO.4", "adjoint reverses composition", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const int q = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const auto t = random_pq_extensor(rng, n, p, q);
            const auto u = random_pq_extensor(rng, n, q, p);
            if (!approx_equal(adjoint(compose(u, t)), compose(adjoint(t), adjoint(u)),
                              c.rel(), c.abs())) {
                return false;
            }
        }
        return true;
    });

    c.run("SAO.5", "adjoint of the inverse is the inverse of the adjoint",
          [&](SplitMix64& rng) {
              for (int i = 0; i < trials; ++i) {
                  const auto t = random_nonsingular_operator(rng, n);
                  if (!approx_equal(invert(adjoint(t)), adjoint(invert(t)), c.rel(), c.abs())) {
                      return false;
                  }
              }
              return true;
          });

    c.run("SAO.6", "adjoint commutes with extension", [&](SplitMix64& rng) {
        for (int i = 0; i < 5; ++i) {
            const auto t = random_operator(rng, n);
            if (!approx_equal(extend_matrix(adjoint(t)), adjoint(extend_matrix(t)),
                              c.rel(), c.abs())) {
                return false;
            }
        }
        return true;
    });

    c.run("SAO.7", "frame evaluation of the adjoint matches the transpose",
          [&](SplitMix64& rng) {
              const int m = std::min(n, 4);
              for (int i = 0; i < 5; ++i) {
                  const Frame f = random_frame(rng, m);
                  const auto t = random_pq_extensor(rng, m, 1, std::min(2, m));
                  const auto y = random_homogeneous(rng, m, std::min(2, m));
                  const auto want = adjoint(t).apply(y);
                  if (!approx_equal(adjoint_apply_in_frame(t, y, f, true), want, c.rel(),
                                    c.abs())) {
                      return false;
                  }
                  if (!approx_equal(adjoint_apply_in_frame(t, y, f, false), want, c.rel(),
                                    c.abs())) {
                      return false;
                  }
                  const auto g = random_general_extensor(rng, m);
                  const auto z = random_multivector(rng, m);
                  if (!approx_equal(adjoint_apply_in_frame(g, z, f, true),
                                    adjoint(g).apply(z), c.rel(), c.abs())) {
                      return false;
                  }
              }
              return true;
          });

    // --- generalization operator ------------------------------------------------
    c.run("g1", "generalization preserves grade", [&](SplitMix64& rng) {
        for (int i = 0; i < 5; ++i) {
            const auto t = random_operator(rng, n);
            for (BladeMask m = 0; m < (BladeMask{1} << n); ++m) {
                if (!generalize_apply(t, Multivector::blade(n, m)).is_homogeneous(grade_of(m))) {
                    return false;
                }
            }
        }
        return true;
    });

    c.run("g2", "generalization commutes with the involutions", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto t = random_operator(rng, n);
            const auto x = random_multivector(rng, n);
            for (auto kind : {Involution::grade_involution, Involution::reversion,
                              Involution::conjugation}) {
                if (!c.mv_eq(generalize_apply(t, involution(x, kind)),
                             involution(generalize_apply(t, x), kind))) {
                    return false;
                }
            }
        }
        return true;
    });

    c.run("g3", "generalization kills scalars, fixes vectors, obeys Leibniz",
          [&](SplitMix64& rng) {
              for (int i = 0; i < trials; ++i) {
                  const auto t = random_operator(rng, n);
                  if (!generalize_apply(t, Multivector::scalar(n, rng.uniform(-2, 2))).is_zero()) {
                      return false;
                  }
                  const auto v = random_vector(rng, n);
                  if (!c.mv_eq(generalize_apply(t, v), t.apply(v))) return false;
                  const auto x = random_multivector(rng, n);
                  const auto y = random_multivector(rng, n);
                  if (!c.mv_eq(generalize_apply(t, wedge(x, y)),
                               wedge(generalize_apply(t, x), y) +
                                   wedge(x, generalize_apply(t, y)))) {
                      return false;
                  }
              }
              return true;
          });

    c.run("g4", "generalization commutes with the adjoint", [&](SplitMix64& rng) {
        for (int i = 0; i < 5; ++i) {
            const auto t = random_operator(rng, n);
            if (!approx_equal(adjoint(generalize_matrix(t)), generalize_matrix(adjoint(t)),
                              c.rel(), c.abs())) {
                return false;
            }
        }
        return true;
    });

    c.run("g5", "generalization commutes with the symmetric split", [&](SplitMix64& rng) {
        for (int i = 0; i < 5; ++i) {
            const auto t = random_operator(rng, n);
            const auto [sym, skew] = sym_skew_parts(t);
            const auto gen = generalize_matrix(t);
            const auto gen_adj = adjoint(gen);
            const auto gen_sym =
                GeneralExtensor(n, scale(add(gen.matrix(), gen_adj.matrix()), 0.5));
            const auto gen_skew =
                GeneralExtensor(n, scale(add(gen.matrix(), scale(gen_adj.matrix(), -1.0)), 0.5));
            if (!approx_equal(gen_sym, generalize_matrix(sym), c.rel(), c.abs())) return false;
            if (!approx_equal(gen_skew, generalize_matrix(skew), c.rel(), c.abs())) return false;
        }
        return true;
    });

    c.run("g6", "skew generalization factors through the bivector", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto t = random_operator(rng, n);
            const auto skew = sym_skew_parts(t).second;
            const auto x = random_multivector(rng, n);
            if (!c.mv_eq(generalize_apply(skew, x), commutator(biv(t), x) * 0.5)) return false;
        }
        return true;
    });

    c.run("g7", "skew generalization is a derivation over every product",
          [&](SplitMix64& rng) {
              using Product = Multivector (*)(const Multivector&, const Multivector&);
              const Product products[] = {&wedge, &clifford_product, &left_contraction};
              for (int i = 0; i < 5; ++i) {
                  const auto skew = sym_skew_parts(random_operator(rng, n)).second;
                  const auto x = random_multivector(rng, n);
                  const auto y = random_multivector(rng, n);
                  for (Product star : products) {
                      if (!c.mv_eq(generalize_apply(skew, star(x, y)),
                                   star(generalize_apply(skew, x), y) +
                                       star(x, generalize_apply(skew, y)))) {
                          return false;
                      }
                  }
                  if (!c.num_eq(scalar_product(generalize_apply(skew, x), y) +
                                    scalar_product(x, generalize_apply(skew, y)),
                                0.0)) {
                      return false;
                  }
              }
              return true;
          });

    c.run("SGO.1", "generalization is frame independent", [&](SplitMix64& rng) {
        const int m = std::min(n, 4);
        for (int i = 0; i < 5; ++i) {
            const auto t = random_operator(rng, m);
            const auto x = random_multivector(rng, m);
            const Frame f = random_frame(rng, m);
            const auto want = generalize_apply(t, x);
            if (!approx_equal(generalize_apply_in_frame(t, x, f, true), want, c.rel(),
                              c.abs())) {
                return false;
            }
            if (!approx_equal(generalize_apply_in_frame(t, x, f, false), want, c.rel(),
                              c.abs())) {
                return false;
            }
        }
        return true;
    });

    // --- determinant and inversion ----------------------------------------------
    c.run("d1", "determinant is multiplicative", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto t = random_operator(rng, n);
            const auto u = random_operator(rng, n);
            if (!c.num_eq(det(compose(u, t)), det(u) * det(t))) return false;
        }
        return true;
    });

    c.run("d2", "determinant of the inverse is the reciprocal", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto t = random_nonsingular_operator(rng, n);
            if (!c.num_eq(det(invert(t)), 1.0 / det(t))) return false;
        }
        return true;
    });

    c.run("d3", "determinant is adjoint invariant", [&](SplitMix64& rng) {
        for (int i = 0; i < trials; ++i) {
            const auto t = random_operator(rng, n);
            if (!c.num_eq(det(adjoint(t)), det(t))) return false;
        }
        return true;
    });

    c.run("D.5", "both frame formulas compute the determinant", [&](SplitMix64& rng) {
        const int m = std::min(n, 4);
        for (int i = 0; i < 5; ++i) {
            const auto t = random_operator(rng, m);
            const Frame f = random_frame(rng, m);
            const double want = det(t);
            if (!c.num_eq(det_in_frame(t, f, true), want)) return false;
            if (!c.num_eq(det_in_frame(t, f, false), want)) return false;
        }
        return true;
    });

    c.run("D.1", "determinant and inverse are pseudoscalar independent",
          [&](SplitMix64& rng) {
              for (int i = 0; i < trials; ++i) {
                  const auto t = random_nonsingular_operator(rng, n);
                  const Pseudoscalar one = Pseudoscalar::canonical(n);
                  const Pseudoscalar seven(one.value() * 7.0);
                  if (det_with(t, one) != det_with(t, seven)) return false;
                  const auto a = invert_with(t, one);
                  const auto b = invert_with(t, seven);
                  for (std::size_t r = 0; r < a.matrix().rows(); ++r) {
                      for (std::size_t col = 0; col < a.matrix().cols(); ++col) {
                          if (a.matrix().at(r, col) != b.matrix().at(r, col)) return false;
                      }
                  }
              }
              return true;
          });

    c.run("D.6", "pseudoscalar inversion matches elimination and composes to identity",
          [&](SplitMix64& rng) {
              for (int i = 0; i < trials; ++i) {
                  const auto t = random_nonsingular_operator(rng, n);
                  const auto inv = invert(t);
                  const auto plain = oracles::oracle_inverse(detail::to_plain(t.matrix()));
                  for (std::size_t r = 0; r < inv.matrix().rows(); ++r) {
                      for (std::size_t col = 0; col < inv.matrix().cols(); ++col) {
                          if (!c.num_eq(inv.matrix().at(r, col), plain[r][col])) return false;
                      }
                  }
                  if (!approx_equal(compose(inv, t), PqExtensor::identity(n, 1), c.rel(),
                                    c.abs())) {
                      return false;
                  }
              }
              return true;
          });

    // --- frame transport and changing basis ---------------------------------------
    //
    // Transport and changing-basis compose several reciprocal computations;
    // a rare unlucky draw collapses the transported volume below the
    // singularity threshold, which is a declared error outcome. The checks
    // test the success path on a fixed number of successful draws.
    c.run("T1.recip", "transported frames are reciprocal", [&](SplitMix64& rng) {
        const int m = std::min(n, 4);
        for (int done = 0, attempts = 0; done < trials; ++attempts) {
            if (attempts > trials * 50) return false;
            try {
                const auto f = random_nonsingular_operator(rng, m);
                const Frame b = random_frame(rng, m);
                const auto [e, r] = frame_transport(f, b);
                for (int j = 1; j <= m; ++j) {
                    for (int k = 1; k <= m; ++k) {
                        if (!c.num_eq(scalar_product(e.vector(j), r.vector(k)),
                                      j == k ? 1.0 : 0.0)) {
                            return false;
                        }
                    }
                }
                ++done;
            } catch (const SingularFrame&) {
            } catch (const SingularExtensor&) {
            }
        }
        return true;
    });

    c.run("T1.ortho", "orthogonal transport keeps frames orthonormal",
          [&](SplitMix64& rng) {
              const int m = std::min(n, 4);
              for (int i = 0; i < 5; ++i) {
                  const auto f = random_orthogonal_operator(rng, m);
                  const Frame b = random_orthonormal_frame(rng, m);
                  const auto [e, r] = frame_transport(f, b);
                  if (!is_orthonormal(e)) return false;
              }
              return true;
          });

    c.run("T1.unique", "frame pair recovery reproduces the transport map",
          [&](SplitMix64& rng) {
              const int m = std::min(n, 4);
              for (int done = 0, attempts = 0; done < trials; ++attempts) {
                  if (attempts > trials * 50) return false;
                  try {
                      const auto f = random_nonsingular_operator(rng, m);
                      const Frame b = random_frame(rng, m);
                      const auto [e, r] = frame_transport(f, b);
                      if (!approx_equal(recover_transport(b, e), f, c.rel(), c.abs())) {
                          return false;
                      }
                      ++done;
                  } catch (const SingularFrame&) {
                  } catch (const SingularExtensor&) {
                  }
              }
              return true;
          });

    c.run("CB.map", "changing basis carries frame onto frame", [&](SplitMix64& rng) {
        const int m = std::min(n, 4);
        for (int done = 0, attempts = 0; done < 5; ++attempts) {
            if (attempts > 250) return false;
            try {
                const Frame e = random_frame(rng, m);
                const Frame ep = random_frame(rng, m);
                const auto eps = changing_basis(e, ep);
                const auto eps_star = invert(adjoint(eps));
                const Frame er = reciprocal_frame(e);
                const Frame epr = reciprocal_frame(ep);
                for (int k = 1; k <= m; ++k) {
                    if (!c.mv_eq(eps.apply(e.vector(k)), ep.vector(k))) return false;
                    if (!approx_equal(eps_star.apply(er.vector(k)), epr.vector(k), c.rel(),
                                      c.abs() * 10)) {
                        return false;
                    }
                }
                ++done;
            } catch (const SingularExtensor&) {
            }
        }
        return true;
    });

    c.run("CB.forms", "pointwise forms of the inverse, adjoint and dual",
          [&](SplitMix64& rng) {
              const int m = std::min(n, 4);
              for (int done = 0, attempts = 0; done < 5; ++attempts) {
                  if (attempts > 250) return false;
                  try {
                      const Frame e = random_frame(rng, m);
                      const Frame ep = random_frame(rng, m);
                      const auto eps = changing_basis(e, ep);
                      const Frame er = reciprocal_frame(e);
                      const Frame epr = reciprocal_frame(ep);
                      const auto v = random_vector(rng, m);
                      Multivector inv_want = Multivector::zero(m);
                      Multivector adj_want = Multivector::zero(m);
                      Multivector star_want = Multivector::zero(m);
                      for (int s = 1; s <= m; ++s) {
                          inv_want = inv_want + e.vector(s) * scalar_product(epr.vector(s), v);
                          adj_want = adj_want + er.vector(s) * scalar_product(ep.vector(s), v);
                          star_want =
                              star_want + epr.vector(s) * scalar_product(e.vector(s), v);
                      }
                      if (!approx_equal(invert(eps).apply(v), inv_want, c.rel(),
                                        c.abs() * 10)) {
                          return false;
                      }
                      if (!approx_equal(adjoint(eps).apply(v), adj_want, c.rel(),
                                        c.abs() * 10)) {
                          return false;
                      }
                      if (!approx_equal(invert(adjoint(eps)).apply(v), star_want, c.rel(),
                                        c.abs() * 10)) {
                          return false;
                      }
                      ++done;
                  } catch (const SingularExtensor&) {
                  }
              }
              return true;
          });

    c.run("CB.blades", "changing basis transports induced blades", [&](SplitMix64& rng) {
        const int m = std::min(n, 4);
        for (int done = 0, attempts = 0; done < 3; ++attempts) {
            if (attempts > 150) return false;
            try {
                const Frame e = random_frame(rng, m);
                const Frame ep = random_frame(rng, m);
                const auto eps = changing_basis(e, ep);
                const auto eps_star = invert(adjoint(eps));
                const Frame er = reciprocal_frame(e);
                const Frame epr = reciprocal_frame(ep);
                for (BladeMask mask = 0; mask < (BladeMask{1} << m); ++mask) {
                    if (!approx_equal(extend_apply(eps, induced_blade(e, mask)),
                                      induced_blade(ep, mask), c.rel(), c.abs() * 10)) {
                        return false;
                    }
                    if (!approx_equal(extend_apply(eps_star, induced_blade(er, mask)),
                                      induced_blade(epr, mask), c.rel(), c.abs() * 10)) {
                        return false;
                    }
                }
                ++done;
            } catch (const SingularExtensor&) {
            }
        }
        return true;
    });

    c.run("CB.comp", "changing basis composes along frame chains", [&](SplitMix64& rng) {
        const int m = std::min(n, 4);
        for (int i = 0; i < 5; ++i) {
            const Frame a = random_frame(rng, m);
            const Frame b = random_frame(rng, m);
            const Frame d = random_frame(rng, m);
            if (!approx_equal(changing_basis(a, d),
                              compose(changing_basis(b, d), changing_basis(a, b)), c.rel(),
                              c.abs() * 10)) {
                return false;
            }
        }
        return true;
    });

    // --- oracle equivalence ---------------------------------------------------------
    c.run("OR.det", "determinant equals the permutation oracle", [&](SplitMix64& rng) {
        for (int i = 0; i < 20; ++i) {
            const auto t = random_operator(rng, n);
            if (!c.num_eq(det(t), oracles::oracle_det(detail::to_plain(t.matrix())))) {
                return false;
            }
        }
        return true;
    });

    c.run("OR.inv", "inversion equals the elimination oracle", [&](SplitMix64& rng) {
        for (int i = 0; i < 20; ++i) {
            const auto t = random_nonsingular_operator(rng, n);
            const auto inv = invert(t);
            const auto plain = oracles::oracle_inverse(detail::to_plain(t.matrix()));
            for (std::size_t r = 0; r < inv.matrix().rows(); ++r) {
                for (std::size_t col = 0; col < inv.matrix().cols(); ++col) {
                    if (!c.num_eq(inv.matrix().at(r, col), plain[r][col])) return false;
                }
            }
        }
        return true;
    });

    c.run("OR.minor", "extension blocks equal the compound oracle", [&](SplitMix64& rng) {
        const int m = std::min(n, 5);
        for (int i = 0; i < 3; ++i) {
            const auto t = random_operator(rng, m);
            const auto ext = extend_matrix(t);
            for (int p = 0; p <= m; ++p) {
                const auto block = oracles::oracle_outermorphism_minor(
                    detail::to_plain(t.matrix()), static_cast<std::size_t>(p));
                const auto masks = blades_of_grade(m, p);
                for (std::size_t a = 0; a < masks.size(); ++a) {
                    for (std::size_t b = 0; b < masks.size(); ++b) {
                        if (!c.num_eq(ext.matrix().at(masks[a], masks[b]), block[a][b])) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    c.run("OR.cb", "compound oracle is multiplicative", [&](SplitMix64& rng) {
        const int m = std::min(n, 5);
        for (int i = 0; i < 3; ++i) {
            const auto a = detail::to_plain(random_operator(rng, m).matrix());
            const auto b = detail::to_plain(random_operator(rng, m).matrix());
            for (std::size_t p = 1; p <= static_cast<std::size_t>(m); ++p) {
                const auto lhs = oracles::oracle_outermorphism_minor(oracles::multiply(a, b), p);
                const auto rhs = oracles::multiply(oracles::oracle_outermorphism_minor(a, p),
                                                   oracles::oracle_outermorphism_minor(b, p));
                for (std::size_t r = 0; r < lhs.size(); ++r) {
                    for (std::size_t col = 0; col < lhs[r].size(); ++col) {
                        if (!c.num_eq(lhs[r][col], rhs[r][col])) return false;
                    }
                }
            }
        }
        return true;
    });

    CheckReport report;
    report.dim = dim;
    report.seed = seed;
    report.tolerance = tol;
    report.results = std::move(c.results);
    return report;
}

inline std::string format_report(const CheckReport& report) {
    std::ostringstream out;
    out << "check dim=" << report.dim << " seed=" << report.seed
        << " tolerance=" << report.tolerance << "\n";
    int passed = 0;
    for (const auto& r : report.results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
        for (std::size_t i = r.id.size(); i < 10; ++i) out << ' ';
        out << r.label << "\n";
        if (r.pass) ++passed;
    }
    out << "result: " << passed << "/" << report.results.size() << " properties passed\n";
    return out.str();
}

} // namespace exta
