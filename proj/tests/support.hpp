#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "cbend/cbend.hpp"

namespace cbend::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  // Modulus in [lo, hi] log-uniform, argument uniform.
  cplx nonzero_complex(double lo = 0.2, double hi = 5.0) {
    return std::polar(log_uniform(lo, hi), uniform(-std::numbers::pi, std::numbers::pi));
  }

  // Decoration value kept away from 0 and -1.
  cplx decoration_value() {
    for (;;) {
      const cplx z = nonzero_complex(0.3, 3.0);
      if (std::abs(z + 1.0) > 0.1) return z;
    }
  }

  BoundaryPoint boundary_point() {
    return BoundaryPoint::heisenberg(cplx(uniform(-3, 3), uniform(-3, 3)), uniform(-3, 3));
  }

  HoroPoint horo_point() { return {cplx(uniform(-3, 3), uniform(-3, 3)), uniform(-3, 3), log_uniform(0.1, 5)}; }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Random holomorphic isometry: product of elementary isometries with an even
// number of real symmetries.
inline Isometry random_holomorphic(Rng& rng, int max_len = 8) {
  Isometry g = identity_isometry();
  const int len = rng.integer(1, max_len);
  for (int i = 0; i < len; ++i) {
    switch (rng.integer(0, 3)) {
      case 0: g = compose(g, elementary_E()); break;
      case 1:
        g = compose(g, elementary_sigma(rng.nonzero_complex()));
        g = compose(g, elementary_sigma(rng.nonzero_complex()));
        break;
      case 2: g = compose(g, translation_T(cplx(rng.uniform(-2, 2), rng.uniform(-2, 2)), rng.uniform(-2, 2))); break;
      default: {
        double m = rng.log_uniform(0.3, 3.0);
        if (std::abs(m - 1.0) < 0.05) m = 1.5;
        g = compose(g, loxodromic_D(std::polar(m, rng.uniform(-3, 3))));
      }
    }
  }
  return g;
}

inline Decoration random_decoration(Rng& rng, const Triangulation& t) {
  Decoration d(t.edges.size());
  for (auto& z : d) z = rng.decoration_value();
  return d;
}

// Real triangle: holomorphic image of the standard one.
inline IdealTriangle random_real_triangle(Rng& rng) {
  const Isometry g = random_holomorphic(rng, 5);
  IdealTriangle s = standard_triangle();
  for (auto& p : s.p) p = apply(g, p);
  return s;
}

// Largest eigenvalue modulus of the SU(2,1) lift.
inline double max_eigen_modulus(const GroupMatrix& m) {
  Eigen::ComplexEigenSolver<GroupMatrix> es(su_normalize(m), false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Random word of length <= max_len in {E, sigma_z, T, D}; sigma letters come in
// adjacent pairs so the result is holomorphic.
inline Isometry random_word(Rng& rng, int max_len = 12) {
  Isometry g = identity_isometry();
  const int len = rng.integer(1, max_len);
  for (int i = 0; i < len; ++i) {
    switch (rng.integer(0, 3)) {
      case 0: g = compose(g, rng.integer(0, 1) ? elementary_E() : elementary_E_inverse()); break;
      case 1:
        if (i + 1 < len) {
          g = compose(g, elementary_sigma(rng.nonzero_complex()));
          g = compose(g, elementary_sigma(rng.nonzero_complex()));
          ++i;
        } else {
          g = compose(g, elementary_E());
        }
        break;
      case 2: g = compose(g, translation_T(cplx(rng.uniform(-2, 2), rng.uniform(-2, 2)), rng.uniform(-2, 2))); break;
      default: {
        double m = rng.log_uniform(0.3, 3.0);
        if (std::abs(m - 1.0) < 0.05) m = 1.5;
        g = compose(g, loxodromic_D(std::polar(m, rng.uniform(-3, 3))));
      }
    }
  }
  return g;
}

}  // namespace cbend::testing
