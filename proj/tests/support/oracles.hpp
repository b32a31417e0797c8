// Test-only reference implementations, independent of the library's
// evaluation paths: dense quadrature, matrix-square-root fidelity, and a
// discretized path-ordered transport built from numerically diagonalized
// states.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "geomphase/bloch_core.hpp"
#include "geomphase/kitaev_model.hpp"

namespace geomphase::testing {

inline double trapezoid(const std::function<double(double)>& f, double a,
                        double b, int n) {
  double sum = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) {
    sum += f(a + (b - a) * i / n);
  }
  return sum * (b - a) / n;
}

// Tr sqrt(sqrt(a) b sqrt(a)) evaluated through explicit matrices and the
// eigenvalues of the product, avoiding the closed qubit form.
inline double fidelity_matrix_oracle(const QubitState& a, const QubitState& b) {
  const SpectralDecomp& ea = a.eigensystem();
  const ComplexMat2 sqrt_a = std::sqrt(ea.p1) * outer(ea.u1, ea.u1) +
                             std::sqrt(ea.p2) * outer(ea.u2, ea.u2);
  const ComplexMat2 m = sqrt_a * b.matrix() * sqrt_a;
  const double tr = m.trace().real();
  const double det = std::max(m.det().real(), 0.0);
  const double disc = std::max(tr * tr - 4.0 * det, 0.0);
  const double l1 = std::max(0.5 * (tr + std::sqrt(disc)), 0.0);
  const double l2 = std::max(0.5 * (tr - std::sqrt(disc)), 0.0);
  return std::sqrt(l1) + std::sqrt(l2);
}

// exp(M) by plain power series; adequate for ||M|| << 1.
inline ComplexMat2 expm_small(const ComplexMat2& m) {
  ComplexMat2 sum = ComplexMat2::identity();
  ComplexMat2 term = ComplexMat2::identity();
  for (int n = 1; n <= 24; ++n) {
    term = term * m * Complex(1.0 / n, 0.0);
    sum = sum + term;
    if (term.frobenius_norm() < 1e-20) {
      break;
    }
  }
  return sum;
}

// The qubit connection evaluated on the square-root lift at momentum k, with
// eigenvector derivatives taken by central differences of the diagonalized
// Gibbs states.
inline ComplexMat2 hubner_connection(const ChainParams& params, double k,
                                     double h) {
  const SpectralDecomp e0 = gibbs_state(params, k).eigensystem();
  const SpectralDecomp em = gibbs_state(params, k - h).eigensystem();
  const SpectralDecomp ep = gibbs_state(params, k + h).eigensystem();
  const Complex inv_2h(1.0 / (2.0 * h), 0.0);
  const ComplexVec2 du1{(ep.u1.a - em.u1.a) * inv_2h,
                        (ep.u1.b - em.u1.b) * inv_2h};
  const ComplexVec2 du2{(ep.u2.a - em.u2.a) * inv_2h,
                        (ep.u2.b - em.u2.b) * inv_2h};
  const double w = std::pow(std::sqrt(e0.p1) - std::sqrt(e0.p2), 2);
  return Complex(w, 0.0) * (dot(e0.u1, du2) * outer(e0.u1, e0.u2) +
                            dot(e0.u2, du1) * outer(e0.u2, e0.u1));
}

// Stepwise transport of the square-root lift: the gauge element accumulates
// exp(-step * A) factors on the right, with the connection averaged over the
// step endpoints.
inline ComplexMat2 discretized_parallel_lift(const ChainParams& params,
                                             double k_end, int steps) {
  const double h = k_end / steps;
  ComplexMat2 gauge = ComplexMat2::identity();
  ComplexMat2 conn_prev = hubner_connection(params, 0.0, h);
  for (int i = 1; i <= steps; ++i) {
    const ComplexMat2 conn = hubner_connection(params, h * i, h);
    const ComplexMat2 avg = (conn_prev + conn) * Complex(0.5, 0.0);
    gauge = gauge * expm_small(avg * Complex(-h, 0.0));
    conn_prev = conn;
  }
  const SpectralDecomp e = gibbs_state(params, k_end).eigensystem();
  const ComplexMat2 sqrt_rho = std::sqrt(e.p1) * outer(e.u1, e.u1) +
                               std::sqrt(e.p2) * outer(e.u2, e.u2);
  return sqrt_rho * gauge;
}

// Deterministic random state in the open Bloch ball.
inline QubitState random_state(std::mt19937& rng, double r_min = 0.0,
                               double r_max = 0.98) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(r_min, r_max);
  double x = gauss(rng), y = gauss(rng), z = gauss(rng);
  const double len = std::sqrt(x * x + y * y + z * z);
  const double r = unif(rng);
  if (len < 1e-12) {
    return from_bloch({r, 0.0, 0.0});
  }
  return from_bloch({r * x / len, r * y / len, r * z / len});
}

inline double angle_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * std::numbers::pi));
}

}  // namespace geomphase::testing
