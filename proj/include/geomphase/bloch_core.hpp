#pragma once

#include <complex>

#include "geomphase/errors.hpp"

namespace geomphase {

using Complex = std::complex<double>;

inline constexpr double kRankTolerance = 1e-10;
inline constexpr double kDegeneracyTolerance = 1e-12;
inline constexpr double kStateTolerance = 1e-9;

// Column vector in C^2.
struct ComplexVec2 {
  Complex a{};
  Complex b{};

  double norm() const;
  ComplexVec2 operator*(Complex s) const { return {a * s, b * s}; }
};

// <x|y>, conjugate-linear in the first argument.
Complex dot(const ComplexVec2& x, const ComplexVec2& y);

// Dense 2x2 complex matrix, row major: [[a, b], [c, d]].
struct ComplexMat2 {
  Complex a{};
  Complex b{};
  Complex c{};
  Complex d{};

  static ComplexMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static ComplexMat2 zero() { return {}; }

  ComplexMat2 adjoint() const;
  Complex trace() const { return a + d; }
  Complex det() const { return a * d - b * c; }
  double frobenius_norm() const;

  ComplexMat2 operator+(const ComplexMat2& o) const;
  ComplexMat2 operator-(const ComplexMat2& o) const;
  ComplexMat2 operator*(const ComplexMat2& o) const;
  ComplexMat2 operator*(Complex s) const;
  ComplexVec2 operator*(const ComplexVec2& v) const;
};

ComplexMat2 operator*(Complex s, const ComplexMat2& m);

// |u><v|
ComplexMat2 outer(const ComplexVec2& u, const ComplexVec2& v);

double max_abs_entry_diff(const ComplexMat2& x, const ComplexMat2& y);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

// Eigensystem of a qubit density operator. p1 >= p2, eigenvectors orthonormal
// with the phase fixed so the first nonzero component is real positive.
struct SpectralDecomp {
  double p1 = 0.5;
  double p2 = 0.5;
  ComplexVec2 u1{1.0, 0.0};
  ComplexVec2 u2{0.0, 1.0};
  bool degenerate = false;
};

// A 2x2 density operator with its spectral decomposition cached at
// construction. Hermiticity is exact by construction; trace and positivity
// are validated against kStateTolerance.
class QubitState {
 public:
  explicit QubitState(const ComplexMat2& rho);

  const ComplexMat2& matrix() const { return rho_; }
  const SpectralDecomp& eigensystem() const { return spec_; }
  double p1() const { return spec_.p1; }
  double p2() const { return spec_.p2; }
  bool degenerate() const { return spec_.degenerate; }

 private:
  QubitState(const ComplexMat2& rho, const SpectralDecomp& spec)
      : rho_(rho), spec_(spec) {}
  friend QubitState from_bloch(const BlochVector& v);

  ComplexMat2 rho_;
  SpectralDecomp spec_;
};

// Amplitude matrix psi with psi * psi^dagger equal to a density operator.
struct Purification {
  ComplexMat2 psi;

  ComplexMat2 projection() const { return psi * psi.adjoint(); }
};

// rho = (1 + v . sigma) / 2. Requires |v| <= 1 up to tolerance.
QubitState from_bloch(const BlochVector& v);

BlochVector to_bloch(const QubitState& s);

const SpectralDecomp& spectral(const QubitState& s);

// Hermitian square root of a full-rank state. Rank-deficient input (p2 below
// rank_tol) has no purification bundle fiber and is rejected.
Purification sqrt_lift(const QubitState& s, double rank_tol = kRankTolerance);

// Tr sqrt(sqrt(a) b sqrt(a)), via the closed qubit form; in [0, 1].
double fidelity(const QubitState& a, const QubitState& b);

}  // namespace geomphase
