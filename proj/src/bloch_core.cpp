#include "geomphase/bloch_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace geomphase {

namespace {

constexpr double kNormSlack = 1e-12;

// Rotates the global phase so the first component of nonzero magnitude is
// real positive.
ComplexVec2 fix_phase(const ComplexVec2& u) {
  const Complex ref = (std::abs(u.a) > 0.0) ? u.a : u.b;
  const double mag = std::abs(ref);
  if (mag == 0.0) {
    return u;
  }
  const Complex rot = std::conj(ref) / mag;
  return u * rot;
}

SpectralDecomp spectral_from_bloch(const BlochVector& v) {
  SpectralDecomp s;
  double r = v.norm();
  if (r > 1.0) {
    r = 1.0;
  }
  s.p1 = 0.5 * (1.0 + r);
  s.p2 = 0.5 * (1.0 - r);
  if (r < kDegeneracyTolerance) {
    s.degenerate = true;
    return s;  // sigma_z basis
  }
  const double nx = v.x / r;
  const double ny = v.y / r;
  const double nz = std::clamp(v.z / r, -1.0, 1.0);
  const double theta = std::acos(nz);
  const double ch = std::cos(0.5 * theta);
  const double sh = std::sin(0.5 * theta);
  const Complex az = std::polar(1.0, std::atan2(ny, nx));
  s.u1 = fix_phase({ch, sh * az});
  s.u2 = fix_phase({sh, -ch * az});
  return s;
}

ComplexMat2 matrix_from_bloch(const BlochVector& v) {
  return {Complex(0.5 * (1.0 + v.z), 0.0), 0.5 * Complex(v.x, -v.y),
          0.5 * Complex(v.x, v.y), Complex(0.5 * (1.0 - v.z), 0.0)};
}

}  // namespace

double ComplexVec2::norm() const { return std::sqrt(std::norm(a) + std::norm(b)); }

Complex dot(const ComplexVec2& x, const ComplexVec2& y) {
  return std::conj(x.a) * y.a + std::conj(x.b) * y.b;
}

ComplexMat2 ComplexMat2::adjoint() const {
  return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
}

double ComplexMat2::frobenius_norm() const {
  return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
}

ComplexMat2 ComplexMat2::operator+(const ComplexMat2& o) const {
  return {a + o.a, b + o.b, c + o.c, d + o.d};
}

ComplexMat2 ComplexMat2::operator-(const ComplexMat2& o) const {
  return {a - o.a, b - o.b, c - o.c, d - o.d};
}

ComplexMat2 ComplexMat2::operator*(const ComplexMat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
          c * o.b + d * o.d};
}

ComplexMat2 ComplexMat2::operator*(Complex s) const {
  return {a * s, b * s, c * s, d * s};
}

ComplexVec2 ComplexMat2::operator*(const ComplexVec2& v) const {
  return {a * v.a + b * v.b, c * v.a + d * v.b};
}

ComplexMat2 operator*(Complex s, const ComplexMat2& m) { return m * s; }

ComplexMat2 outer(const ComplexVec2& u, const ComplexVec2& v) {
  return {u.a * std::conj(v.a), u.a * std::conj(v.b), u.b * std::conj(v.a),
          u.b * std::conj(v.b)};
}

double max_abs_entry_diff(const ComplexMat2& x, const ComplexMat2& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b),
                   std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

QubitState::QubitState(const ComplexMat2& rho) : rho_{}, spec_{} {
  const double herm_defect =
      std::max({std::abs(rho.b - std::conj(rho.c)), std::abs(rho.a.imag()),
                std::abs(rho.d.imag())});
  if (herm_defect > kStateTolerance) {
    throw InvalidStateError("matrix is not Hermitian (defect " +
                            std::to_string(herm_defect) + ")");
  }
  const double tr = rho.a.real() + rho.d.real();
  if (std::abs(tr - 1.0) > kStateTolerance) {
    throw InvalidStateError("matrix trace is not 1 (got " + std::to_string(tr) +
                            ")");
  }
  const Complex off = 0.5 * (rho.b + std::conj(rho.c));
  const BlochVector v{2.0 * off.real(), -2.0 * off.imag(),
                      rho.a.real() - rho.d.real()};
  if (v.norm() > 1.0 + kNormSlack) {
    throw InvalidStateError("matrix is not positive semidefinite");
  }
  rho_ = matrix_from_bloch(v);
  spec_ = spectral_from_bloch(v);
}

QubitState from_bloch(const BlochVector& v) {
  if (v.norm() > 1.0 + kNormSlack) {
    throw InvalidStateError("Bloch vector norm " + std::to_string(v.norm()) +
                            " exceeds 1");
  }
  return QubitState(matrix_from_bloch(v), spectral_from_bloch(v));
}

BlochVector to_bloch(const QubitState& s) {
  const ComplexMat2& m = s.matrix();
  return {2.0 * m.b.real(), -2.0 * m.b.imag(), m.a.real() - m.d.real()};
}

const SpectralDecomp& spectral(const QubitState& s) { return s.eigensystem(); }

Purification sqrt_lift(const QubitState& s, double rank_tol) {
  const SpectralDecomp& e = s.eigensystem();
  if (e.p2 <= rank_tol) {
    throw BundleUndefinedError(
        "square-root lift requires a full-rank state (p2 = " +
        std::to_string(e.p2) + ")");
  }
  const ComplexMat2 psi = std::sqrt(e.p1) * outer(e.u1, e.u1) +
                          std::sqrt(e.p2) * outer(e.u2, e.u2);
  return {psi};
}

double fidelity(const QubitState& a, const QubitState& b) {
  const BlochVector va = to_bloch(a);
  const BlochVector vb = to_bloch(b);
  // Tr(ab) = (1 + va . vb) / 2 and det = p1 p2 for unit-trace qubits.
  const double tr_ab = 0.5 * (1.0 + va.x * vb.x + va.y * vb.y + va.z * vb.z);
  const double dets = a.p1() * a.p2() * b.p1() * b.p2();
  const double inner = tr_ab + 2.0 * std::sqrt(std::max(dets, 0.0));
  return std::clamp(std::sqrt(std::max(inner, 0.0)), 0.0, 1.0);
}

}  // namespace geomphase
