#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "geomphase/bloch_core.hpp"
#include "support/oracles.hpp"

using namespace geomphase;

namespace {

ComplexMat2 random_mat(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
}

ComplexMat2 reconstruct(const SpectralDecomp& e) {
  return e.p1 * outer(e.u1, e.u1) + e.p2 * outer(e.u2, e.u2);
}

}  // namespace

TEST_SUITE("bloch_core") {

TEST_CASE("ComplexMat2 ring axioms on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMat2 a = random_mat(rng);
    const ComplexMat2 b = random_mat(rng);
    const ComplexMat2 c = random_mat(rng);
    CHECK(max_abs_entry_diff((a + b) + c, a + (b + c)) < 1e-14);
    CHECK(max_abs_entry_diff((a * b) * c, a * (b * c)) < 1e-13);
    CHECK(max_abs_entry_diff(a * (b + c), a * b + a * c) < 1e-13);
    CHECK(max_abs_entry_diff(a * ComplexMat2::identity(), a) == 0.0);
  }
}

TEST_CASE("adjoint is an involution") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMat2 a = random_mat(rng);
    CHECK(max_abs_entry_diff(a.adjoint().adjoint(), a) == 0.0);
  }
}

TEST_CASE("from_bloch: maximally mixed state") {
  const QubitState s = from_bloch({0.0, 0.0, 0.0});
  CHECK(s.matrix().a.real() == doctest::Approx(0.5));
  CHECK(s.matrix().d.real() == doctest::Approx(0.5));
  CHECK(std::abs(s.matrix().b) == 0.0);
  CHECK(s.p1() == doctest::Approx(0.5));
  CHECK(s.p2() == doctest::Approx(0.5));
  CHECK(s.degenerate());
}

TEST_CASE("from_bloch: pure |+> state") {
  const QubitState s = from_bloch({1.0, 0.0, 0.0});
  CHECK(s.p1() == doctest::Approx(1.0));
  CHECK(s.p2() == doctest::Approx(0.0));
  CHECK(s.matrix().b.real() == doctest::Approx(0.5));
  CHECK_FALSE(s.degenerate());
}

TEST_CASE("from_bloch: thermal radius tanh(1) reproduces band eigenvalues") {
  const double r = std::tanh(1.0);
  const QubitState s = from_bloch({r, 0.0, 0.0});
  CHECK(std::abs(s.p1() - 0.5 * (1.0 + std::tanh(1.0))) < 1e-15);
  CHECK(std::abs(s.p2() - 0.5 * (1.0 - std::tanh(1.0))) < 1e-15);
}

TEST_CASE("from_bloch rejects vectors outside the ball") {
  CHECK_THROWS_AS(from_bloch({1.0 + 1e-6, 0.0, 0.0}), InvalidStateError);
}

TEST_CASE("to_bloch round trip") {
  CHECK(to_bloch(from_bloch({0.0, 0.0, 0.0})).norm() == 0.0);
  const BlochVector v = to_bloch(from_bloch({1.0, 0.0, 0.0}));
  CHECK(v.x == doctest::Approx(1.0));
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const QubitState s = testing::random_state(rng);
    const QubitState back = from_bloch(to_bloch(s));
    CHECK(max_abs_entry_diff(s.matrix(), back.matrix()) < 1e-12);
  }
}

TEST_CASE("spectral: equatorial eigenvectors are (1, +-e^{i phi})/sqrt(2)") {
  const double phi = 1.234;
  const double purity = 0.62;
  const QubitState s =
      from_bloch({purity * std::cos(phi), purity * std::sin(phi), 0.0});
  const SpectralDecomp& e = spectral(s);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(e.u1.a - Complex(inv_sqrt2, 0.0)) < 1e-14);
  CHECK(std::abs(e.u1.b - inv_sqrt2 * std::polar(1.0, phi)) < 1e-14);
  CHECK(std::abs(e.u2.a - Complex(inv_sqrt2, 0.0)) < 1e-14);
  CHECK(std::abs(e.u2.b + inv_sqrt2 * std::polar(1.0, phi)) < 1e-14);
  CHECK(e.p1 - e.p2 == doctest::Approx(purity));
}

TEST_CASE("spectral: degenerate input is flagged and still orthonormal") {
  const QubitState s = from_bloch({0.0, 0.0, 0.0});
  const SpectralDecomp& e = spectral(s);
  CHECK(e.degenerate);
  CHECK(std::abs(dot(e.u1, e.u2)) < 1e-15);
  CHECK(e.u1.norm() == doctest::Approx(1.0));
}

TEST_CASE("spectral reconstruction on random states") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const QubitState s = testing::random_state(rng, 0.0, 1.0);
    const SpectralDecomp& e = spectral(s);
    CHECK(max_abs_entry_diff(reconstruct(e), s.matrix()) < 1e-12);
    CHECK(std::abs(dot(e.u1, e.u2)) < 1e-12);
    CHECK(e.p1 >= e.p2);
    CHECK(e.p1 + e.p2 == doctest::Approx(1.0));
  }
}

TEST_CASE("QubitState matrix constructor validates its input") {
  CHECK_THROWS_AS(QubitState({{0.5, 0.0}, {0.3, 0.0}, {0.0, 0.0}, {0.5, 0.0}}),
                  InvalidStateError);  // not Hermitian
  CHECK_THROWS_AS(QubitState({{0.9, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.3, 0.0}}),
                  InvalidStateError);  // trace 1.2
  CHECK_THROWS_AS(QubitState({{0.9, 0.0}, {0.4, 0.0}, {0.4, 0.0}, {0.1, 0.0}}),
                  InvalidStateError);  // indefinite
}

TEST_CASE("sqrt_lift: maximally mixed and equatorial cases") {
  const Purification psi = sqrt_lift(from_bloch({0.0, 0.0, 0.0}));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(psi.psi.a - Complex(inv_sqrt2, 0.0)) < 1e-15);
  CHECK(std::abs(psi.psi.d - Complex(inv_sqrt2, 0.0)) < 1e-15);
  CHECK(std::abs(psi.psi.b) < 1e-15);

  const double phi = 0.8;
  const double r = 0.8;  // p1 = 0.9, p2 = 0.1
  const QubitState s = from_bloch({r * std::cos(phi), r * std::sin(phi), 0.0});
  const Purification lift = sqrt_lift(s);
  const SpectralDecomp& e = spectral(s);
  const ComplexVec2 image1 = lift.psi * e.u1;
  const ComplexVec2 image2 = lift.psi * e.u2;
  CHECK(std::abs(image1.a - std::sqrt(0.9) * e.u1.a) < 1e-12);
  CHECK(std::abs(image1.b - std::sqrt(0.9) * e.u1.b) < 1e-12);
  CHECK(std::abs(image2.a - std::sqrt(0.1) * e.u2.a) < 1e-12);
  CHECK(std::abs(image2.b - std::sqrt(0.1) * e.u2.b) < 1e-12);
}

TEST_CASE("sqrt_lift rejects rank-deficient states") {
  CHECK_THROWS_AS(sqrt_lift(from_bloch({1.0, 0.0, 0.0})), BundleUndefinedError);
}

TEST_CASE("sqrt_lift squares back to the state") {
  std::mt19937 rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const QubitState s = testing::random_state(rng, 0.0, 0.95);
    const Purification psi = sqrt_lift(s);
    CHECK(max_abs_entry_diff(psi.psi * psi.psi, s.matrix()) < 1e-12);
    CHECK(max_abs_entry_diff(psi.projection(), s.matrix()) < 1e-12);
  }
}

TEST_CASE("fidelity: identical, orthogonal, and mixed pairs") {
  const QubitState plus = from_bloch({1.0, 0.0, 0.0});
  const QubitState minus = from_bloch({-1.0, 0.0, 0.0});
  const QubitState mixed = from_bloch({0.0, 0.0, 0.0});
  CHECK(fidelity(plus, plus) == doctest::Approx(1.0));
  CHECK(fidelity(plus, minus) == doctest::Approx(0.0));
  CHECK(std::abs(fidelity(mixed, plus) -
                 testing::fidelity_matrix_oracle(mixed, plus)) < 1e-10);
}

TEST_CASE("fidelity agrees with the matrix-root oracle on random pairs") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const QubitState a = testing::random_state(rng, 0.0, 1.0);
    const QubitState b = testing::random_state(rng, 0.0, 1.0);
    CHECK(std::abs(fidelity(a, b) - testing::fidelity_matrix_oracle(a, b)) <
          1e-10);
    CHECK(fidelity(a, b) == doctest::Approx(fidelity(b, a)));
    CHECK(fidelity(a, b) >= 0.0);
    CHECK(fidelity(a, b) <= 1.0);
    CHECK(std::abs(fidelity(a, a) - 1.0) < 1e-12);
  }
}

}  // TEST_SUITE
