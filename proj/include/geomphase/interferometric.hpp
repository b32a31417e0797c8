#pragma once

#include <vector>

#include "geomphase/kitaev_model.hpp"

namespace geomphase {

struct CurveSample {
  double k = 0.0;
  QubitState state;
};

// An ordered sampling of a curve of density operators over [0, kappa]. When
// flagged closed, the first and last states must agree to 1e-10.
class ClosedCurve {
 public:
  static ClosedCurve from_samples(std::vector<CurveSample> samples,
                                  bool closed);

  // Gibbs curve of the chain over n_turns Brillouin-zone traversals; the
  // T = 0 limit samples the lower-band projectors instead.
  static ClosedCurve kitaev_gibbs(const ChainParams& params, int n_turns,
                                  int samples_per_turn = 4096);

  const std::vector<CurveSample>& samples() const { return samples_; }
  bool closed() const { return closed_; }

 private:
  ClosedCurve(std::vector<CurveSample> samples, bool closed)
      : samples_(std::move(samples)), closed_(closed) {}

  std::vector<CurveSample> samples_;
  bool closed_ = false;
};

struct InterferometricResult {
  double half_solid_angle = 0.0;  // accumulated eigenvector phase theta_1
  double initial_radius = 0.0;    // Bloch norm at k = 0
  double gamma = 0.0;             // arg(cos theta_1 + i R0 sin theta_1)
};

// The node locus of a curve starting at a given state: the open radial
// segment of the Bloch ball antipodal to the initial Bloch vector.
struct NodeRay {
  BlochVector direction;  // unit vector, opposite the initial state

  bool is_node(const QubitState& s, double angular_tol = 1e-9) const;
};

// Half the signed solid angle swept by the normalized Bloch direction of a
// closed curve. Exactly planar curves are scored by winding number
// (pi per revolution); everything else by summed spherical-triangle excesses
// from a fixed reference axis. Curves passing within 1e-6 of the maximally
// mixed state are rejected (UndefinedPhaseError).
double solid_angle_phase(const ClosedCurve& curve);

// Closed-form interferometric phase of a closed qubit curve.
InterferometricResult interferometric_phase(const ClosedCurve& curve);

// Phase-shifts a sampled eigenvector path so consecutive overlaps are real
// positive; the result satisfies <u|du/dk> = 0 to second order in the grid
// and is independent of the input's local phase convention.
std::vector<ComplexVec2> gauge_fix(const std::vector<ComplexVec2>& eigenpath);

// Spectral-overlap evaluation of the phase at the end of the curve:
// arg sum_i sqrt(p_i(0) p_i(kappa)) <u_i(0)|u_i(kappa)> over gauge-fixed
// eigenpaths. Independent route; must agree with interferometric_phase.
double phase_from_overlaps(const ClosedCurve& curve);

// The phase of the partial overlap sum at every sample along the curve.
std::vector<double> phase_profile(const ClosedCurve& curve);

NodeRay node_ray(const QubitState& curve_start);

// The composed invariant e^{i d n pi} for winding number d over n turns.
int winding_invariant(int degree, int n_turns);

}  // namespace geomphase
