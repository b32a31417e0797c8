#pragma once

#include <vector>

#include "geomphase/bloch_core.hpp"

namespace geomphase {

// Chain parameters in the convention w = M = 1, m = mu / 2, k_B = 1.
struct ChainParams {
  double m = 0.0;
  double T = 1.0;
};

// One Brillouin-zone sample of the two-band model: gap, Bloch direction of
// the lower band, and the continuous equatorial polar angle.
struct MomentumSample {
  double k = 0.0;
  double delta_k = 0.0;
  BlochVector n_k{};
  double phi = 0.0;
};

// Band gap 2 sqrt((m + cos k)^2 + sin^2 k); zero only at |m| = 1.
double band_gap(const ChainParams& params, double k);

// Unit equatorial Bloch direction of the lower band. Undefined at a gap
// closure (UndefinedStateError).
BlochVector bloch_direction(const ChainParams& params, double k);

// Thermal state: Bloch vector tanh(gap / 2T) times the band direction.
// Requires T > 0; the gap-closure point maps to the maximally mixed state.
QubitState gibbs_state(const ChainParams& params, double k);

// Lower-band projector; requires a positive gap.
QubitState pure_state(const ChainParams& params, double k);

// Continuous polar angle of the band direction, unwrapped from phi(0) = 0 by
// accumulating atan2 increments on a bisected grid. Throws UndefinedAngleError
// if the curve reaches the maximally mixed point on [0, k].
double polar_angle(const ChainParams& params, double k);

// Branch-corrected closed form k/2 + arctan((1-m)/(1+m) tan(k/2)); kept as an
// independent cross-check of polar_angle. Valid for m > -1, m != 1.
double polar_angle_closed_form(const ChainParams& params, double k);

// d(phi)/dk = (1 + m cos k) / (1 + 2 m cos k + m^2); the removable limit 1/2
// is returned at a vanishing denominator.
double polar_angle_rate(const ChainParams& params, double k);

// Revolutions of the band direction per Brillouin-zone traversal:
// 1 for |m| < 1, 0 for |m| > 1, undefined at |m| = 1.
int winding_number(const ChainParams& params);

// Uniform sampling of (k, gap, direction, unwrapped angle) over [0, k_end].
std::vector<MomentumSample> sample_curve(const ChainParams& params,
                                         double k_end, int samples_per_turn);

}  // namespace geomphase
