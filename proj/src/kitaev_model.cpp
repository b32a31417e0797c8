#include "geomphase/kitaev_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace geomphase {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double kGapClosureTol = 1e-12;

double raw_angle(double m, double k) {
  return std::atan2(std::sin(k), m + std::cos(k));
}

double radius_sq(double m, double k) {
  const double ax = m + std::cos(k);
  const double ay = std::sin(k);
  return ax * ax + ay * ay;
}

// Unwrapped angle increment over [k0, k1]. Splits until each step is well
// inside a half turn; a step that never shrinks marks a center passage.
double angle_increment(double m, double k0, double k1, int depth = 0) {
  const double d = std::remainder(raw_angle(m, k1) - raw_angle(m, k0), two_pi);
  if (std::abs(d) < 0.5) {
    return d;
  }
  const double mid = 0.5 * (k0 + k1);
  if (k1 - k0 < 1e-12 || depth > 80 || radius_sq(m, mid) < 1e-24) {
    throw UndefinedAngleError(
        "polar angle undefined: curve passes the maximally mixed point near "
        "k = " +
        std::to_string(mid));
  }
  return angle_increment(m, k0, mid, depth + 1) +
         angle_increment(m, mid, k1, depth + 1);
}

int base_steps_per_turn(double m) {
  if (m == 1.0) {
    return 4096;  // the sweep rate is exactly 1/2 away from the jump at pi
  }
  // Keep the base step well below a half turn of direction sweep, whose rate
  // peaks at 1/|1 -+ m|; the bisection refines the rest.
  const double steep =
      1.0 / std::max(std::min(std::abs(1.0 - m), std::abs(1.0 + m)), 1e-7);
  const double steps = std::max(4096.0, 8.0 * steep);
  return static_cast<int>(std::min(steps, 2e7));
}

}  // namespace

double band_gap(const ChainParams& params, double k) {
  return 2.0 * std::sqrt(radius_sq(params.m, k));
}

BlochVector bloch_direction(const ChainParams& params, double k) {
  const double gap = band_gap(params, k);
  if (gap < kGapClosureTol) {
    throw UndefinedStateError("band direction undefined at gap closure");
  }
  return {2.0 * (params.m + std::cos(k)) / gap, 2.0 * std::sin(k) / gap, 0.0};
}

QubitState gibbs_state(const ChainParams& params, double k) {
  if (!(params.T > 0.0)) {
    throw BundleUndefinedError(
        "Gibbs state is rank deficient at T = 0; use pure_state");
  }
  const double gap = band_gap(params, k);
  if (gap < kGapClosureTol) {
    return from_bloch({0.0, 0.0, 0.0});
  }
  const double r = std::tanh(gap / (2.0 * params.T));
  const BlochVector n = bloch_direction(params, k);
  return from_bloch({r * n.x, r * n.y, 0.0});
}

QubitState pure_state(const ChainParams& params, double k) {
  return from_bloch(bloch_direction(params, k));
}

double polar_angle(const ChainParams& params, double k) {
  if (params.m <= -1.0) {
    throw InvalidStateError("polar angle requires m > -1");
  }
  if (k == 0.0) {
    return 0.0;
  }
  const int per_turn = base_steps_per_turn(params.m);
  const int steps =
      std::max(1, static_cast<int>(std::ceil(std::abs(k) / two_pi * per_turn)));
  const double h = k / steps;
  double phi = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double k0 = i * h;
    const double k1 = (i + 1 == steps) ? k : (i + 1) * h;
    phi += (h >= 0.0) ? angle_increment(params.m, k0, k1)
                      : -angle_increment(params.m, k1, k0);
  }
  return phi;
}

double polar_angle_closed_form(const ChainParams& params, double k) {
  const double m = params.m;
  if (m <= -1.0) {
    throw InvalidStateError("closed form requires m > -1");
  }
  const double c = (1.0 - m) / (1.0 + m);
  if (c == 0.0) {
    return 0.5 * k;  // m = 1; valid on branches that avoid the center
  }
  // arctan(c tan(k/2)) jumps at k = pi + 2 pi n; restore continuity branchwise.
  const double branches = std::floor((k + std::numbers::pi) / two_pi);
  const double sign = (c > 0.0) ? 1.0 : -1.0;
  return 0.5 * k + std::atan(c * std::tan(0.5 * k)) +
         sign * std::numbers::pi * branches;
}

double polar_angle_rate(const ChainParams& params, double k) {
  const double m = params.m;
  const double num = 1.0 + m * std::cos(k);
  const double den = 1.0 + 2.0 * m * std::cos(k) + m * m;
  if (std::abs(den) < 1e-30) {
    return 0.5;
  }
  return num / den;
}

int winding_number(const ChainParams& params) {
  const double total = polar_angle(params, two_pi);
  const int w = static_cast<int>(std::lround(total / two_pi));
  if (std::abs(total - w * two_pi) > 1e-6) {
    throw NumericError("winding number did not converge to an integer (got " +
                       std::to_string(total / two_pi) + ")");
  }
  return w;
}

std::vector<MomentumSample> sample_curve(const ChainParams& params,
                                         double k_end, int samples_per_turn) {
  if (samples_per_turn < 2 || !(k_end > 0.0)) {
    throw InvalidStateError("sample_curve needs k_end > 0 and >= 2 samples");
  }
  const int n =
      std::max(2, static_cast<int>(std::ceil(k_end / two_pi * samples_per_turn)));
  std::vector<MomentumSample> out;
  out.reserve(n + 1);
  double phi = 0.0;
  double k_prev = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double k = (i == n) ? k_end : k_end * i / n;
    if (i > 0) {
      phi += angle_increment(params.m, k_prev, k);
    }
    MomentumSample s;
    s.k = k;
    s.delta_k = band_gap(params, k);
    s.n_k = bloch_direction(params, k);
    s.phi = phi;
    out.push_back(s);
    k_prev = k;
  }
  return out;
}

}  // namespace geomphase
