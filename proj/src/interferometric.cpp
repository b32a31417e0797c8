#include "geomphase/interferometric.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace geomphase {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double kCenterMargin = 1e-6;
constexpr double kPlanarTol = 1e-12;
constexpr double kMaxDirectionStep = 0.5 * std::numbers::pi;

struct Vec3 {
  double x, y, z;
};

Vec3 normalized(const BlochVector& v, double r) {
  return {v.x / r, v.y / r, v.z / r};
}

double dot3(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

double triple(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
         a.z * (b.x * c.y - b.y * c.x);
}

std::vector<Vec3> curve_directions(const ClosedCurve& curve) {
  std::vector<Vec3> dirs;
  dirs.reserve(curve.samples().size());
  for (const CurveSample& s : curve.samples()) {
    const BlochVector v = to_bloch(s.state);
    const double r = v.norm();
    if (r < kCenterMargin) {
      throw UndefinedPhaseError(
          "curve passes the maximally mixed state (Bloch norm " +
          std::to_string(r) + " at k = " + std::to_string(s.k) + ")");
    }
    dirs.push_back(normalized(v, r));
  }
  return dirs;
}

// Signed area swept between the curve and a fixed reference direction,
// accumulated triangle by triangle.
double fan_solid_angle(const std::vector<Vec3>& dirs, const Vec3& ref) {
  double total = 0.0;
  for (std::size_t i = 1; i < dirs.size(); ++i) {
    const Vec3& a = dirs[i - 1];
    const Vec3& b = dirs[i];
    if (dot3(a, b) <= 0.0) {
      throw UndefinedPhaseError(
          "direction step of 90 degrees or more between curve samples; "
          "undersampled or passing the maximally mixed state");
    }
    const double num = triple(ref, a, b);
    const double den = 1.0 + dot3(ref, a) + dot3(a, b) + dot3(b, ref);
    total += 2.0 * std::atan2(num, den);
  }
  return total;
}

Vec3 pick_reference_axis(const std::vector<Vec3>& dirs) {
  const std::array<Vec3, 6> axes = {{{0, 0, 1},
                                     {0, 0, -1},
                                     {1, 0, 0},
                                     {-1, 0, 0},
                                     {0, 1, 0},
                                     {0, -1, 0}}};
  double best_min = -2.0;
  Vec3 best = axes[0];
  for (const Vec3& axis : axes) {
    double worst = 2.0;
    for (const Vec3& d : dirs) {
      worst = std::min(worst, dot3(axis, d));
    }
    if (worst > best_min) {
      best_min = worst;
      best = axis;
    }
  }
  if (best_min <= -0.9) {
    throw NumericError(
        "no reference axis clears the curve for the solid-angle sum");
  }
  return best;
}

std::vector<ComplexVec2> eigenpath(const ClosedCurve& curve, bool upper) {
  std::vector<ComplexVec2> path;
  path.reserve(curve.samples().size());
  for (const CurveSample& s : curve.samples()) {
    if (s.state.degenerate()) {
      throw UndefinedPhaseError("degenerate spectrum at k = " +
                                std::to_string(s.k));
    }
    const SpectralDecomp& e = s.state.eigensystem();
    path.push_back(upper ? e.u1 : e.u2);
  }
  return path;
}

Complex overlap_sum(const ClosedCurve& curve,
                    const std::vector<ComplexVec2>& fixed1,
                    const std::vector<ComplexVec2>& fixed2, std::size_t j) {
  const QubitState& first = curve.samples().front().state;
  const QubitState& here = curve.samples()[j].state;
  return std::sqrt(first.p1() * here.p1()) * dot(fixed1.front(), fixed1[j]) +
         std::sqrt(first.p2() * here.p2()) * dot(fixed2.front(), fixed2[j]);
}

}  // namespace

ClosedCurve ClosedCurve::from_samples(std::vector<CurveSample> samples,
                                      bool closed) {
  if (samples.size() < 2) {
    throw InvalidStateError("a curve needs at least two samples");
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].k > samples[i - 1].k)) {
      throw InvalidStateError("curve samples must be strictly increasing in k");
    }
  }
  if (closed) {
    const double gap = max_abs_entry_diff(samples.front().state.matrix(),
                                          samples.back().state.matrix());
    if (gap > 1e-10) {
      throw InvalidStateError("closed curve endpoints differ by " +
                              std::to_string(gap));
    }
  }
  return ClosedCurve(std::move(samples), closed);
}

ClosedCurve ClosedCurve::kitaev_gibbs(const ChainParams& params, int n_turns,
                                      int samples_per_turn) {
  if (n_turns < 1 || samples_per_turn < 64) {
    throw InvalidStateError(
        "kitaev_gibbs needs n_turns >= 1 and samples_per_turn >= 64");
  }
  const int n = n_turns * samples_per_turn;
  std::vector<CurveSample> samples;
  samples.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double k = two_pi * i / samples_per_turn;
    const QubitState state = (params.T > 0.0) ? gibbs_state(params, k)
                                              : pure_state(params, k);
    samples.push_back({k, state});
  }
  return from_samples(std::move(samples), /*closed=*/true);
}

bool NodeRay::is_node(const QubitState& s, double angular_tol) const {
  const BlochVector v = to_bloch(s);
  const double r = v.norm();
  if (r < 1e-12 || r > 1.0 + 1e-12) {
    return false;
  }
  const double proj = (v.x * direction.x + v.y * direction.y +
                       v.z * direction.z) / r;
  const double cx = v.y * direction.z - v.z * direction.y;
  const double cy = v.z * direction.x - v.x * direction.z;
  const double cz = v.x * direction.y - v.y * direction.x;
  const double cross = std::sqrt(cx * cx + cy * cy + cz * cz) / r;
  return std::atan2(cross, proj) <= angular_tol;
}

double solid_angle_phase(const ClosedCurve& curve) {
  if (!curve.closed()) {
    throw InvalidStateError("solid angle requires a closed curve");
  }
  const std::vector<Vec3> dirs = curve_directions(curve);

  double max_z = 0.0;
  for (const Vec3& d : dirs) {
    max_z = std::max(max_z, std::abs(d.z));
  }
  if (max_z <= kPlanarTol) {
    // Exactly planar loop: score by winding; the spherical-excess sum is
    // ill-conditioned for great-circle loops.
    double total = 0.0;
    double prev = std::atan2(dirs[0].y, dirs[0].x);
    for (std::size_t i = 1; i < dirs.size(); ++i) {
      const double here = std::atan2(dirs[i].y, dirs[i].x);
      const double step = std::remainder(here - prev, two_pi);
      if (std::abs(step) >= kMaxDirectionStep) {
        throw UndefinedPhaseError(
            "direction step >= pi/2 between curve samples; undersampled or "
            "passing the maximally mixed state");
      }
      total += step;
      prev = here;
    }
    const long long winding = std::llround(total / two_pi);
    if (std::abs(total - winding * two_pi) > 1e-6) {
      throw NumericError("closed planar curve has non-integer winding " +
                         std::to_string(total / two_pi));
    }
    return std::numbers::pi * static_cast<double>(winding);
  }

  // The transported eigenvector returns with e^{i theta_1} equal to
  // exp(-i/2 times the signed area swept); orientation fixed so the result
  // matches the planar convention modulo 2 pi.
  const Vec3 ref = pick_reference_axis(dirs);
  return -0.5 * fan_solid_angle(dirs, ref);
}

InterferometricResult interferometric_phase(const ClosedCurve& curve) {
  InterferometricResult out;
  out.half_solid_angle = solid_angle_phase(curve);
  out.initial_radius = to_bloch(curve.samples().front().state).norm();
  out.gamma = std::atan2(out.initial_radius * std::sin(out.half_solid_angle),
                         std::cos(out.half_solid_angle));
  return out;
}

std::vector<ComplexVec2> gauge_fix(const std::vector<ComplexVec2>& eigenpath) {
  std::vector<ComplexVec2> out = eigenpath;
  double chi = 0.0;
  for (std::size_t i = 1; i < eigenpath.size(); ++i) {
    chi += std::arg(dot(eigenpath[i - 1], eigenpath[i]));
    out[i] = eigenpath[i] * std::polar(1.0, -chi);
  }
  return out;
}

double phase_from_overlaps(const ClosedCurve& curve) {
  const std::vector<ComplexVec2> u1 = gauge_fix(eigenpath(curve, true));
  const std::vector<ComplexVec2> u2 = gauge_fix(eigenpath(curve, false));
  const Complex total = overlap_sum(curve, u1, u2, curve.samples().size() - 1);
  if (std::abs(total) < 1e-12) {
    throw UndefinedPhaseError("overlap sum vanishes at the curve endpoint");
  }
  return std::arg(total);
}

std::vector<double> phase_profile(const ClosedCurve& curve) {
  const std::vector<ComplexVec2> u1 = gauge_fix(eigenpath(curve, true));
  const std::vector<ComplexVec2> u2 = gauge_fix(eigenpath(curve, false));
  std::vector<double> out(curve.samples().size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = std::arg(overlap_sum(curve, u1, u2, j));
  }
  return out;
}

NodeRay node_ray(const QubitState& curve_start) {
  const BlochVector v = to_bloch(curve_start);
  const double r = v.norm();
  if (r <= 1e-12) {
    throw InvalidStateError(
        "node ray undefined for a maximally mixed initial state");
  }
  return {{-v.x / r, -v.y / r, -v.z / r}};
}

int winding_invariant(int degree, int n_turns) {
  const long long product =
      static_cast<long long>(degree) * static_cast<long long>(n_turns);
  return (product % 2 != 0) ? -1 : 1;
}

}  // namespace geomphase
