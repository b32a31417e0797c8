#include "geomphase/numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace geomphase {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return (fa + 4.0 * fm + fb) * (h / 6.0);
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double fa, double fm, double fb, double whole, double tol,
             int depth, int max_depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth >= max_depth) {
    throw ConvergenceError("quadrature did not converge on subinterval [" +
                           std::to_string(a) + ", " + std::to_string(b) +
                           "], residual " + std::to_string(delta));
  }
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0)) {
    throw InvalidStateError("quadrature abs_tol must be positive");
  }
  if (a == b) {
    return 0.0;
  }
  double lo = a;
  double hi = b;
  double sign = 1.0;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1.0;
  }
  const double mid = 0.5 * (lo + hi);
  const double fa = f(lo);
  const double fm = f(mid);
  const double fb = f(hi);
  if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb)) {
    throw NumericError("integrand is not finite on [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
  }
  const double whole = simpson(fa, fm, fb, hi - lo);
  return sign *
         adapt(f, lo, hi, fa, fm, fb, whole, spec.abs_tol, 0, spec.max_depth);
}

double find_root(const std::function<double(double)>& f,
                 const RootSpec& spec) {
  if (!(spec.lo < spec.hi)) {
    throw InvalidStateError("root bracket requires lo < hi");
  }
  double lo = spec.lo;
  double hi = spec.hi;
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw BracketError("no sign change over bracket [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
  }
  for (int it = 0; it < spec.max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= spec.x_tol) {
      return mid;
    }
    const double fmid = f(mid);
    if (fmid == 0.0) {
      return mid;
    }
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("bisection exhausted max_iter before reaching x_tol");
}

std::vector<double> unwrap(const std::vector<double>& angles) {
  std::vector<double> out(angles.size());
  if (angles.empty()) {
    return out;
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  out[0] = angles[0];
  for (std::size_t i = 1; i < angles.size(); ++i) {
    const double d = std::remainder(angles[i] - angles[i - 1], two_pi);
    if (std::abs(d) >= std::numbers::pi * (1.0 - 1e-12)) {
      throw UndersampledError("adjacent angle samples differ by ~pi at index " +
                              std::to_string(i));
    }
    out[i] = out[i - 1] + d;
  }
  return out;
}

}  // namespace geomphase
