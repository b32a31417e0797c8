#pragma once

#include <functional>
#include <vector>

#include "geomphase/errors.hpp"

namespace geomphase {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  int max_depth = 40;
};

struct RootSpec {
  double lo = 0.0;
  double hi = 1.0;
  double x_tol = 1e-10;
  int max_iter = 200;
};

// Adaptive Simpson quadrature of f over [a, b]. Throws ConvergenceError when
// the local error bound cannot be met within spec.max_depth bisections; the
// message names the offending subinterval.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

// Bisection on [spec.lo, spec.hi]. Requires a sign change over the bracket
// (BracketError otherwise); stops once the bracket width is <= spec.x_tol.
double find_root(const std::function<double(double)>& f, const RootSpec& spec);

// Removes 2*pi jumps from a sampled angle sequence. out[0] == in[0] and every
// adjacent output difference lies strictly inside (-pi, pi); a corrected jump
// at the boundary means the sequence is undersampled (UndersampledError).
std::vector<double> unwrap(const std::vector<double>& angles);

}  // namespace geomphase
