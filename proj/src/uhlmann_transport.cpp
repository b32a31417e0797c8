#include "geomphase/uhlmann_transport.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace geomphase {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double sech_x(const ChainParams& params, double k) {
  return 1.0 / std::cosh(band_gap(params, k) / (2.0 * params.T));
}

void require_thermal(const ChainParams& params) {
  if (!(params.T > 0.0)) {
    throw BundleUndefinedError(
        "Uhlmann transport requires a full-rank (T > 0) Gibbs curve");
  }
}

// Endpoint weights of the holonomy trace.
struct TraceWeights {
  double a0;  // sqrt(1 + x(0))
  double b0;  // sqrt(1 - x(0))
};

TraceWeights weights_at_start(const ChainParams& params) {
  const double x0 = sech_x(params, 0.0);
  return {std::sqrt(1.0 + x0), std::sqrt(1.0 - x0)};
}

double trace_value(const ChainParams& params, const TraceWeights& w, double k,
                   double angle) {
  const double xk = sech_x(params, k);
  const double phi = std::atan2(std::sin(k), params.m + std::cos(k));
  return 0.5 * (w.a0 * std::sqrt(1.0 + xk) * std::cos(angle) +
                w.b0 * std::sqrt(1.0 - xk) * std::cos(phi + angle));
}

// Walks the trace over a uniform grid with the angle accumulated cell by
// cell; visit(i, k, angle, trace) is called for every grid point, i = 0
// first.
void walk_trace(const ChainParams& params, int n_turns,
                const TransportSpec& spec,
                const std::function<void(int, double, double, double)>& visit) {
  require_thermal(params);
  if (n_turns < 1) {
    throw InvalidStateError("n_turns must be >= 1");
  }
  if (spec.grid_per_turn < 64) {
    throw InvalidStateError("grid_per_turn must be >= 64");
  }
  const TraceWeights w = weights_at_start(params);
  const int n = spec.grid_per_turn * n_turns;
  const QuadratureSpec cell_quad{spec.quadrature.abs_tol / n,
                                 spec.quadrature.max_depth};
  const auto rate = [&](double k) { return connection_angle_rate(params, k); };
  double angle = 0.0;
  visit(0, 0.0, 0.0, trace_value(params, w, 0.0, 0.0));
  for (int i = 1; i <= n; ++i) {
    const double k0 = two_pi * (i - 1) / spec.grid_per_turn;
    const double k1 = two_pi * i / spec.grid_per_turn;
    angle += integrate(rate, k0, k1, cell_quad);
    visit(i, k1, angle, trace_value(params, w, k1, angle));
  }
}

int turn_of(double k, double endpoint_tol) {
  const int t = static_cast<int>(std::ceil((k - endpoint_tol) / two_pi));
  return std::max(t, 1);
}

NodeRecord make_record(const ChainParams& params, double k, bool degenerate,
                       double endpoint_tol) {
  NodeRecord rec;
  rec.k = k;
  rec.turn = turn_of(k, endpoint_tol);
  rec.x = sech_x(params, k);
  rec.degenerate = degenerate;
  return rec;
}

}  // namespace

double connection_angle_rate(const ChainParams& params, double k) {
  require_thermal(params);
  return 0.5 * polar_angle_rate(params, k) * (1.0 - sech_x(params, k));
}

double transport_angle(const ChainParams& params, double k_end,
                       const QuadratureSpec& spec) {
  require_thermal(params);
  return integrate([&](double k) { return connection_angle_rate(params, k); },
                   0.0, k_end, spec);
}

Purification parallel_lift(const ChainParams& params, double k,
                           const QuadratureSpec& spec) {
  require_thermal(params);
  const double xk = sech_x(params, k);
  const double a = std::sqrt(1.0 + xk);
  const double b = std::sqrt(1.0 - xk);
  const double angle = transport_angle(params, k, spec);
  const double phi = std::atan2(std::sin(k), params.m + std::cos(k));
  // psi_par = sqrt(rho(k)) diag(e^{i angle}, e^{-i angle})
  return {{0.5 * a * std::polar(1.0, angle),
           0.5 * b * std::polar(1.0, -(phi + angle)),
           0.5 * b * std::polar(1.0, phi + angle),
           0.5 * a * std::polar(1.0, -angle)}};
}

double holonomy_trace(const ChainParams& params, double k,
                      const QuadratureSpec& spec) {
  require_thermal(params);
  const TraceWeights w = weights_at_start(params);
  return trace_value(params, w, k, transport_angle(params, k, spec));
}

std::vector<NodeRecord> find_nodes(const ChainParams& params, int n_turns,
                                   const TransportSpec& spec) {
  const TraceWeights w = weights_at_start(params);
  const int n = spec.grid_per_turn * n_turns;
  const QuadratureSpec cell_quad{spec.quadrature.abs_tol / n,
                                 spec.quadrature.max_depth};
  const auto rate = [&](double k) { return connection_angle_rate(params, k); };

  std::vector<double> ks(n + 1), angles(n + 1), traces(n + 1);
  walk_trace(params, n_turns, spec,
             [&](int i, double k, double angle, double trace) {
               ks[i] = k;
               angles[i] = angle;
               traces[i] = trace;
             });

  std::vector<NodeRecord> nodes;
  std::vector<char> cell_has_crossing(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const double t0 = traces[i - 1];
    const double t1 = traces[i];
    if (t1 == 0.0) {
      cell_has_crossing[i] = 1;
      const bool simple = (i < n) && (t0 > 0.0) != (traces[i + 1] > 0.0);
      nodes.push_back(
          make_record(params, ks[i], /*degenerate=*/!simple, spec.endpoint_tol));
      continue;
    }
    if (t0 != 0.0 && (t0 > 0.0) != (t1 > 0.0)) {
      cell_has_crossing[i] = 1;
      const double base = angles[i - 1];
      const double k_lo = ks[i - 1];
      const auto g = [&](double k) {
        return trace_value(params, w, k,
                           base + integrate(rate, k_lo, k, cell_quad));
      };
      RootSpec root{k_lo, ks[i], spec.k_tol, 200};
      nodes.push_back(make_record(params, find_root(g, root),
                                  /*degenerate=*/false, spec.endpoint_tol));
    }
  }

  // Zeros the grid grazes without a sign change (double roots, or a node
  // sitting exactly at the closure of the curve).
  for (int i = 1; i <= n; ++i) {
    if (std::abs(traces[i]) >= spec.trace_zero_tol || traces[i] == 0.0) {
      continue;
    }
    if (cell_has_crossing[i] || (i < n && cell_has_crossing[i + 1])) {
      continue;
    }
    const bool local_min =
        (std::abs(traces[i]) <= std::abs(traces[i - 1])) &&
        (i == n || std::abs(traces[i]) <= std::abs(traces[i + 1]));
    if (local_min) {
      nodes.push_back(
          make_record(params, ks[i], /*degenerate=*/true, spec.endpoint_tol));
    }
  }
  std::sort(nodes.begin(), nodes.end(),
            [](const NodeRecord& a, const NodeRecord& b) { return a.k < b.k; });
  return nodes;
}

std::vector<TransportState> transport_profile(const ChainParams& params,
                                              int n_turns,
                                              const TransportSpec& spec) {
  std::vector<TransportState> out;
  out.reserve(spec.grid_per_turn * n_turns + 1);
  int sign = 1;
  double last_nonzero = 1.0;
  walk_trace(params, n_turns, spec,
             [&](int i, double k, double angle, double trace) {
               if (i > 0 && trace != 0.0 &&
                   (last_nonzero > 0.0) != (trace > 0.0)) {
                 sign = -sign;
               }
               out.push_back({k, angle, trace, sign});
               if (trace != 0.0) {
                 last_nonzero = trace;
               }
             });
  return out;
}

int uhlmann_phase_factor(const ChainParams& params, int n_turns,
                         const TransportSpec& spec) {
  const std::vector<NodeRecord> nodes = find_nodes(params, n_turns, spec);
  const double k_close = two_pi * n_turns;
  for (const NodeRecord& rec : nodes) {
    if (rec.degenerate) {
      throw UndefinedPhaseError("degenerate node at k = " +
                                std::to_string(rec.k) +
                                "; phase factor undefined");
    }
    if (std::abs(rec.k - k_close) <= spec.endpoint_tol) {
      throw UndefinedPhaseError(
          "node at the curve closure (critical temperature); phase factor "
          "undefined");
    }
  }
  return (nodes.size() % 2 == 0) ? 1 : -1;
}

std::optional<CriticalTemperature> critical_temperature(
    double m, int n1, int n2, const CriticalTempSpec& spec) {
  if (n1 < 1 || n2 < 0 || n2 >= n1) {
    throw InvalidStateError("critical temperature requires n1 >= 1 and 0 <= n2 < n1");
  }
  if (m < 0.0) {
    throw InvalidStateError("critical temperature sweep requires m >= 0");
  }
  // Branch n2 puts the (n2 + 1)-th node at the closure of turn n1; in the
  // flat band this lands at x = (2 (n1 - n2) - 1) / (2 n1).
  const double target = (2.0 * n2 + 1.0) * 0.5 * std::numbers::pi;
  // The angle rate is 2 pi periodic in k, so one turn determines them all.
  const auto mismatch = [&](double T) {
    const ChainParams p{m, T};
    return n1 * transport_angle(p, two_pi, spec.quadrature) - target;
  };
  const double log_lo = std::log(spec.t_min);
  const double log_hi = std::log(spec.t_max);
  double t_prev = spec.t_min;
  double g_prev = mismatch(t_prev);
  for (int i = 1; i < spec.scan_points; ++i) {
    const double t =
        std::exp(log_lo + (log_hi - log_lo) * i / (spec.scan_points - 1));
    const double g = mismatch(t);
    if (g_prev == 0.0) {
      return CriticalTemperature{n1, n2, m, t_prev};
    }
    if (g != 0.0 && (g_prev > 0.0) != (g > 0.0)) {
      RootSpec root{t_prev, t, spec.t_tol, 200};
      return CriticalTemperature{n1, n2, m, find_root(mismatch, root)};
    }
    t_prev = t;
    g_prev = g;
  }
  if (g_prev == 0.0) {
    return CriticalTemperature{n1, n2, m, t_prev};
  }
  return std::nullopt;
}

}  // namespace geomphase
