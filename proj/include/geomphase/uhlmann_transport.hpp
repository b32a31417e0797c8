#pragma once

#include <optional>
#include <vector>

#include "geomphase/kitaev_model.hpp"
#include "geomphase/numerics.hpp"

namespace geomphase {

// Knobs for transport, node bracketing and critical-temperature solving.
struct TransportSpec {
  QuadratureSpec quadrature{};
  int grid_per_turn = 4096;
  double k_tol = 1e-10;           // node location refinement
  double trace_zero_tol = 1e-8;   // zero-without-sign-change detection
  double endpoint_tol = 1e-9;     // node-at-closure detection
};

// Running state of the transported lift at momentum k: the accumulated
// diagonal holonomy angle, the holonomy trace, and the sign accumulated from
// the trace zeros crossed so far.
struct TransportState {
  double k = 0.0;
  double angle = 0.0;
  double trace_value = 1.0;
  int sign = 1;
};

// A zero of the holonomy trace. A node located at a grid point where the
// trace does not change sign is flagged degenerate (suspected double root or
// knife-edge closure node).
struct NodeRecord {
  double k = 0.0;
  int turn = 1;        // 1-based; a node at exactly 2 pi n belongs to turn n
  double x = 0.0;      // sech(gap / 2T) at the node
  bool degenerate = false;
};

// Temperature at which the transported curve develops a node exactly at the
// close of turn n1, on the branch labelled by n2.
struct CriticalTemperature {
  int n1 = 1;
  int n2 = 0;
  double m = 0.0;
  double T = 0.0;
};

struct CriticalTempSpec {
  double t_min = 1e-3;
  double t_max = 1e3;
  int scan_points = 256;
  double t_tol = 1e-9;
  QuadratureSpec quadrature{1e-11, 40};
};

// Integrand of the accumulated angle: phi_dot (1 - sech(gap / 2T)) / 2.
// Requires T > 0.
double connection_angle_rate(const ChainParams& params, double k);

// Accumulated angle over [0, k_end] by adaptive quadrature; additive over
// concatenated intervals.
double transport_angle(const ChainParams& params, double k_end,
                       const QuadratureSpec& spec = {});

// The parallel lift psi(k) U(k) of the Gibbs curve, with U the diagonal
// holonomy accumulated from the abelian equatorial connection. Projects back
// onto gibbs_state(params, k) exactly.
Purification parallel_lift(const ChainParams& params, double k,
                           const QuadratureSpec& spec = {});

// Tr(psi_par(0)^dagger psi_par(k)); real for equatorial curves.
double holonomy_trace(const ChainParams& params, double k,
                      const QuadratureSpec& spec = {});

// All zeros of the holonomy trace on (0, 2 pi n_turns], located by sign
// bracketing on a uniform grid and refined by bisection.
std::vector<NodeRecord> find_nodes(const ChainParams& params, int n_turns,
                                   const TransportSpec& spec = {});

// Grid samples of the transport over n_turns revolutions.
std::vector<TransportState> transport_profile(const ChainParams& params,
                                              int n_turns,
                                              const TransportSpec& spec = {});

// (-1)^(number of nodes) over n_turns revolutions. Throws UndefinedPhaseError
// if a node is degenerate or sits at the curve closure (critical temperature).
int uhlmann_phase_factor(const ChainParams& params, int n_turns,
                         const TransportSpec& spec = {});

// Solves angle(2 pi n1; T) = (2 n2 + 1) pi / 2 for T by scanning
// (t_min, t_max) and bisecting the first bracket, so the (n2 + 1)-th node
// lands exactly at the closure of turn n1. Empty if the branch is not
// attained in the window.
std::optional<CriticalTemperature> critical_temperature(
    double m, int n1, int n2, const CriticalTempSpec& spec = {});

}  // namespace geomphase
