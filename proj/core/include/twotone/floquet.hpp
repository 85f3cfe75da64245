#pragma once

#include <Eigen/Dense>

#include "twotone/model.hpp"
#include "twotone/optimize.hpp"

namespace twotone::floquet {

// Drift of the full time-periodic model at time t, in the (X1, X2, U1, U2)
// basis. On top of the rotating-wave part this carries the 2*Omega
// counter-rotating couplings and, when g_three > 0, the 2*Omega and 4*Omega
// third-tone couplings. A(t + pi/Omega) = A(t) exactly; an infinite omega_m
// yields the rotating-wave drift at every t.
Eigen::Matrix4d build_time_dependent_drift(const SystemParams& p, double t);

struct FloquetOptions {
  double tolerance = 1e-8;     // max-abs relative change of the period average
  long max_periods = 100000;
  int steps_per_period = 256;  // RK4 steps per fundamental period pi/Omega
  bool zero_oscillating = false;  // integrate with the oscillating terms off
};

struct FloquetResult {
  Eigen::Matrix4d v_avg;     // period-averaged covariance at convergence
  Eigen::Matrix4d v_phase0;  // covariance at the final period boundary
  double var_x1_avg = 0.0;   // period average of 2<X1^2>
  double var_x1_min = 0.0;   // extrema of 2<X1^2> over the final period
  double var_x1_max = 0.0;
  long periods = 0;
  bool converged = false;
};

// Integrates dV/dt = A(t) V + V A(t)^T + D from the rotating-wave steady
// state over successive periods T = pi/Omega until the period-averaged
// covariance settles. Throws NotConverged past max_periods and NonFinite if
// the time-periodic system is parametrically unstable.
FloquetResult periodic_steady_state(const SystemParams& p,
                                    const FloquetOptions& opts = {});

// Figure-style sweep: per cooperativity, optimize the drive ratio against
// the period-averaged variance and record the bad-cavity validity check.
std::vector<optimize::SweepRecord> optimized_squeezing_vs_cooperativity(
    const optimize::SweepOptions& opts, const std::vector<double>& coop_grid);

}  // namespace twotone::floquet
