#pragma once

#include <functional>
#include <string>
#include <vector>

#include "twotone/model.hpp"

namespace twotone::optimize {

// Variance of 2<X1^2> as a function of the drive ratio G+/G-.
using VarianceBackend = std::function<double(double)>;

struct OptimizeResult {
  double ratio_opt = 0.0;
  double var_opt = 0.0;
  bool interior = true;  // false: minimum sat on a bound, values are boundary
  int evaluations = 0;
};

// Coarse grid scan (global bracket, ties resolved toward the smaller ratio)
// followed by golden-section refinement to |delta ratio| < tol. Backend
// exceptions propagate.
OptimizeResult optimize_ratio(const VarianceBackend& var_of_ratio, double lo,
                              double hi, double tol = 1e-6,
                              int coarse_points = 200);

enum class Backend { kRwa, kLindblad, kFloquet };

std::string backend_name(Backend b);

struct FloquetSweepKnobs {
  double tolerance = 1e-8;
  long max_periods = 100000;
  int steps_per_period = 256;
};

struct SweepOptions {
  double kappa = 1.0;
  double gamma_over_kappa = 1e-4;
  double n_th = 0.0;
  double omega_m = kInfiniteFrequency;  // finite only for the Floquet backend
  bool third_tone_tied = false;         // g_three = g_plus along the scan
  double ratio_lo = 1e-3;
  double ratio_hi = 1.0 - 1e-7;
  double tol = 1e-6;
  int coarse_points = 200;
  int jobs = 1;
  FloquetSweepKnobs floquet;
};

// One row of an optimized sweep. Unstable or failed points carry their error
// in status and NaNs in the numeric fields; the sweep itself never aborts.
struct SweepRecord {
  double coop = 0.0;
  double ratio_opt = 0.0;
  double var_x1_opt = 0.0;
  double var_x1_analytic = 0.0;  // closed-form minimum variance overlay
  double n_eff = 0.0;
  double beta_occ = 0.0;
  std::string backend;
  bool interior = true;
  bool converged = true;
  bool bad_cavity_ok = true;  // validity condition (always true in RWA)
  double validity_lhs = 0.0;
  double validity_rhs = 0.0;
  std::string status = "ok";
  double wall_time_ms = 0.0;
};

// Variance-vs-ratio evaluator for one cooperativity. The Floquet flavor maps
// parametric instability and non-convergence to +infinity so the optimizer
// steers away from those ratios; sweep records count them in status.
VarianceBackend make_variance_backend(Backend b, double coop,
                                      const SweepOptions& opts);

// Optimizes each cooperativity on the grid; points evaluate independently
// and in parallel when jobs > 1, output order follows the input grid.
std::vector<SweepRecord> sweep(Backend b, const SweepOptions& opts,
                               const std::vector<double>& coop_grid);

}  // namespace twotone::optimize
