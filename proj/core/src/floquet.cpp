#include "twotone/floquet.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "twotone/linalg.hpp"
#include "twotone/rwa.hpp"

namespace twotone::floquet {

namespace {

using Eigen::Matrix4d;

// Oscillating part of the drift at phase theta = 2*Omega*t.
Matrix4d oscillating_drift(const SystemParams& p, double c2, double s2,
                           double c4, double s4) {
  const double gsum = p.g_minus + p.g_plus;
  const double gdif = p.g_minus - p.g_plus;
  const double g3 = p.g_three;
  using namespace rwa;

  Matrix4d a = Matrix4d::Zero();
  // Counter-rotating couplings at 2*Omega.
  a(kX1, kU1) = -gsum * s2;
  a(kX1, kU2) = gdif * c2;
  a(kX2, kU1) = gsum * c2;
  a(kX2, kU2) = gdif * s2;
  a(kU1, kX1) = -gdif * s2;
  a(kU1, kX2) = gdif * c2;
  a(kU2, kX1) = gsum * c2;
  a(kU2, kX2) = gsum * s2;
  if (g3 != 0.0) {
    // Third tone: 2*Omega and 4*Omega components of
    // G3 e^{3 i Omega t} (b e^{-i Omega t} + b^dag e^{i Omega t}) d^dag + h.c.
    a(kX1, kU1) += g3 * (s4 - s2);
    a(kX1, kU2) += g3 * (c2 - c4);
    a(kX2, kU1) += -g3 * (c2 + c4);
    a(kX2, kU2) += -g3 * (s2 + s4);
    a(kU1, kX1) += g3 * (s2 + s4);
    a(kU1, kX2) += g3 * (c2 - c4);
    a(kU2, kX1) += -g3 * (c2 + c4);
    a(kU2, kX2) += g3 * (s2 - s4);
  }
  return a;
}

}  // namespace

Matrix4d build_time_dependent_drift(const SystemParams& p, double t) {
  const Matrix4d a0 = rwa::build_rwa_drift_diffusion(p).drift;
  if (p.rwa()) return a0;
  const double th = 2.0 * p.omega_m * t;
  return a0 + oscillating_drift(p, std::cos(th), std::sin(th), std::cos(2.0 * th),
                                std::sin(2.0 * th));
}

FloquetResult periodic_steady_state(const SystemParams& p,
                                    const FloquetOptions& opts) {
  if (!(opts.tolerance > 0.0) || opts.max_periods < 1 || opts.steps_per_period < 4)
    throw InvalidInput("bad Floquet options");

  const auto dd = rwa::build_rwa_drift_diffusion(p);
  const auto lyap = linalg::solve_lyapunov(dd.drift, dd.diffusion);

  FloquetResult res;
  if (p.rwa()) {
    res.v_avg = res.v_phase0 = lyap.v;
    res.var_x1_avg = res.var_x1_min = res.var_x1_max = 2.0 * lyap.v(0, 0);
    res.converged = true;
    return res;
  }

  const int n = opts.steps_per_period;
  const double period = std::numbers::pi / p.omega_m;
  const double h = period / n;

  // A(t) repeats every period, so the drift at all RK4 stage times (the
  // half-step grid) is tabulated once.
  std::vector<Matrix4d> stage(2 * n + 1);
  for (int k = 0; k <= 2 * n; ++k) {
    if (opts.zero_oscillating) {
      stage[k] = dd.drift;
    } else {
      stage[k] = build_time_dependent_drift(p, 0.5 * h * k);
    }
  }

  const Matrix4d& d = dd.diffusion;
  auto rhs = [&](const Matrix4d& a, const Matrix4d& v) -> Matrix4d {
    return a * v + v * a.transpose() + d;
  };

  Matrix4d v = lyap.v;
  Matrix4d prev_avg = Matrix4d::Zero();
  bool have_prev = false;

  for (long pnum = 0; pnum < opts.max_periods; ++pnum) {
    Matrix4d acc = Matrix4d::Zero();
    double vmin = std::numeric_limits<double>::infinity();
    double vmax = -vmin;
    for (int k = 0; k < n; ++k) {
      const Matrix4d k1 = rhs(stage[2 * k], v);
      const Matrix4d k2 = rhs(stage[2 * k + 1], v + (0.5 * h) * k1);
      const Matrix4d k3 = rhs(stage[2 * k + 1], v + (0.5 * h) * k2);
      const Matrix4d k4 = rhs(stage[2 * k + 2], v + h * k3);
      v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      v = (0.5 * (v + v.transpose())).eval();
      acc += v;
      const double vx = 2.0 * v(0, 0);
      vmin = std::min(vmin, vx);
      vmax = std::max(vmax, vx);
    }
    if (!v.allFinite())
      throw NonFinite("parametrically unstable: covariance diverged after " +
                      std::to_string(pnum + 1) + " periods");

    const Matrix4d avg = acc / n;
    res.periods = pnum + 1;
    res.v_avg = avg;
    res.v_phase0 = v;
    res.var_x1_avg = 2.0 * avg(0, 0);
    res.var_x1_min = vmin;
    res.var_x1_max = vmax;
    if (have_prev) {
      const double scale = std::max(avg.cwiseAbs().maxCoeff(), 1e-300);
      const double change = (avg - prev_avg).cwiseAbs().maxCoeff() / scale;
      if (change < opts.tolerance) {
        res.converged = true;
        return res;
      }
    }
    prev_avg = avg;
    have_prev = true;
  }
  throw NotConverged("period average still moving after " +
                     std::to_string(opts.max_periods) + " periods");
}

std::vector<optimize::SweepRecord> optimized_squeezing_vs_cooperativity(
    const optimize::SweepOptions& opts, const std::vector<double>& coop_grid) {
  return optimize::sweep(optimize::Backend::kFloquet, opts, coop_grid);
}

}  // namespace twotone::floquet
