#include "twotone/rwa.hpp"

#include <cmath>
#include <limits>

#include "twotone/linalg.hpp"

namespace twotone::rwa {

DriftDiffusion build_rwa_drift_diffusion(const SystemParams& p) {
  validate(p);
  const double gsum = p.g_minus + p.g_plus;
  const double gdif = p.g_minus - p.g_plus;

  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
  a(kX1, kX1) = -0.5 * p.gamma_m;
  a(kX1, kU2) = -gdif;
  a(kX2, kX2) = -0.5 * p.gamma_m;
  a(kX2, kU1) = gsum;
  a(kU1, kU1) = -0.5 * p.kappa;
  a(kU1, kX2) = -gdif;
  a(kU2, kU2) = -0.5 * p.kappa;
  a(kU2, kX1) = gsum;

  Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
  d(kX1, kX1) = p.gamma_m * (p.n_th + 0.5);
  d(kX2, kX2) = p.gamma_m * (p.n_th + 0.5);
  d(kU1, kU1) = 0.5 * p.kappa;
  d(kU2, kU2) = 0.5 * p.kappa;
  return {a, d};
}

SteadyStateReport report_from_covariance(const Eigen::Matrix4d& v,
                                         const SystemParams& p, bool with_cavity) {
  SteadyStateReport rep;
  rep.var_x1 = 2.0 * v(kX1, kX1);
  rep.var_x2 = 2.0 * v(kX2, kX2);
  rep.cross_x1x2 = v(kX1, kX2);
  const double det4 =
      4.0 * (v(kX1, kX1) * v(kX2, kX2) - v(kX1, kX2) * v(kX1, kX2));
  rep.n_eff = 0.5 * (std::sqrt(std::max(det4, 0.0)) - 1.0);
  rep.squeezing_db = squeezing_db(rep.var_x1);
  if (p.stable_ratio()) {
    // Invert the Bogoliubov-frame variance relations
    //   2<X1^2> = e^{-2r} (1 + 2<b+b> + 2 Re<bb>)
    //   2<X2^2> = e^{+2r} (1 + 2<b+b> - 2 Re<bb>)
    const auto dq = derive(p);
    const double plus = dq.exp_2r * rep.var_x1;
    const double minus = dq.exp_minus_2r * rep.var_x2;
    rep.beta_occupancy = 0.25 * (plus + minus - 2.0);
    rep.beta_anomalous = 0.25 * (plus - minus);
  }
  if (with_cavity)
    rep.cavity_occupancy = 0.5 * (v(kU1, kU1) + v(kU2, kU2) - 1.0);
  return rep;
}

SteadyStateReport steady_state(const SystemParams& p) {
  const auto [a, d] = build_rwa_drift_diffusion(p);
  const auto sol = linalg::solve_lyapunov(a, d);
  return report_from_covariance(sol.v, p);
}

OptimalRatio optimal_ratio_analytic(double coop, double n_th) {
  if (!(coop > 0.0) || !(n_th >= 0.0))
    throw InvalidInput("optimal_ratio_analytic needs coop > 0 and n_th >= 0");
  const double s = std::sqrt((1.0 + 2.0 * n_th) / coop);
  return {1.0 - s, 0.5 * s, coop < 100.0 * (1.0 + 2.0 * n_th)};
}

double min_variance_analytic(double coop, double n_th, double gamma_over_kappa) {
  if (!(coop > 0.0) || !(n_th >= 0.0) || !(gamma_over_kappa > 0.0))
    throw InvalidInput("min_variance_analytic needs positive coop and rates");
  return gamma_over_kappa * (1.0 + 2.0 * n_th) +
         std::sqrt((1.0 + 2.0 * n_th) / coop);
}

SelfEnergy semiclassical_self_energy(const SystemParams& p, double omega) {
  validate(p);
  const double geff_sq = p.g_minus * p.g_minus - p.g_plus * p.g_plus;
  const std::complex<double> den(0.5 * p.kappa, -omega);
  SelfEnergy s{};
  s.sigma = std::complex<double>(0.0, -geff_sq) / den;
  const double gsum = p.g_minus + p.g_plus;
  const double gdif = p.g_minus - p.g_plus;
  s.n_eff_x1 = 0.5 * (gdif / gsum - 1.0);
  s.n_eff_x2 = gdif > 0.0 ? 0.5 * (gsum / gdif - 1.0)
                          : std::numeric_limits<double>::infinity();
  return s;
}

ImpedanceMatch impedance_match_check(const SystemParams& p) {
  const auto dq = derive(p);
  ImpedanceMatch m{};
  m.gamma_opt = dq.gamma_opt;
  m.heating_rate = p.gamma_m * (1.0 + 2.0 * p.n_th) * dq.exp_2r;
  m.ratio = m.gamma_opt / m.heating_rate;
  m.heating_rate_asymptotic =
      p.gamma_m * std::sqrt(4.0 * dq.coop * (1.0 + 2.0 * p.n_th));
  m.ratio_asymptotic = m.gamma_opt / m.heating_rate_asymptotic;
  m.regime_warning = dq.coop < 100.0 * (1.0 + 2.0 * p.n_th);
  return m;
}

BaeComparison bae_comparison(double coop, double n_th) {
  if (!(coop > 0.0) || !(n_th >= 0.0))
    throw InvalidInput("bae_comparison needs coop > 0 and n_th >= 0");
  BaeComparison b{};
  b.var_x1 = std::sqrt((1.0 + 2.0 * n_th) / coop);
  b.purity_sq = std::sqrt(1.0 + 2.0 * n_th) * std::sqrt(coop);
  b.n_eff = 0.5 * (std::sqrt(b.purity_sq) - 1.0);
  return b;
}

}  // namespace twotone::rwa
