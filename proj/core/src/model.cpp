#include "twotone/model.hpp"

#include <string>

namespace twotone {

void validate(const SystemParams& p) {
  auto bad = [](const std::string& msg) { throw InvalidInput(msg); };
  if (!(p.kappa > 0.0) || !std::isfinite(p.kappa)) bad("kappa must be positive");
  if (!(p.gamma_m > 0.0) || !std::isfinite(p.gamma_m)) bad("gamma_m must be positive");
  if (!(p.omega_m > 0.0)) bad("omega_m must be positive (or infinite for RWA)");
  if (!(p.n_th >= 0.0) || !std::isfinite(p.n_th)) bad("n_th must be >= 0");
  if (!(p.g_minus > 0.0) || !std::isfinite(p.g_minus)) bad("g_minus must be positive");
  if (!(p.g_plus >= 0.0) || !std::isfinite(p.g_plus)) bad("g_plus must be >= 0");
  if (!(p.g_three >= 0.0) || !std::isfinite(p.g_three)) bad("g_three must be >= 0");
}

double cooperativity(const SystemParams& p) {
  return 4.0 * p.g_minus * p.g_minus / (p.kappa * p.gamma_m);
}

DerivedQuantities derive(const SystemParams& p) {
  validate(p);
  if (!p.stable_ratio())
    throw UnstableRatio("g_plus >= g_minus: tanh r = " + std::to_string(p.ratio()) +
                        " admits no finite squeeze parameter");
  DerivedQuantities d{};
  const double q = p.ratio();
  d.r = std::atanh(q);
  d.g_eff = std::sqrt(p.g_minus * p.g_minus - p.g_plus * p.g_plus);
  d.coop = cooperativity(p);
  d.gamma_opt = 4.0 * d.g_eff * d.g_eff / p.kappa;
  d.cosh_r = p.g_minus / d.g_eff;
  d.sinh_r = p.g_plus / d.g_eff;
  d.exp_minus_2r = (p.g_minus - p.g_plus) / (p.g_minus + p.g_plus);
  d.exp_2r = 1.0 / d.exp_minus_2r;
  return d;
}

SystemParams params_from_cooperativity(double coop, double ratio, double kappa,
                                       double gamma_m, double n_th, double omega_m,
                                       double g_three) {
  if (!(coop > 0.0)) throw InvalidInput("cooperativity must be positive");
  if (!(ratio >= 0.0)) throw InvalidInput("ratio G+/G- must be >= 0");
  SystemParams p;
  p.kappa = kappa;
  p.gamma_m = gamma_m;
  p.omega_m = omega_m;
  p.n_th = n_th;
  p.g_minus = std::sqrt(coop * kappa * gamma_m / 4.0);
  p.g_plus = ratio * p.g_minus;
  p.g_three = g_three;
  validate(p);
  return p;
}

BadCavityCheck check_bad_cavity_condition(const SystemParams& p) {
  validate(p);
  if (p.rwa()) throw InvalidInput("bad-cavity check needs a finite omega_m");
  BadCavityCheck c{};
  const double coop = cooperativity(p);
  c.lhs = std::pow(coop, 1.5);
  c.rhs = std::sqrt(1.0 + 2.0 * p.n_th) * (p.kappa / p.gamma_m) *
          (p.omega_m / p.kappa) * (p.omega_m / p.kappa);
  c.margin = 10.0;
  c.satisfied = c.lhs < c.rhs / c.margin;
  return c;
}

double strong_coupling_coop_threshold(double kappa, double gamma_m, double n_th) {
  if (!(kappa > 0.0) || !(gamma_m > 0.0) || !(n_th >= 0.0))
    throw InvalidInput("strong-coupling threshold needs positive rates");
  const double k = kappa / gamma_m;
  return k * k / (16.0 * (1.0 + 2.0 * n_th));
}

}  // namespace twotone
