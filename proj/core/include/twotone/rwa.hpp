#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "twotone/model.hpp"

namespace twotone::rwa {

// Quadrature ordering used by every 4x4 matrix in this project:
//   X1 = (b^dag + b)/sqrt(2), X2 = i(b^dag - b)/sqrt(2)  (mechanics)
//   U1 = (d^dag + d)/sqrt(2), U2 = i(d^dag - d)/sqrt(2)  (cavity)
enum Quadrature : int { kX1 = 0, kX2 = 1, kU1 = 2, kU2 = 3 };

struct DriftDiffusion {
  Eigen::Matrix4d drift;
  Eigen::Matrix4d diffusion;
};

// Rotating-wave drift and symmetrized-noise diffusion:
//   dX1 = -(G- - G+) U2 - (Gamma_M/2) X1, dU2 = (G- + G+) X1 - (kappa/2) U2
//   dU1 = -(G- - G+) X2 - (kappa/2) U1,  dX2 = (G- + G+) U1 - (Gamma_M/2) X2
//   D = diag(Gamma_M(n_th + 1/2), same, kappa/2, kappa/2)
DriftDiffusion build_rwa_drift_diffusion(const SystemParams& p);

// All variances in zero-point units: vacuum = 1, 3 dB limit = 0.5.
struct SteadyStateReport {
  double var_x1 = 0.0;       // 2<X1^2>
  double var_x2 = 0.0;       // 2<X2^2>
  double cross_x1x2 = 0.0;   // <{X1,X2}>/2
  double n_eff = 0.0;        // (1+2 n_eff)^2 = 4 det(mechanical covariance)
  double squeezing_db = 0.0;
  // Bogoliubov moments, reconstructed when g_plus < g_minus.
  std::optional<double> beta_occupancy;  // <beta^dag beta>
  std::optional<double> beta_anomalous;  // Re <beta beta> (real in steady state)
  // Cavity photon number; absent for reduced (Lindblad) descriptions.
  std::optional<double> cavity_occupancy;
};

// Fills a report from a 4x4 symmetrized covariance. Exposed so the Floquet
// and Lindblad paths produce identical report shapes.
SteadyStateReport report_from_covariance(const Eigen::Matrix4d& v,
                                         const SystemParams& p,
                                         bool with_cavity = true);

// Exact steady state of the RWA model via the Lyapunov equation.
SteadyStateReport steady_state(const SystemParams& p);

struct OptimalRatio {
  double ratio;              // 1 - sqrt((1+2 n_th)/coop)
  double e_minus_2r;         // (1/2) sqrt((1+2 n_th)/coop)
  bool regime_warning;       // coop < 100 (1+2 n_th): asymptotic form is rough
};

// Closed-form drive ratio maximizing squeezing at fixed cooperativity.
OptimalRatio optimal_ratio_analytic(double coop, double n_th);

// Closed-form minimum 2<X1^2>: (Gamma_M/kappa)(1+2 n_th) + sqrt((1+2n_th)/C).
double min_variance_analytic(double coop, double n_th, double gamma_over_kappa);

struct SelfEnergy {
  std::complex<double> sigma;  // -i (G-^2 - G+^2) / (kappa/2 - i omega)
  double n_eff_x1;             // 1 + 2n = (G- - G+)/(G- + G+) at omega = 0
  double n_eff_x2;             // +infinity at G+ = G-
};

// Cavity-eliminated picture: self-energy plus the effective occupancies of
// the noise driving each mechanical quadrature.
SelfEnergy semiclassical_self_energy(const SystemParams& p, double omega);

struct ImpedanceMatch {
  double gamma_opt;
  double heating_rate;        // Gamma_M (1+2 n_th) e^{2r}, exact e^{2r}
  double ratio;               // gamma_opt / heating_rate; exactly 1 at the
                              // analytic optimum
  double heating_rate_asymptotic;  // Gamma_M sqrt(4 C (1+2 n_th)), the
                                   // large-C form of the same rate
  double ratio_asymptotic;
  bool regime_warning;
};

ImpedanceMatch impedance_match_check(const SystemParams& p);

struct BaeComparison {
  double var_x1;     // sqrt((1+2 n_th)/coop)
  double purity_sq;  // (1+2 n_eff)^2 = sqrt(1+2 n_th) sqrt(coop)
  double n_eff;
};

// Measurement-plus-feedback benchmark at the same cooperativity.
BaeComparison bae_comparison(double coop, double n_th);

}  // namespace twotone::rwa
