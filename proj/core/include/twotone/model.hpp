#pragma once

#include <cmath>
#include <limits>

#include "twotone/errors.hpp"

namespace twotone {

// Rates are expressed in a common unit; the CLI uses kappa = 1 throughout and
// parameterizes everything by ratios, so no absolute unit is ever fixed.
inline constexpr double kInfiniteFrequency = std::numeric_limits<double>::infinity();

// Physical rates and drive amplitudes describing one simulation point.
// omega_m = kInfiniteFrequency selects the rotating-wave description (no
// counter-rotating terms).
struct SystemParams {
  double kappa = 1.0;    // cavity energy decay rate
  double gamma_m = 0.0;  // mechanical energy decay rate
  double omega_m = kInfiniteFrequency;  // mechanical frequency
  double n_th = 0.0;     // thermal occupancy of the mechanical bath
  double g_plus = 0.0;   // blue-sideband coupling G+
  double g_minus = 0.0;  // red-sideband coupling G-
  double g_three = 0.0;  // third-tone coupling G3 (0 disables the tone)

  double ratio() const { return g_plus / g_minus; }
  bool rwa() const { return std::isinf(omega_m); }
  // G+ < G- is required for a finite squeeze parameter; G+ = G- (the
  // back-action-evading boundary) stays representable and merely flags here.
  bool stable_ratio() const { return g_plus < g_minus; }
};

// Throws InvalidInput unless kappa, gamma_m, g_minus > 0 and
// n_th, g_plus, g_three >= 0 (omega_m must be positive or infinite).
void validate(const SystemParams& p);

struct DerivedQuantities {
  double r;          // squeeze parameter, tanh r = G+/G-
  double g_eff;      // Bogoliubov coupling sqrt(G-^2 - G+^2)
  double coop;       // cooperativity 4 G-^2 / (kappa Gamma_M)
  double gamma_opt;  // optical damping 4 g_eff^2 / kappa
  double cosh_r;     // G- / g_eff
  double sinh_r;     // G+ / g_eff
  double exp_2r;     // (G- + G+) / (G- - G+)
  double exp_minus_2r;
};

// Throws UnstableRatio when g_plus >= g_minus.
DerivedQuantities derive(const SystemParams& p);

// Cooperativity alone needs no stability assumption.
double cooperativity(const SystemParams& p);

// Inverse parameterization used by every sweep: fixes G- from the
// cooperativity and sets G+ = ratio * G-.
SystemParams params_from_cooperativity(double coop, double ratio, double kappa,
                                       double gamma_m, double n_th,
                                       double omega_m = kInfiniteFrequency,
                                       double g_three = 0.0);

struct BadCavityCheck {
  double lhs;       // coop^(3/2)
  double rhs;       // sqrt(1+2 n_th) * (kappa/Gamma_M) * (Omega/kappa)^2
  double margin;    // factor encoding "much less than"
  bool satisfied;   // lhs < rhs / margin
};

// Validity condition for neglecting counter-rotating corrections. The spirit
// of the inequality is "lhs much below rhs"; a factor-10 margin decides the
// flag while lhs/rhs stay available for stricter readings.
BadCavityCheck check_bad_cavity_condition(const SystemParams& p);

// Cooperativity at which the coupling-optimized g_eff reaches the
// strong-coupling (normal-mode splitting) scale: (kappa/Gamma_M)^2/(16(1+2n)).
double strong_coupling_coop_threshold(double kappa, double gamma_m, double n_th);

// Variance in zero-point units (vacuum = 1) to decibels; 3 dB limit is 0.5.
inline double squeezing_db(double var_zp) { return -10.0 * std::log10(var_zp); }

}  // namespace twotone
