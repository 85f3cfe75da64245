#pragma once

#include "twotone/model.hpp"
#include "twotone/rwa.hpp"

namespace twotone::lindblad {

// Rates of the cavity-eliminated master equation acting on the mechanics.
// Written as Gamma_opt cosh^2 r = 4 G-^2/kappa etc., which stays finite on
// the G+ = G- boundary where r itself diverges.
struct LindbladRates {
  double gamma_down;  // Gamma_M (n_th+1) + 4 G-^2 / kappa
  double gamma_up;    // Gamma_M n_th     + 4 G+^2 / kappa
  double gamma_s;     //                    4 G+ G- / kappa
};

LindbladRates rates(const SystemParams& p);

// Steady state of the closed moment system (<b^dag b>, Re<bb>, Im<bb>)
// implied by the reduced master equation; cavity entries are absent.
// Throws UnstableReduced when gamma_down <= gamma_up.
rwa::SteadyStateReport lindblad_steady_state(const SystemParams& p);

// Closed-form purity of the reduced description at the optimized coupling:
// (1+2 n_eff)^2 ~ 2 + (2 n_th/sqrt(2 n_th+1))/sqrt(coop).
double lindblad_purity_prediction(double coop, double n_th);

}  // namespace twotone::lindblad
