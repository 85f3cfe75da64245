#pragma once

#include <string>
#include <vector>

#include "twotone/model.hpp"

namespace twotone::spectra {

// Cavity output spectrum sampled on a detuning grid (omega measured from the
// cavity resonance). Values are dimensionless photon-flux spectral densities.
struct SpectrumSeries {
  std::vector<double> omega;
  std::vector<double> s;
  SystemParams params;
  std::string method;  // "analytic" | "transfer-matrix"
};

// Closed form S[omega] = 16 kappa Gamma_M [G+^2(n_th+1) + G-^2 n_th]/|N|^2
// with N = 4 g_eff^2 + (Gamma_M - 2 i omega)(kappa - 2 i omega).
SpectrumSeries output_spectrum_analytic(const SystemParams& p,
                                        const std::vector<double>& omega_grid);

// Same quantity from the frequency-domain response (-i w I - A)^-1 in the
// (d, d^dag, b, b^dag) basis with the input-output relation
// a_out = sqrt(kappa) d - d_in and normally ordered input weights.
SpectrumSeries output_spectrum_numeric(const SystemParams& p,
                                       const std::vector<double>& omega_grid);

struct IntegratedWeight {
  double area;               // integral of S over all detunings
  double beta_occ_inferred;  // area * [4g^2 + kappa(kappa+Gamma_M)]/(8 pi kappa g^2)
};

// Integrates the spectrum (composite Simpson, symmetric core window of
// +-50 kappa, doubling tail windows until the tail adds < 1e-6 relative) and
// converts the area into a Bogoliubov occupancy.
IntegratedWeight integrated_weight(const SystemParams& p);

struct SqueezingBounds {
  double upper;  // 2 e^{-2r} (1 + 2 <beta^dag beta>), rigorous
  double lower;  // e^{-2r} (1 + 4 <beta^dag beta>), valid at large coop/r
  double zeta;   // 1 + (2(1+n_th)/(1+2n_th) - 1) e^{-2r} >= 1
  double beta_anomalous_estimate;  // large-r estimate of <beta beta>
};

// Detection-side bounds on 2<X1^2> from a measured beta occupancy.
SqueezingBounds squeezing_bounds(double r, double beta_occ, double n_th);

}  // namespace twotone::spectra
