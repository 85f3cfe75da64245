#include "twotone/lindblad.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace twotone::lindblad {

LindbladRates rates(const SystemParams& p) {
  validate(p);
  LindbladRates r{};
  r.gamma_down = p.gamma_m * (p.n_th + 1.0) + 4.0 * p.g_minus * p.g_minus / p.kappa;
  r.gamma_up = p.gamma_m * p.n_th + 4.0 * p.g_plus * p.g_plus / p.kappa;
  r.gamma_s = 4.0 * p.g_plus * p.g_minus / p.kappa;
  return r;
}

rwa::SteadyStateReport lindblad_steady_state(const SystemParams& p) {
  const auto lr = rates(p);
  const double gap = lr.gamma_down - lr.gamma_up;
  if (!(gap > 0.0))
    throw UnstableReduced("gamma_down <= gamma_up: reduced dynamics unstable");

  // Moment equations for x = (<b^dag b>, Re<bb>, Im<bb>):
  //   d<b^dag b>/dt = -(gd - gu) <b^dag b> + gu
  //   d<bb>/dt      = -(gd - gu) <bb>      - gs
  // (the squeezing-generating D_S terms enter only the anomalous moment).
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(0, 0) = -gap;
  m(1, 1) = -gap;
  m(2, 2) = -gap;
  Eigen::Vector3d b(lr.gamma_up, -lr.gamma_s, 0.0);
  const Eigen::Vector3d x = m.fullPivLu().solve(-b);

  const double n = x(0), re_m = x(1), im_m = x(2);
  Eigen::Matrix4d v = Eigen::Matrix4d::Identity() * 0.5;
  v(rwa::kX1, rwa::kX1) = 0.5 * (1.0 + 2.0 * n + 2.0 * re_m);
  v(rwa::kX2, rwa::kX2) = 0.5 * (1.0 + 2.0 * n - 2.0 * re_m);
  v(rwa::kX1, rwa::kX2) = v(rwa::kX2, rwa::kX1) = im_m;
  return rwa::report_from_covariance(v, p, /*with_cavity=*/false);
}

double lindblad_purity_prediction(double coop, double n_th) {
  if (!(coop > 0.0) || !(n_th >= 0.0))
    throw InvalidInput("lindblad_purity_prediction needs coop > 0, n_th >= 0");
  return 2.0 + (2.0 * n_th / std::sqrt(2.0 * n_th + 1.0)) / std::sqrt(coop);
}

}  // namespace twotone::lindblad
