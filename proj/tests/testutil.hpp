#pragma once

#include <Eigen/Dense>
#include <random>

#include "twotone/model.hpp"

namespace twotone::testutil {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed2024);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline double log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

// Random strictly stable matrix: shift a random matrix left of the imaginary
// axis by its spectral abscissa plus a margin.
inline Eigen::MatrixXd random_hurwitz(int n, double margin = 0.1) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = uniform(-1.0, 1.0);
  const double alpha = Eigen::EigenSolver<Eigen::MatrixXd>(a, false)
                           .eigenvalues()
                           .real()
                           .maxCoeff();
  a.diagonal().array() -= alpha + margin;
  return a;
}

inline Eigen::MatrixXd random_psd(int n) {
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = uniform(-1.0, 1.0);
  return b * b.transpose();
}

// Random stable RWA point expressed through (coop, ratio, n_th, gamma/kappa).
inline SystemParams random_stable_params(double coop_lo = 1e1,
                                         double coop_hi = 1e5,
                                         double ratio_lo = 0.0,
                                         double ratio_hi = 0.995) {
  const double coop = log_uniform(coop_lo, coop_hi);
  const double ratio = uniform(ratio_lo, ratio_hi);
  const double gamma = log_uniform(1e-6, 1e-3);
  const double n_th = uniform(0.0, 50.0);
  return params_from_cooperativity(coop, ratio, 1.0, gamma, n_th);
}

}  // namespace twotone::testutil
