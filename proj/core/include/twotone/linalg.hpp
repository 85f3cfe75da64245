#pragma once

#include <Eigen/Dense>
#include <functional>

#include "twotone/errors.hpp"

namespace twotone::linalg {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxDim = 16;
inline constexpr double kHurwitzMargin = 1e-12;

struct LyapunovSolution {
  RealMatrix v;          // symmetric steady-state covariance
  double residual_norm;  // max-abs of A*V + V*A^T + D
};

// True iff every eigenvalue of A has real part < -1e-12.
bool is_hurwitz(const RealMatrix& a);

// Largest eigenvalue real part (useful for diagnostics).
double spectral_abscissa(const RealMatrix& a);

// Solves A*V + V*A^T + D = 0 for symmetric V by vectorizing into the
// (I (x) A + A (x) I) system; n <= 16 keeps the dense n^2 x n^2 solve cheap.
// Throws NotHurwitz when A is not strictly stable and SingularSystem when the
// vectorized system cannot be solved to the documented residual bound
// (1e-10 * max(1, max-abs of D)).
LyapunovSolution solve_lyapunov(const RealMatrix& a, const RealMatrix& d);

// Classical fixed-step RK4 for dV/dt = A(t)*V + V*A(t)^T + D. V is
// re-symmetrized after every step. Throws NonFinite as soon as an element
// stops being finite (parametric instability shows up this way).
RealMatrix integrate_covariance_ode(
    const std::function<RealMatrix(double)>& drift_of_t, const RealMatrix& d,
    RealMatrix v0, double t0, double t1, double dt);

// Smallest eigenvalue of a symmetric matrix (for PSD checks in tests).
double min_symmetric_eigenvalue(const RealMatrix& v);

}  // namespace twotone::linalg
