#include "twotone/linalg.hpp"

#include <cmath>

namespace twotone::linalg {

namespace {

void require_square(const RealMatrix& a, const char* what) {
  if (a.rows() != a.cols()) throw InvalidInput(std::string(what) + " must be square");
  if (a.rows() < 1 || a.rows() > kMaxDim)
    throw InvalidInput(std::string(what) + " dimension out of range");
}

}  // namespace

double spectral_abscissa(const RealMatrix& a) {
  require_square(a, "drift matrix");
  Eigen::EigenSolver<RealMatrix> es(a, /*computeEigenvectors=*/false);
  return es.eigenvalues().real().maxCoeff();
}

bool is_hurwitz(const RealMatrix& a) {
  return spectral_abscissa(a) < -kHurwitzMargin;
}

LyapunovSolution solve_lyapunov(const RealMatrix& a, const RealMatrix& d) {
  require_square(a, "drift matrix");
  require_square(d, "diffusion matrix");
  const Eigen::Index n = a.rows();
  if (d.rows() != n) throw InvalidInput("drift/diffusion dimension mismatch");
  if (!is_hurwitz(a)) throw NotHurwitz("drift matrix is not strictly stable");

  // vec(A V + V A^T) = (I (x) A + A (x) I) vec(V), column-major stacking.
  RealMatrix k = RealMatrix::Zero(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    k.block(j * n, j * n, n, n) += a;  // I (x) A
    for (Eigen::Index i = 0; i < n; ++i) {
      k.block(j * n, i * n, n, n).diagonal().array() += a(j, i);  // A (x) I
    }
  }

  Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(d.data(), n * n);
  Eigen::FullPivLU<RealMatrix> lu(k);
  if (!lu.isInvertible()) throw SingularSystem("vectorized Lyapunov system is singular");
  Eigen::VectorXd x = lu.solve(rhs);

  RealMatrix v = Eigen::Map<RealMatrix>(x.data(), n, n);
  v = 0.5 * (v + v.transpose()).eval();

  const double dscale = std::max(1.0, d.cwiseAbs().maxCoeff());
  const double residual = (a * v + v * a.transpose() + d).cwiseAbs().maxCoeff();
  if (!std::isfinite(residual) || residual > 1e-10 * dscale)
    throw SingularSystem("Lyapunov residual " + std::to_string(residual) +
                         " exceeds tolerance");
  return {v, residual};
}

RealMatrix integrate_covariance_ode(
    const std::function<RealMatrix(double)>& drift_of_t, const RealMatrix& d,
    RealMatrix v0, double t0, double t1, double dt) {
  require_square(d, "diffusion matrix");
  if (!(dt > 0.0)) throw InvalidInput("dt must be positive");
  if (!(t1 > t0)) throw InvalidInput("t1 must exceed t0");
  if (v0.rows() != d.rows() || v0.cols() != d.cols())
    throw InvalidInput("initial covariance dimension mismatch");

  const auto steps = static_cast<long>(std::ceil((t1 - t0) / dt - 1e-12));
  const double h = (t1 - t0) / static_cast<double>(steps);

  auto rhs = [&](double t, const RealMatrix& v) -> RealMatrix {
    RealMatrix a = drift_of_t(t);
    return a * v + v * a.transpose() + d;
  };

  RealMatrix v = std::move(v0);
  double t = t0;
  for (long s = 0; s < steps; ++s) {
    const RealMatrix k1 = rhs(t, v);
    const RealMatrix k2 = rhs(t + 0.5 * h, v + 0.5 * h * k1);
    const RealMatrix k3 = rhs(t + 0.5 * h, v + 0.5 * h * k2);
    const RealMatrix k4 = rhs(t + h, v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    v = 0.5 * (v + v.transpose()).eval();
    t = t0 + (s + 1) * h;
    if (!v.allFinite())
      throw NonFinite("covariance became non-finite at t=" + std::to_string(t));
  }
  return v;
}

double min_symmetric_eigenvalue(const RealMatrix& v) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(v, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace twotone::linalg
