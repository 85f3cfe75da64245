#include "twotone/optimize.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "twotone/floquet.hpp"
#include "twotone/lindblad.hpp"
#include "twotone/rwa.hpp"

namespace twotone::optimize {

OptimizeResult optimize_ratio(const VarianceBackend& var_of_ratio, double lo,
                              double hi, double tol, int coarse_points) {
  if (!(lo > 0.0 && hi < 1.0 + 1e-15 && lo < hi))
    throw InvalidInput("ratio bounds must satisfy 0 < lo < hi < 1");
  if (!(tol > 0.0) || coarse_points < 3)
    throw InvalidInput("bad optimizer settings");

  OptimizeResult res;
  const int n = coarse_points;
  std::vector<double> xs(n), fs(n);
  int best = 0;
  for (int i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * i / (n - 1);
    fs[i] = var_of_ratio(xs[i]);
    if (fs[i] < fs[best]) best = i;  // ties keep the smaller ratio
  }
  res.evaluations = n;

  if (best == 0 || best == n - 1) {
    res.interior = false;
    res.ratio_opt = xs[best];
    res.var_opt = fs[best];
    return res;
  }

  // Golden-section refinement inside the bracketing neighbors.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = xs[best - 1], b = xs[best + 1];
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = var_of_ratio(x1), f2 = var_of_ratio(x2);
  res.evaluations += 2;
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = var_of_ratio(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = var_of_ratio(x2);
    }
    ++res.evaluations;
  }
  res.ratio_opt = f1 <= f2 ? x1 : x2;
  res.var_opt = std::min(f1, f2);
  return res;
}

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::kRwa: return "rwa";
    case Backend::kLindblad: return "lindblad";
    case Backend::kFloquet: return "floquet";
  }
  return "?";
}

namespace {

SystemParams point_params(Backend b, double coop, double ratio,
                          const SweepOptions& o) {
  const double gamma_m = o.gamma_over_kappa * o.kappa;
  const double omega = b == Backend::kFloquet ? o.omega_m : kInfiniteFrequency;
  SystemParams p = params_from_cooperativity(coop, ratio, o.kappa, gamma_m,
                                             o.n_th, omega);
  if (b == Backend::kFloquet && o.third_tone_tied) p.g_three = p.g_plus;
  return p;
}

floquet::FloquetOptions floquet_options(const SweepOptions& o) {
  floquet::FloquetOptions fo;
  fo.tolerance = o.floquet.tolerance;
  fo.max_periods = o.floquet.max_periods;
  fo.steps_per_period = o.floquet.steps_per_period;
  return fo;
}

}  // namespace

VarianceBackend make_variance_backend(Backend b, double coop,
                                      const SweepOptions& opts) {
  switch (b) {
    case Backend::kRwa:
      return [coop, opts](double ratio) {
        return rwa::steady_state(point_params(Backend::kRwa, coop, ratio, opts))
            .var_x1;
      };
    case Backend::kLindblad:
      return [coop, opts](double ratio) {
        return lindblad::lindblad_steady_state(
                   point_params(Backend::kLindblad, coop, ratio, opts))
            .var_x1;
      };
    case Backend::kFloquet:
      return [coop, opts](double ratio) {
        try {
          return floquet::periodic_steady_state(
                     point_params(Backend::kFloquet, coop, ratio, opts),
                     floquet_options(opts))
              .var_x1_avg;
        } catch (const NonFinite&) {
          return std::numeric_limits<double>::infinity();
        } catch (const NotConverged&) {
          return std::numeric_limits<double>::infinity();
        }
      };
  }
  throw InvalidInput("unknown backend");
}

std::vector<SweepRecord> sweep(Backend b, const SweepOptions& opts,
                               const std::vector<double>& coop_grid) {
  for (std::size_t i = 1; i < coop_grid.size(); ++i)
    if (!(coop_grid[i] > coop_grid[i - 1]))
      throw InvalidInput("cooperativity grid must be sorted ascending");

  std::vector<SweepRecord> records(coop_grid.size());

  auto run_point = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    SweepRecord& rec = records[i];
    rec.coop = coop_grid[i];
    rec.backend = backend_name(b);
    try {
      const auto backend = make_variance_backend(b, rec.coop, opts);
      const auto opt = optimize_ratio(backend, opts.ratio_lo, opts.ratio_hi,
                                      opts.tol, opts.coarse_points);
      rec.ratio_opt = opt.ratio_opt;
      rec.var_x1_opt = opt.var_opt;
      rec.interior = opt.interior;
      rec.var_x1_analytic =
          rwa::min_variance_analytic(rec.coop, opts.n_th, opts.gamma_over_kappa);

      const SystemParams p = point_params(b, rec.coop, rec.ratio_opt, opts);
      if (b == Backend::kFloquet) {
        const auto fr = floquet::periodic_steady_state(p, floquet_options(opts));
        const auto rep = rwa::report_from_covariance(fr.v_avg, p);
        rec.n_eff = rep.n_eff;
        rec.beta_occ = rep.beta_occupancy.value_or(
            std::numeric_limits<double>::quiet_NaN());
        rec.converged = fr.converged;
        const auto bc = check_bad_cavity_condition(p);
        rec.bad_cavity_ok = bc.satisfied;
        rec.validity_lhs = bc.lhs;
        rec.validity_rhs = bc.rhs;
      } else {
        const auto rep = b == Backend::kRwa ? rwa::steady_state(p)
                                            : lindblad::lindblad_steady_state(p);
        rec.n_eff = rep.n_eff;
        rec.beta_occ = rep.beta_occupancy.value_or(
            std::numeric_limits<double>::quiet_NaN());
      }
      if (!std::isfinite(rec.var_x1_opt)) rec.status = "unstable-optimum";
    } catch (const Error& e) {
      rec.status = e.code();
      rec.var_x1_opt = rec.ratio_opt = rec.n_eff = rec.beta_occ =
          std::numeric_limits<double>::quiet_NaN();
      rec.converged = false;
    }
    rec.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                  start)
            .count();
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || records.size() <= 1) {
    for (std::size_t i = 0; i < records.size(); ++i) run_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < records.size();
           i = next.fetch_add(1))
        run_point(i);
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min<std::size_t>(jobs, records.size());
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return records;
}

}  // namespace twotone::optimize
