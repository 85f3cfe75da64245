// Acceptance suite: one line per criterion, [PASS]/[FAIL] plus measured
// numbers. Exit code equals the number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "twotone/floquet.hpp"
#include "twotone/lindblad.hpp"
#include "twotone/linalg.hpp"
#include "twotone/optimize.hpp"
#include "twotone/rwa.hpp"
#include "twotone/spectra.hpp"

using namespace twotone;

namespace {

struct CheckFailure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure{what};
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

SystemParams coop_point(double coop, double ratio, double n_th,
                        double gamma_over_kappa = 1e-4,
                        double omega = kInfiniteFrequency) {
  return params_from_cooperativity(coop, ratio, 1.0, gamma_over_kappa, n_th,
                                   omega);
}

optimize::VarianceBackend rwa_backend(double coop, double n_th,
                                      double gamma_over_kappa = 1e-4) {
  return [=](double q) {
    return rwa::steady_state(coop_point(coop, q, n_th, gamma_over_kappa)).var_x1;
  };
}

optimize::VarianceBackend lindblad_backend(double coop, double n_th,
                                           double gamma_over_kappa = 1e-4) {
  return [=](double q) {
    return lindblad::lindblad_steady_state(
               coop_point(coop, q, n_th, gamma_over_kappa))
        .var_x1;
  };
}

std::mt19937 acc_rng(0xacce97);
double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(acc_rng);
}
double log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

// ------------------------------------------------------------- criteria --

void criterion_1_optimal_coupling(std::ostringstream& note) {
  const auto res =
      optimize::optimize_ratio(rwa_backend(1e4, 10.0), 1e-3, 1.0 - 1e-7, 1e-6);
  note << "ratio_opt=" << num(res.ratio_opt) << " (target 0.954174 +- 0.005), "
       << "var_opt=" << num(res.var_opt) << " (closed form 0.047926 +- 10%)";
  require(res.interior, "optimum must be interior");
  require(std::abs(res.ratio_opt - 0.954174243050442) <= 0.005,
          "optimized ratio off the closed form");
  require(std::abs(res.var_opt / 0.0479257569495584 - 1.0) <= 0.10,
          "optimized variance off the closed form");
}

void criterion_2_beyond_3db(std::ostringstream& note) {
  const auto res =
      optimize::optimize_ratio(rwa_backend(1e4, 10.0), 1e-3, 1.0 - 1e-7, 1e-6);
  note << "var_opt=" << num(res.var_opt) << " < 0.05 (3 dB limit / 10)";
  require(res.var_opt < 0.05, "variance not a factor 10 below the 3 dB limit");
}

void criterion_3_saturation(std::ostringstream& note) {
  const double floor = 1e-4;  // (Gamma_M/kappa)(1+2 n_th) at n_th = 0
  const auto full8 =
      optimize::optimize_ratio(rwa_backend(1e8, 0.0), 1e-3, 1.0 - 1e-7, 1e-7);
  const auto lind8 = optimize::optimize_ratio(lindblad_backend(1e8, 0.0), 1e-3,
                                              1.0 - 1e-7, 1e-7);
  const auto full10 = optimize::optimize_ratio(rwa_backend(1e10, 0.0), 1e-3,
                                               1.0 - 1e-8, 1e-8);
  const auto lind10 = optimize::optimize_ratio(lindblad_backend(1e10, 0.0),
                                               1e-3, 1.0 - 1e-8, 1e-8);
  note << "coop=1e8: full=" << num(full8.var_opt)
       << " (floor ratio " << num(full8.var_opt / floor)
       << "), lindblad=" << num(lind8.var_opt) << "; coop=1e10: full="
       << num(full10.var_opt) << ", lindblad=" << num(lind10.var_opt);
  // At coop=1e8 the closed-form minimum is exactly twice the floor (the
  // falling term equals the floor there); the saturation gap is what the
  // reduced description misses.
  require(std::abs((full8.var_opt - lind8.var_opt) / floor - 1.0) <= 0.3,
          "full-minus-reduced gap must equal the floor within 30%");
  require(std::abs(lind8.var_opt / std::sqrt(1e-8) - 1.0) <= 0.05,
          "reduced variance must keep falling as 1/sqrt(coop) at 1e8");
  require(std::abs(full10.var_opt / floor - 1.0) <= 0.3,
          "full variance must sit on the floor (30%) by coop=1e10");
  require(std::abs(lind10.var_opt / std::sqrt(1e-10) - 1.0) <= 0.05,
          "reduced variance must keep falling as 1/sqrt(coop) at 1e10");
}

void criterion_4_purity_plateau(std::ostringstream& note) {
  const double gamma = 1e-8;
  const double coop = 4.0 * 0.1 * 0.1 / gamma;  // g_minus = 0.1 kappa
  const auto opt = rwa::optimal_ratio_analytic(coop, 0.0);
  const auto p = coop_point(coop, opt.ratio, 0.0, gamma);
  require(derive(p).g_eff < 1.0, "point must stay below the hybridization scale");
  const auto rep = rwa::steady_state(p);
  note << "n_eff=" << num(rep.n_eff) << " (plateau 0.2071, window [0.19, 0.22])";
  require(rep.n_eff >= 0.19 && rep.n_eff <= 0.22, "plateau occupancy off");
}

void criterion_5_purity_growth(std::ostringstream& note) {
  const double gamma = 1e-4;
  std::vector<double> ratios;
  for (double coop : {1e8, 1e10, 1e12}) {
    // The minimum sits at 1 - s and its basin narrows with s, so bracket it
    // explicitly; a uniform scan of (0,1) cannot resolve it at coop = 1e12.
    const double s = std::sqrt(1.0 / coop);
    const double lo = 1.0 - std::min(0.5, 100.0 * s);
    const double hi = 1.0 - 1e-3 * s;
    const auto res =
        optimize::optimize_ratio(rwa_backend(coop, 0.0), lo, hi, 1e-3 * s, 400);
    require(res.interior, "optimum must be interior to the bracket");
    const auto rep = rwa::steady_state(coop_point(coop, res.ratio_opt, 0.0));
    ratios.push_back(rep.n_eff * rep.n_eff / (0.5 * gamma * std::sqrt(coop)));
  }
  note << "n_eff^2/scale at coop {1e8,1e10,1e12} = {" << num(ratios[0]) << ", "
       << num(ratios[1]) << ", " << num(ratios[2])
       << "}; the scaling law is reached within 20% at 1e12";
  require(ratios[0] < ratios[1] && ratios[1] < ratios[2],
          "purity ratio must rise toward the scaling law");
  require(std::abs(ratios[2] - 1.0) <= 0.2,
          "scaling-law ratio outside [0.8, 1.2] at coop=1e12");
}

void criterion_6_spectrum(std::ostringstream& note) {
  std::vector<double> grid(41);
  for (int i = 0; i < 41; ++i) grid[i] = -3.0 + 6.0 * i / 40.0;
  double worst = 0.0;
  for (int it = 0; it < 200; ++it) {
    const auto p = coop_point(log_uniform(10.0, 1e6), uniform(0.0, 0.995),
                              uniform(0.0, 50.0), log_uniform(1e-6, 1e-3));
    const auto a = spectra::output_spectrum_analytic(p, grid);
    const auto n = spectra::output_spectrum_numeric(p, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double scale = std::max({a.s[i], n.s[i], 1e-30});
      worst = std::max(worst, std::abs(a.s[i] - n.s[i]) / scale);
    }
  }
  require(worst <= 1e-8, "analytic and transfer-matrix spectra disagree");

  const auto opt_weak = rwa::optimal_ratio_analytic(1e4, 10.0);
  const auto p_weak = coop_point(1e4, opt_weak.ratio, 10.0);
  const auto w = spectra::integrated_weight(p_weak);
  const double nb = rwa::steady_state(p_weak).beta_occupancy.value();
  require(std::abs(w.beta_occ_inferred / nb - 1.0) <= 0.01,
          "integrated weight must recover the Bogoliubov occupancy to 1%");

  // Same drive ratio, cooperativity raised to 1e6: hybridized doublet.
  const auto p_strong = coop_point(1e6, opt_weak.ratio, 10.0);
  const double geff = derive(p_strong).g_eff;
  std::vector<double> wide(4001);
  for (int i = 0; i < 4001; ++i)
    wide[i] = -2.5 * geff + 5.0 * geff * i / 4000.0;
  const auto s = spectra::output_spectrum_analytic(p_strong, wide).s;
  int maxima = 0, first = -1, second = -1;
  for (int i = 1; i + 1 < 4001; ++i)
    if (s[i] > s[i - 1] && s[i] > s[i + 1]) {
      ++maxima;
      (first < 0 ? first : second) = i;
    }
  note << "max spectra mismatch " << num(worst) << "; weight identity gap "
       << num(std::abs(w.beta_occ_inferred / nb - 1.0)) << "; doublet count "
       << maxima;
  require(maxima == 2, "strong-coupling spectrum must show two peaks");
  const double split = wide[second] - wide[first];
  note << ", splitting/2g_eff = " << num(split / (2.0 * geff));
  require(std::abs(split / (2.0 * geff) - 1.0) <= 0.10,
          "doublet splitting must match twice the Bogoliubov coupling");
}

void criterion_7_bounds(std::ostringstream& note) {
  // Optimized working points inside the validity regime of the detection
  // bounds (large coop relative to 1+2 n_th, moderate coupling).
  int tight_checked = 0;
  double worst_tight = 0.0, max_upper_ratio = 0.0;
  for (int it = 0; it < 500; ++it) {
    const double n_th = uniform(0.0, 3.0);
    const double coop = log_uniform(100.0 * (1.0 + 2.0 * n_th), 1e6);
    const double gamma = log_uniform(1e-6, 1e-4);
    const auto opt = rwa::optimal_ratio_analytic(coop, n_th);
    const auto p = coop_point(coop, opt.ratio, n_th, gamma);
    const auto rep = rwa::steady_state(p);
    const auto d = derive(p);
    const auto b =
        spectra::squeezing_bounds(d.r, rep.beta_occupancy.value(), n_th);
    require(b.lower <= rep.var_x1 && rep.var_x1 <= b.upper,
            "bounds must sandwich the exact variance");
    max_upper_ratio = std::max(max_upper_ratio, b.upper / rep.var_x1);
    if (coop >= 1e4) {
      ++tight_checked;
      const double gap = std::abs(b.lower / rep.var_x1 - 1.0);
      worst_tight = std::max(worst_tight, gap * std::sqrt(coop));
      require(gap < 5.0 / std::sqrt(coop),
              "tight bound must close as 5/sqrt(coop)");
    }
  }
  // The upper bound is rigorous for any stable drive, optimal or not.
  for (int it = 0; it < 200; ++it) {
    const double n_th = uniform(0.0, 50.0);
    const auto p = coop_point(log_uniform(100.0, 1e6), uniform(0.01, 0.99),
                              n_th, log_uniform(1e-6, 1e-3));
    const auto rep = rwa::steady_state(p);
    const auto b =
        spectra::squeezing_bounds(derive(p).r, rep.beta_occupancy.value(), n_th);
    require(rep.var_x1 <= b.upper, "rigorous upper bound violated");
  }
  note << "sandwich held on 500 optimized + 200 arbitrary-ratio points; "
       << "tight-side gap*sqrt(coop) <= " << num(worst_tight) << " (limit 5) on "
       << tight_checked << " points; upper/exact reaches " << num(max_upper_ratio)
       << " (the factor-3/2 detection overhead)";
}

void criterion_8_floquet_rwa_limit(std::ostringstream& note) {
  struct Set {
    double coop, ratio, n_th;
  } sets[] = {{1e4, 0.954174, 10.0}, {1e2, 0.9, 0.0}, {1e5, 0.98, 50.0}};
  double worst = 0.0;
  for (const auto& s : sets) {
    const auto p = coop_point(s.coop, s.ratio, s.n_th, 1e-4, 1e4);
    const auto fr = floquet::periodic_steady_state(p);
    const double lyap = rwa::steady_state(p).var_x1;
    worst = std::max(worst, std::abs(fr.var_x1_avg / lyap - 1.0));
  }
  note << "max |avg/lyapunov - 1| = " << num(worst) << " over 3 sets (limit 1e-3)";
  require(worst < 1e-3, "period average must match the Lyapunov result");
}

void criterion_9_bad_cavity(std::ostringstream& note) {
  // Ratio scan at the deeply bad-cavity point.
  std::vector<double> ratios;
  for (int i = 0; i < 25; ++i)
    ratios.push_back(1.0 - 0.1 * std::pow(1e-3, i / 24.0));
  floquet::FloquetOptions fopts;
  fopts.tolerance = 1e-9;
  std::vector<double> var(ratios.size());
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    const auto p = coop_point(5e6, ratios[i], 100.0, 1e-4, 50.0);
    var[i] = floquet::periodic_steady_state(p, fopts).var_x1_avg;
  }
  std::size_t imin = 0;
  for (std::size_t i = 1; i < var.size(); ++i)
    if (var[i] < var[imin]) imin = i;
  note << "scan min " << num(var[imin]) << " at ratio " << num(ratios[imin])
       << ", edge growth x" << num(var.back() / var[imin]);
  require(imin > 0 && imin + 1 < var.size(), "minimum must be interior");
  require(var[imin] < 0.5, "minimum must beat the 3 dB limit");
  require(var.back() > 2.0 * var[imin],
          "variance must grow steeply toward equal drives");
  require(var.front() > 2.0 * var[imin], "variance must grow at weak blue drive");

  // Optimized-vs-cooperativity curve turns back up once the validity
  // condition fails.
  optimize::SweepOptions opts;
  opts.n_th = 10.0;
  opts.omega_m = 50.0;
  opts.coarse_points = 48;
  opts.tol = 1e-5;
  opts.jobs = 5;
  const auto recs = floquet::optimized_squeezing_vs_cooperativity(
      opts, {1e3, 1e4, 1e5, 1e6});
  std::size_t best = 0;
  for (std::size_t i = 1; i < recs.size(); ++i)
    if (recs[i].var_x1_opt < recs[best].var_x1_opt) best = i;
  note << "; optimized curve {";
  for (const auto& r : recs) note << num(r.var_x1_opt) << " ";
  note << "} has interior minimum at coop=" << num(recs[best].coop);
  require(best > 0 && best + 1 < recs.size(),
          "optimized squeezing must be non-monotonic in cooperativity");
  for (const auto& r : recs) require(r.status == "ok", "sweep point failed");
}

void criterion_10_third_tone(std::ostringstream& note) {
  optimize::SweepOptions base;
  base.n_th = 50.0;
  base.omega_m = 50.0;
  base.coarse_points = 48;
  base.tol = 1e-5;
  base.jobs = 2;
  auto tied = base;
  tied.third_tone_tied = true;

  for (double coop : {1e3, 1e4}) {
    const auto off = optimize::sweep(optimize::Backend::kFloquet, base, {coop});
    const auto on = optimize::sweep(optimize::Backend::kFloquet, tied, {coop});
    const double voff = off[0].var_x1_opt, von = on[0].var_x1_opt;
    const double change = std::abs(von - voff) / std::max(von, voff);
    note << "coop=" << num(coop) << ": min " << num(voff) << " -> " << num(von)
         << " (symmetric change " << num(100.0 * change) << "%); ";
    require(change < 0.25, "third tone must shift the minimum by < 25%");
    if (coop == 1e4)
      require(von < 0.5, "minimum must stay beyond 3 dB with the tone on");
  }
}

void criterion_11_property_suite(std::ostringstream& note) {
  // Lyapunov residual and state validity.
  for (int it = 0; it < 100; ++it) {
    const auto p = coop_point(log_uniform(10.0, 1e6), uniform(0.0, 0.99),
                              uniform(0.0, 50.0), log_uniform(1e-6, 1e-3));
    const auto dd = rwa::build_rwa_drift_diffusion(p);
    const auto sol = linalg::solve_lyapunov(dd.drift, dd.diffusion);
    require(sol.residual_norm <
                1e-10 * std::max(1.0, dd.diffusion.cwiseAbs().maxCoeff()),
            "Lyapunov residual above bound");
    require(linalg::min_symmetric_eigenvalue(sol.v) > 0.0, "state not PSD");
    const auto rep = rwa::report_from_covariance(sol.v, p);
    require(rep.var_x1 * rep.var_x2 - 4.0 * rep.cross_x1x2 * rep.cross_x1x2 >=
                1.0 - 1e-12,
            "uncertainty product violated");
  }
  // QND boundary.
  for (double n_th : {0.0, 10.0, 100.0}) {
    const auto rep = rwa::steady_state(coop_point(1e4, 1.0, n_th));
    require(std::abs(rep.var_x1 / (1.0 + 2.0 * n_th) - 1.0) < 1e-10,
            "equal drives must leave X1 thermal");
  }
  // Cavity-eliminated occupancies.
  for (int it = 0; it < 100; ++it) {
    const auto p = coop_point(log_uniform(10.0, 1e6), uniform(0.0, 0.99),
                              uniform(0.0, 50.0));
    const auto s = rwa::semiclassical_self_energy(p, 0.0);
    const double gdif = p.g_minus - p.g_plus, gsum = p.g_minus + p.g_plus;
    require(std::abs(1.0 + 2.0 * s.n_eff_x1 - gdif / gsum) < 1e-12,
            "squeezed-quadrature occupancy formula");
    require(std::abs(1.0 + 2.0 * s.n_eff_x2 - gsum / gdif) <
                1e-12 * (gsum / gdif),
            "anti-squeezed-quadrature occupancy formula");
    require(std::abs(-2.0 * s.sigma.imag() - derive(p).gamma_opt) < 1e-12,
            "optical damping from the self-energy");
  }
  // Impedance matching at the coop=1e4 optimum.
  const auto opt = rwa::optimal_ratio_analytic(1e4, 10.0);
  const auto m = rwa::impedance_match_check(coop_point(1e4, opt.ratio, 10.0));
  note << "impedance ratio " << num(m.ratio) << " (asymptotic form "
       << num(m.ratio_asymptotic) << "), both within 10% of 1";
  require(std::abs(m.ratio - 1.0) <= 0.1, "impedance ratio off unity");
  require(std::abs(m.ratio_asymptotic - 1.0) <= 0.1,
          "asymptotic impedance ratio off unity");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(std::ostringstream&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "optimal coupling ratio and minimum variance", 1.0,
       criterion_1_optimal_coupling},
      {2, "squeezing a factor 10 beyond the 3 dB limit", 1.0,
       criterion_2_beyond_3db},
      {3, "variance saturation vs the reduced description", 10.0,
       criterion_3_saturation},
      {4, "purity plateau at moderate coupling", 1.0, criterion_4_purity_plateau},
      {5, "purity growth law at strong coupling", 10.0, criterion_5_purity_growth},
      {6, "output spectrum identities and doublet", 30.0, criterion_6_spectrum},
      {7, "detection bounds sandwich and tightness", 30.0, criterion_7_bounds},
      {8, "periodic steady state in the rotating-wave limit", 60.0,
       criterion_8_floquet_rwa_limit},
      {9, "bad-cavity ratio scan and non-monotonic optimum", 600.0,
       criterion_9_bad_cavity},
      {10, "third-tone stabilization leaves the optimum intact", 600.0,
       criterion_10_third_tone},
      {11, "solver, state and identity property suite", 30.0,
       criterion_11_property_suite},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream note;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    try {
      c.run(note);
    } catch (const CheckFailure& f) {
      ok = false;
      why = f.what;
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && secs > c.limit_s) {
      ok = false;
      why = "runtime " + num(secs) + " s exceeds " + num(c.limit_s) + " s";
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
              << c.name << " (" << num(secs) << " s)";
    if (!note.str().empty()) std::cout << " -- " << note.str();
    if (!ok) std::cout << " -- " << why;
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
  }
  return failures;
}
