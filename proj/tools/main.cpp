#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "io_util.hpp"
#include "twotone/floquet.hpp"
#include "twotone/lindblad.hpp"
#include "twotone/optimize.hpp"
#include "twotone/rwa.hpp"
#include "twotone/spectra.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace twotone;

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct CommonOpts {
  double kappa = 1.0;
  double gamma_ratio = 1e-4;  // Gamma_M / kappa
  double n_th = 0.0;
  double kappa_over_omega = 0.0;  // 0 selects the rotating-wave description
  std::string out_dir;
  std::string config_path;
  int jobs = 1;

  double omega() const {
    return kappa_over_omega > 0.0 ? kappa / kappa_over_omega
                                  : kInfiniteFrequency;
  }
  double gamma_m() const { return gamma_ratio * kappa; }

  SystemParams point(double coop, double ratio, double g_three = 0.0) const {
    auto p = params_from_cooperativity(coop, ratio, kappa, gamma_m(), n_th,
                                       omega(), g_three);
    return p;
  }
};

void add_common(CLI::App* sub, CommonOpts& c) {
  sub->add_option("--kappa", c.kappa, "Cavity decay rate (rate unit)")
      ->capture_default_str();
  sub->add_option("--gamma-ratio", c.gamma_ratio, "Gamma_M / kappa")
      ->capture_default_str();
  sub->add_option("--nth", c.n_th, "Thermal occupancy of the mechanical bath")
      ->capture_default_str();
  sub->add_option("--kappa-over-omega", c.kappa_over_omega,
                  "Sideband parameter kappa/Omega; 0 = rotating-wave model")
      ->capture_default_str();
  sub->add_option("--out", c.out_dir, "Output directory (default: $TWOTONE_OUTDIR or .)");
  sub->add_option("--jobs", c.jobs, "Worker threads for sweeps")
      ->capture_default_str();
  sub->add_option("--config", c.config_path,
                  "Flat key=value file; command-line flags win");
}

// Expands `--config file` into trailing --key=value arguments for every key
// the command line does not already carry, so explicit flags always win and
// unknown keys are rejected by the regular option parser.
std::vector<std::string> with_config_defaults(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string cfg;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) cfg = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) cfg = args[i].substr(9);
  }
  if (cfg.empty()) return args;

  std::ifstream in(cfg);
  if (!in) throw InvalidInput("cannot read config file " + cfg);
  auto trim = [](const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("config line is not key=value: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw InvalidInput("config line has empty key: " + line);
    if (key == "config") continue;
    if (!given(key)) args.push_back("--" + key + "=" + val);
  }
  return args;
}

fs::path resolve_out_dir(const CommonOpts& c) {
  std::string dir = c.out_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("TWOTONE_OUTDIR")) dir = env;
    if (dir.empty()) dir = ".";
  }
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

json params_json(const SystemParams& p) {
  json j{{"kappa", p.kappa},     {"gamma_m", p.gamma_m}, {"n_th", p.n_th},
         {"g_plus", p.g_plus},   {"g_minus", p.g_minus}, {"g_three", p.g_three}};
  j["omega_m"] = p.rwa() ? json(nullptr) : json(p.omega_m);
  return j;
}

json derived_json(const SystemParams& p) {
  if (!p.stable_ratio()) return nullptr;
  const auto d = derive(p);
  return json{{"r", d.r},
              {"g_eff", d.g_eff},
              {"coop", d.coop},
              {"gamma_opt", d.gamma_opt},
              {"exp_minus_2r", d.exp_minus_2r}};
}

json report_json(const rwa::SteadyStateReport& r) {
  json j{{"var_x1", r.var_x1},       {"var_x2", r.var_x2},
         {"cross_x1x2", r.cross_x1x2}, {"n_eff", r.n_eff},
         {"squeezing_db", r.squeezing_db}};
  j["beta_occupancy"] =
      r.beta_occupancy ? json(*r.beta_occupancy) : json(nullptr);
  j["beta_anomalous"] =
      r.beta_anomalous ? json(*r.beta_anomalous) : json(nullptr);
  j["cavity_occupancy"] =
      r.cavity_occupancy ? json(*r.cavity_occupancy) : json(nullptr);
  return j;
}

json validity_json(const SystemParams& p) {
  if (p.rwa()) return nullptr;
  const auto c = check_bad_cavity_condition(p);
  return json{{"lhs", c.lhs},
              {"rhs", c.rhs},
              {"margin", c.margin},
              {"satisfied", c.satisfied}};
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open " + path.string());
  out << j.dump(2) << "\n";
}

template <typename F>
void parallel_for(std::size_t n, int jobs, F&& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
      body(i);
  };
  std::vector<std::thread> pool;
  const std::size_t nthreads = std::min<std::size_t>(jobs, n);
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

json config_echo(const CommonOpts& c, json extra) {
  extra["kappa"] = c.kappa;
  extra["gamma_ratio"] = c.gamma_ratio;
  extra["nth"] = c.n_th;
  extra["kappa_over_omega"] = c.kappa_over_omega;
  extra["jobs"] = c.jobs;
  return extra;
}

// ---------------------------------------------------------------- steady --

int run_steady(const CommonOpts& c, double coop, double ratio) {
  const auto t0 = std::chrono::steady_clock::now();
  SystemParams p = c.point(coop, ratio);
  p.omega_m = kInfiniteFrequency;  // exact steady state lives in the RWA
  const auto rep = rwa::steady_state(p);

  json j;
  j["config"] = config_echo(c, {{"coop", coop}, {"ratio", ratio}});
  j["params"] = params_json(p);
  j["derived"] = derived_json(p);
  j["report"] = report_json(rep);
  if (c.kappa_over_omega > 0.0) {
    SystemParams pf = c.point(coop, ratio);
    j["validity"] = validity_json(pf);
    const auto fr = floquet::periodic_steady_state(pf);
    j["floquet"] = {{"var_x1_avg", fr.var_x1_avg},
                    {"var_x1_min", fr.var_x1_min},
                    {"var_x1_max", fr.var_x1_max},
                    {"periods", fr.periods},
                    {"converged", fr.converged}};
  } else {
    j["validity"] = nullptr;
  }
  j["timing_ms"] = ms_since(t0);

  const fs::path out = resolve_out_dir(c) / "steady.json";
  write_json(out, j);
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ----------------------------------------------------------- sweep-ratio --

int run_sweep_ratio(const CommonOpts& c, double coop, const std::string& grid,
                    const std::string& backend) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ratios = cli::parse_grid(grid).sample();
  const bool reduced = backend == "lindblad";
  if (!reduced && backend != "rwa")
    throw InvalidInput("sweep-ratio backend must be rwa or lindblad");

  std::vector<std::array<double, 5>> rows(ratios.size());
  std::vector<std::string> status(ratios.size(), "ok");
  parallel_for(ratios.size(), c.jobs, [&](std::size_t i) {
    const double q = ratios[i];
    try {
      const SystemParams p = c.point(coop, q);
      const auto rep =
          reduced ? lindblad::lindblad_steady_state(p) : rwa::steady_state(p);
      rows[i] = {q, rep.var_x1, rep.var_x2, rep.n_eff,
                 rep.beta_occupancy.value_or(kNan)};
    } catch (const Error& e) {
      rows[i] = {q, kNan, kNan, kNan, kNan};
      status[i] = e.code();
    }
  });

  const fs::path dir = resolve_out_dir(c);
  cli::CsvWriter csv(dir / "sweep_ratio.csv", "ratio,var_x1,var_x2,n_eff,beta_occ");
  for (const auto& r : rows) csv.row({r.begin(), r.end()});

  json j;
  j["config"] = config_echo(
      c, {{"coop", coop}, {"ratio_grid", grid}, {"backend", backend}});
  j["points"] = ratios.size();
  json bad = json::array();
  for (std::size_t i = 0; i < status.size(); ++i)
    if (status[i] != "ok") bad.push_back({{"ratio", ratios[i]}, {"error", status[i]}});
  j["failures"] = bad;
  j["timing_ms"] = ms_since(t0);
  write_json(dir / "sweep_ratio_summary.json", j);
  return 0;
}

// -------------------------------------------------------------- optimize --

optimize::SweepOptions sweep_options(const CommonOpts& c, double opt_tol,
                                     int coarse_points,
                                     const optimize::FloquetSweepKnobs& knobs,
                                     bool third_tone) {
  optimize::SweepOptions o;
  o.kappa = c.kappa;
  o.gamma_over_kappa = c.gamma_ratio;
  o.n_th = c.n_th;
  o.omega_m = c.omega();
  o.third_tone_tied = third_tone;
  o.tol = opt_tol;
  o.coarse_points = coarse_points;
  o.jobs = c.jobs;
  o.floquet = knobs;
  return o;
}

int run_optimize(const CommonOpts& c, const std::string& grid,
                 const std::string& backend, double opt_tol, int coarse_points,
                 const optimize::FloquetSweepKnobs& knobs) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto coops = cli::parse_grid(grid).sample();

  optimize::Backend b = optimize::Backend::kRwa;
  if (backend == "lindblad") b = optimize::Backend::kLindblad;
  else if (backend == "floquet") b = optimize::Backend::kFloquet;
  else if (backend != "rwa") throw InvalidInput("unknown backend " + backend);
  if (b == optimize::Backend::kFloquet && !(c.kappa_over_omega > 0.0))
    throw InvalidInput("floquet backend needs --kappa-over-omega > 0");

  auto opts = sweep_options(c, opt_tol, coarse_points, knobs, false);
  const auto recs = optimize::sweep(b, opts, coops);
  auto lopts = opts;
  lopts.omega_m = kInfiniteFrequency;
  const auto lrecs = optimize::sweep(optimize::Backend::kLindblad, lopts, coops);

  const fs::path dir = resolve_out_dir(c);
  cli::CsvWriter csv(dir / "optimize.csv",
                     "coop,ratio_opt,var_x1_opt,n_eff,beta_occ,ratio_analytic,"
                     "var_x1_analytic,var_x1_lindblad,n_eff_lindblad");
  json failures = json::array();
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    const auto ana = rwa::optimal_ratio_analytic(r.coop, c.n_th);
    csv.row({r.coop, r.ratio_opt, r.var_x1_opt, r.n_eff, r.beta_occ, ana.ratio,
             r.var_x1_analytic, lrecs[i].var_x1_opt, lrecs[i].n_eff});
    if (r.status != "ok")
      failures.push_back({{"coop", r.coop}, {"error", r.status}});
  }

  json j;
  j["config"] = config_echo(c, {{"coop_grid", grid},
                                {"backend", backend},
                                {"opt_tol", opt_tol},
                                {"coarse_points", coarse_points}});
  j["failures"] = failures;
  j["timing_ms"] = ms_since(t0);
  write_json(dir / "optimize_summary.json", j);
  return 0;
}

// -------------------------------------------------------------- spectrum --

int run_spectrum(const CommonOpts& c, double coop, double ratio,
                 const std::string& grid) {
  const auto t0 = std::chrono::steady_clock::now();
  SystemParams p = c.point(coop, ratio);
  p.omega_m = kInfiniteFrequency;
  const auto omegas = cli::parse_grid(grid).sample();

  const auto analytic = spectra::output_spectrum_analytic(p, omegas);
  const auto numeric = spectra::output_spectrum_numeric(p, omegas);

  const fs::path dir = resolve_out_dir(c);
  cli::CsvWriter csv(dir / "spectrum.csv", "omega,s_analytic,s_numeric");
  for (std::size_t i = 0; i < omegas.size(); ++i)
    csv.row({omegas[i], analytic.s[i], numeric.s[i]});

  const auto weight = spectra::integrated_weight(p);
  const auto rep = rwa::steady_state(p);
  json j;
  j["config"] = config_echo(
      c, {{"coop", coop}, {"ratio", ratio}, {"omega_grid", grid}});
  j["params"] = params_json(p);
  j["derived"] = derived_json(p);
  j["integrated_weight"] = {
      {"area", weight.area},
      {"beta_occ_inferred", weight.beta_occ_inferred},
      {"beta_occ_steady_state", rep.beta_occupancy.value_or(kNan)}};
  j["timing_ms"] = ms_since(t0);
  write_json(dir / "spectrum_summary.json", j);
  return 0;
}

// ---------------------------------------------------------- floquet-sweep --

int run_floquet_sweep(const CommonOpts& c, const std::string& mode, double coop,
                      const std::string& ratio_grid, const std::string& coop_grid,
                      double opt_tol, int coarse_points,
                      const optimize::FloquetSweepKnobs& knobs, bool third_tone) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!(c.kappa_over_omega > 0.0))
    throw InvalidInput("floquet-sweep needs --kappa-over-omega > 0");
  const fs::path dir = resolve_out_dir(c);

  floquet::FloquetOptions fopts;
  fopts.tolerance = knobs.tolerance;
  fopts.max_periods = knobs.max_periods;
  fopts.steps_per_period = knobs.steps_per_period;

  json j;
  json failures = json::array();

  if (mode == "ratio") {
    const auto ratios = cli::parse_grid(ratio_grid).sample();
    struct Row {
      double var_avg = kNan, var_min = kNan, var_max = kNan, var_rwa = kNan;
      double periods = 0.0, converged = 0.0;
      std::string status = "ok";
    };
    std::vector<Row> rows(ratios.size());
    parallel_for(ratios.size(), c.jobs, [&](std::size_t i) {
      try {
        SystemParams p = c.point(coop, ratios[i]);
        if (third_tone) p.g_three = p.g_plus;
        const auto fr = floquet::periodic_steady_state(p, fopts);
        SystemParams prwa = p;
        prwa.omega_m = kInfiniteFrequency;
        rows[i] = {fr.var_x1_avg,
                   fr.var_x1_min,
                   fr.var_x1_max,
                   rwa::steady_state(prwa).var_x1,
                   static_cast<double>(fr.periods),
                   fr.converged ? 1.0 : 0.0,
                   "ok"};
      } catch (const Error& e) {
        rows[i].status = e.code();
      }
    });
    cli::CsvWriter csv(dir / "floquet_ratio.csv",
                       "ratio,var_avg,var_min,var_max,var_rwa,periods,converged");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      csv.row({ratios[i], r.var_avg, r.var_min, r.var_max, r.var_rwa, r.periods,
               r.converged});
      if (r.status != "ok")
        failures.push_back({{"ratio", ratios[i]}, {"error", r.status}});
    }
    j["config"] = config_echo(c, {{"mode", mode},
                                  {"coop", coop},
                                  {"ratio_grid", ratio_grid},
                                  {"third_tone", third_tone}});
  } else if (mode == "coop") {
    const auto coops = cli::parse_grid(coop_grid).sample();
    const auto opts =
        sweep_options(c, opt_tol, coarse_points, knobs, third_tone);
    const auto recs = floquet::optimized_squeezing_vs_cooperativity(opts, coops);
    cli::CsvWriter csv(dir / "floquet_coop.csv",
                       "coop,ratio_opt,var_x1_opt,var_x1_analytic,n_eff,beta_occ,"
                       "validity_lhs,validity_rhs,validity_ok,interior,converged");
    for (const auto& r : recs) {
      csv.row({r.coop, r.ratio_opt, r.var_x1_opt, r.var_x1_analytic, r.n_eff,
               r.beta_occ, r.validity_lhs, r.validity_rhs, r.bad_cavity_ok ? 1.0 : 0.0,
               r.interior ? 1.0 : 0.0, r.converged ? 1.0 : 0.0});
      if (r.status != "ok")
        failures.push_back({{"coop", r.coop}, {"error", r.status}});
    }
    j["config"] = config_echo(c, {{"mode", mode},
                                  {"coop_grid", coop_grid},
                                  {"third_tone", third_tone},
                                  {"opt_tol", opt_tol},
                                  {"coarse_points", coarse_points}});
  } else {
    throw InvalidInput("mode must be ratio or coop");
  }

  j["failures"] = failures;
  j["timing_ms"] = ms_since(t0);
  write_json(dir / "floquet_sweep_summary.json", j);
  return 0;
}

// -------------------------------------------------------------- third-tone --

int run_third_tone(const CommonOpts& c, double coop, const std::string& ratio_grid,
                   const optimize::FloquetSweepKnobs& knobs) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!(c.kappa_over_omega > 0.0))
    throw InvalidInput("third-tone needs --kappa-over-omega > 0");
  const auto ratios = cli::parse_grid(ratio_grid).sample();

  floquet::FloquetOptions fopts;
  fopts.tolerance = knobs.tolerance;
  fopts.max_periods = knobs.max_periods;
  fopts.steps_per_period = knobs.steps_per_period;

  struct Row {
    double off = kNan, on = kNan, conv_off = 0.0, conv_on = 0.0;
    std::string status = "ok";
  };
  std::vector<Row> rows(ratios.size());
  parallel_for(ratios.size(), c.jobs, [&](std::size_t i) {
    try {
      SystemParams p = c.point(coop, ratios[i]);
      const auto off = floquet::periodic_steady_state(p, fopts);
      p.g_three = p.g_plus;
      const auto on = floquet::periodic_steady_state(p, fopts);
      rows[i] = {off.var_x1_avg, on.var_x1_avg, off.converged ? 1.0 : 0.0,
                 on.converged ? 1.0 : 0.0, "ok"};
    } catch (const Error& e) {
      rows[i].status = e.code();
    }
  });

  const fs::path dir = resolve_out_dir(c);
  cli::CsvWriter csv(dir / "third_tone.csv",
                     "ratio,var_g3_zero,var_g3_plus,converged_g3_zero,"
                     "converged_g3_plus");
  json failures = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    csv.row({ratios[i], rows[i].off, rows[i].on, rows[i].conv_off,
             rows[i].conv_on});
    if (rows[i].status != "ok")
      failures.push_back({{"ratio", ratios[i]}, {"error", rows[i].status}});
  }

  json j;
  j["config"] =
      config_echo(c, {{"coop", coop}, {"ratio_grid", ratio_grid}});
  j["failures"] = failures;
  j["timing_ms"] = ms_since(t0);
  write_json(dir / "third_tone_summary.json", j);
  return 0;
}

// --------------------------------------------------------- compare-lindblad --

int run_compare_lindblad(const CommonOpts& c, const std::string& grid) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto coops = cli::parse_grid(grid).sample();

  const fs::path dir = resolve_out_dir(c);
  cli::CsvWriter csv(dir / "compare_lindblad.csv",
                     "coop,ratio,var_full,var_lindblad,abs_diff,rel_diff,"
                     "n_eff_full,n_eff_lindblad,purity_sq_prediction");
  for (double coop : coops) {
    const auto ana = rwa::optimal_ratio_analytic(coop, c.n_th);
    if (!(ana.ratio > 0.0)) {
      csv.row({coop, kNan, kNan, kNan, kNan, kNan, kNan, kNan, kNan});
      continue;
    }
    const SystemParams p = c.point(coop, ana.ratio);
    const auto full = rwa::steady_state(p);
    const auto red = lindblad::lindblad_steady_state(p);
    csv.row({coop, ana.ratio, full.var_x1, red.var_x1,
             full.var_x1 - red.var_x1, full.var_x1 / red.var_x1 - 1.0,
             full.n_eff, red.n_eff,
             lindblad::lindblad_purity_prediction(coop, c.n_th)});
  }

  json j;
  j["config"] = config_echo(c, {{"coop_grid", grid}});
  j["timing_ms"] = ms_since(t0);
  write_json(dir / "compare_lindblad_summary.json", j);
  return 0;
}

// ---------------------------------------------------------- check-validity --

int run_check_validity(const CommonOpts& c, const std::string& grid) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!(c.kappa_over_omega > 0.0))
    throw InvalidInput("check-validity needs --kappa-over-omega > 0");
  const auto coops = cli::parse_grid(grid).sample();

  const fs::path dir = resolve_out_dir(c);
  cli::CsvWriter csv(dir / "check_validity.csv",
                     "coop,lhs,rhs,lhs_over_rhs,satisfied");
  for (double coop : coops) {
    const auto p = c.point(coop, 0.5);
    const auto v = check_bad_cavity_condition(p);
    csv.row({coop, v.lhs, v.rhs, v.lhs / v.rhs, v.satisfied ? 1.0 : 0.0});
  }

  json j;
  j["config"] = config_echo(c, {{"coop_grid", grid}});
  j["timing_ms"] = ms_since(t0);
  write_json(dir / "check_validity_summary.json", j);
  return 0;
}

// ------------------------------------------------------------------ bounds --

int run_bounds(const CommonOpts& c, const std::string& grid, double fixed_ratio) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto coops = cli::parse_grid(grid).sample();

  const fs::path dir = resolve_out_dir(c);
  cli::CsvWriter csv(dir / "bounds.csv",
                     "coop,ratio,var_exact,lower,upper,zeta,beta_occ,"
                     "beta_anomalous_estimate,sandwich_ok");
  for (double coop : coops) {
    const double q = fixed_ratio > 0.0
                         ? fixed_ratio
                         : rwa::optimal_ratio_analytic(coop, c.n_th).ratio;
    if (!(q > 0.0 && q < 1.0)) {
      csv.row({coop, q, kNan, kNan, kNan, kNan, kNan, kNan, 0.0});
      continue;
    }
    const SystemParams p = c.point(coop, q);
    const auto rep = rwa::steady_state(p);
    const auto d = derive(p);
    const auto b =
        spectra::squeezing_bounds(d.r, rep.beta_occupancy.value(), c.n_th);
    const bool ok = b.lower <= rep.var_x1 && rep.var_x1 <= b.upper;
    csv.row({coop, q, rep.var_x1, b.lower, b.upper, b.zeta,
             rep.beta_occupancy.value(), b.beta_anomalous_estimate,
             ok ? 1.0 : 0.0});
  }

  json j;
  j["config"] = config_echo(c, {{"coop_grid", grid}, {"ratio", fixed_ratio}});
  j["timing_ms"] = ms_since(t0);
  write_json(dir / "bounds_summary.json", j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "twotone: steady-state mechanical squeezing in a two-tone driven "
      "optomechanical cavity"};
  app.require_subcommand(1);

  // steady
  CommonOpts c_steady;
  double steady_coop = 0.0, steady_ratio = 0.0;
  auto* sub_steady =
      app.add_subcommand("steady", "Exact steady-state report at one point");
  add_common(sub_steady, c_steady);
  sub_steady->add_option("--coop", steady_coop, "Cooperativity")->required();
  sub_steady->add_option("--ratio", steady_ratio, "Drive ratio G+/G-")->required();

  // sweep-ratio
  CommonOpts c_sweep;
  double sweep_coop = 0.0;
  std::string sweep_grid = "0.001:0.999:500:lin";
  std::string sweep_backend = "rwa";
  auto* sub_sweep = app.add_subcommand(
      "sweep-ratio", "Variance vs drive ratio at fixed cooperativity");
  add_common(sub_sweep, c_sweep);
  sub_sweep->add_option("--coop", sweep_coop, "Cooperativity")->required();
  sub_sweep->add_option("--ratio-grid", sweep_grid, "start:stop:count[:log|lin]")
      ->capture_default_str();
  sub_sweep->add_option("--backend", sweep_backend, "rwa | lindblad")
      ->capture_default_str();

  // optimize
  CommonOpts c_opt;
  std::string opt_grid = "10:1e6:26:log";
  std::string opt_backend = "rwa";
  double opt_tol = 1e-6;
  int opt_coarse = 200;
  optimize::FloquetSweepKnobs opt_knobs;
  auto* sub_opt = app.add_subcommand(
      "optimize", "Optimized squeezing and purity vs cooperativity");
  add_common(sub_opt, c_opt);
  sub_opt->add_option("--coop-grid", opt_grid, "start:stop:count[:log|lin]")
      ->capture_default_str();
  sub_opt->add_option("--backend", opt_backend, "rwa | lindblad | floquet")
      ->capture_default_str();
  sub_opt->add_option("--opt-tol", opt_tol, "Golden-section ratio tolerance")
      ->capture_default_str();
  sub_opt->add_option("--coarse-points", opt_coarse, "Coarse scan points")
      ->capture_default_str();
  sub_opt->add_option("--floquet-tol", opt_knobs.tolerance, "")
      ->capture_default_str();
  sub_opt->add_option("--floquet-max-periods", opt_knobs.max_periods, "")
      ->capture_default_str();
  sub_opt->add_option("--floquet-steps", opt_knobs.steps_per_period, "")
      ->capture_default_str();

  // spectrum
  CommonOpts c_spec;
  double spec_coop = 0.0, spec_ratio = 0.0;
  std::string spec_grid = "-1:1:2001:lin";
  auto* sub_spec = app.add_subcommand(
      "spectrum", "Cavity output spectrum (closed form and transfer matrix)");
  add_common(sub_spec, c_spec);
  sub_spec->add_option("--coop", spec_coop, "Cooperativity")->required();
  sub_spec->add_option("--ratio", spec_ratio, "Drive ratio G+/G-")->required();
  sub_spec->add_option("--omega-grid", spec_grid, "start:stop:count[:log|lin]")
      ->capture_default_str();

  // floquet-sweep
  CommonOpts c_floq;
  std::string floq_mode = "coop";
  double floq_coop = 0.0;
  std::string floq_rgrid = "0.9:0.999:40:lin";
  std::string floq_cgrid = "1e2:1e6:9:log";
  double floq_opt_tol = 1e-5;
  int floq_coarse = 64;
  optimize::FloquetSweepKnobs floq_knobs;
  bool floq_third = false;
  auto* sub_floq = app.add_subcommand(
      "floquet-sweep", "Periodic steady state beyond the rotating wave");
  add_common(sub_floq, c_floq);
  sub_floq->add_option("--mode", floq_mode, "ratio | coop")->capture_default_str();
  sub_floq->add_option("--coop", floq_coop, "Cooperativity (ratio mode)");
  sub_floq->add_option("--ratio-grid", floq_rgrid, "Ratio grid (ratio mode)")
      ->capture_default_str();
  sub_floq->add_option("--coop-grid", floq_cgrid, "Cooperativity grid (coop mode)")
      ->capture_default_str();
  sub_floq->add_option("--opt-tol", floq_opt_tol, "")->capture_default_str();
  sub_floq->add_option("--coarse-points", floq_coarse, "")->capture_default_str();
  sub_floq->add_option("--floquet-tol", floq_knobs.tolerance, "")
      ->capture_default_str();
  sub_floq->add_option("--floquet-max-periods", floq_knobs.max_periods, "")
      ->capture_default_str();
  sub_floq->add_option("--floquet-steps", floq_knobs.steps_per_period, "")
      ->capture_default_str();
  sub_floq->add_flag("--third-tone", floq_third,
                     "Tie the stabilizing tone to the blue drive (G3 = G+)");

  // third-tone
  CommonOpts c_third;
  double third_coop = 0.0;
  std::string third_grid = "0.6:0.99:40:lin";
  optimize::FloquetSweepKnobs third_knobs;
  auto* sub_third = app.add_subcommand(
      "third-tone", "Ratio scan with and without the stabilizing third tone");
  add_common(sub_third, c_third);
  sub_third->add_option("--coop", third_coop, "Cooperativity")->required();
  sub_third->add_option("--ratio-grid", third_grid, "start:stop:count[:log|lin]")
      ->capture_default_str();
  sub_third->add_option("--floquet-tol", third_knobs.tolerance, "")
      ->capture_default_str();
  sub_third->add_option("--floquet-max-periods", third_knobs.max_periods, "")
      ->capture_default_str();
  sub_third->add_option("--floquet-steps", third_knobs.steps_per_period, "")
      ->capture_default_str();

  // compare-lindblad
  CommonOpts c_cmp;
  std::string cmp_grid = "1e2:1e8:13:log";
  auto* sub_cmp = app.add_subcommand(
      "compare-lindblad",
      "Full steady state vs reduced master equation at the analytic optimum");
  add_common(sub_cmp, c_cmp);
  sub_cmp->add_option("--coop-grid", cmp_grid, "start:stop:count[:log|lin]")
      ->capture_default_str();

  // check-validity
  CommonOpts c_val;
  std::string val_grid = "1e2:1e8:13:log";
  auto* sub_val = app.add_subcommand(
      "check-validity", "Counter-rotating validity condition over a grid");
  add_common(sub_val, c_val);
  sub_val->add_option("--coop-grid", val_grid, "start:stop:count[:log|lin]")
      ->capture_default_str();

  // bounds
  CommonOpts c_bnd;
  std::string bnd_grid = "1e2:1e6:9:log";
  double bnd_ratio = 0.0;
  auto* sub_bnd = app.add_subcommand(
      "bounds", "Detection bounds on the squeezed variance");
  add_common(sub_bnd, c_bnd);
  sub_bnd->add_option("--coop-grid", bnd_grid, "start:stop:count[:log|lin]")
      ->capture_default_str();
  sub_bnd->add_option("--ratio", bnd_ratio,
                      "Fixed drive ratio (default: analytic optimum per point)");

  try {
    const std::vector<std::string> args = with_config_defaults(argc, argv);
    std::vector<const char*> cargv{argv[0]};
    for (const auto& a : args) cargv.push_back(a.c_str());
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << "error code=InvalidInput msg=\"" << e.what() << "\"\n";
    return 1;
  } catch (const InvalidInput& e) {
    std::cerr << "error code=" << e.code() << " msg=\"" << e.what() << "\"\n";
    return 1;
  }

  try {
    if (*sub_steady) return run_steady(c_steady, steady_coop, steady_ratio);
    if (*sub_sweep)
      return run_sweep_ratio(c_sweep, sweep_coop, sweep_grid, sweep_backend);
    if (*sub_opt)
      return run_optimize(c_opt, opt_grid, opt_backend, opt_tol, opt_coarse,
                          opt_knobs);
    if (*sub_spec) return run_spectrum(c_spec, spec_coop, spec_ratio, spec_grid);
    if (*sub_floq)
      return run_floquet_sweep(c_floq, floq_mode, floq_coop, floq_rgrid,
                               floq_cgrid, floq_opt_tol, floq_coarse, floq_knobs,
                               floq_third);
    if (*sub_third)
      return run_third_tone(c_third, third_coop, third_grid, third_knobs);
    if (*sub_cmp) return run_compare_lindblad(c_cmp, cmp_grid);
    if (*sub_val) return run_check_validity(c_val, val_grid);
    if (*sub_bnd) return run_bounds(c_bnd, bnd_grid, bnd_ratio);
  } catch (const InvalidInput& e) {
    std::cerr << "error code=" << e.code() << " msg=\"" << e.what() << "\"\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error code=" << e.code() << " msg=\"" << e.what() << "\"\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error code=Internal msg=\"" << e.what() << "\"\n";
    return 2;
  }
  return 0;
}
