#include <doctest.h>

#include <cmath>
#include <vector>

#include "testutil.hpp"
#include "twotone/rwa.hpp"
#include "twotone/spectra.hpp"

using namespace twotone;
using doctest::Approx;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

SystemParams coop_point(double coop, double ratio, double n_th,
                        double gamma_over_kappa = 1e-4) {
  return params_from_cooperativity(coop, ratio, 1.0, gamma_over_kappa, n_th);
}

int count_local_maxima(const std::vector<double>& s) {
  int n = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i)
    if (s[i] > s[i - 1] && s[i] > s[i + 1]) ++n;
  return n;
}

}  // namespace

TEST_CASE("spectrum vanishes without photons to emit") {
  const auto p = coop_point(1e4, 0.0, 0.0);
  const auto grid = linspace(-2.0, 2.0, 101);
  for (double s : spectra::output_spectrum_analytic(p, grid).s) CHECK(s == 0.0);
  for (double s : spectra::output_spectrum_numeric(p, grid).s)
    CHECK(std::abs(s) < 1e-24);
}

TEST_CASE("resonance value at the optimally squeezed point") {
  const auto p = coop_point(1e4, 0.954174, 10.0);
  const auto series = spectra::output_spectrum_analytic(p, {-1.0, 0.0, 1.0});
  CHECK(series.s[1] == Approx(0.996080136667303).epsilon(1e-9));
}

TEST_CASE("transfer-matrix route reproduces the closed form") {
  const auto grid = linspace(-3.0, 3.0, 41);
  for (int it = 0; it < 200; ++it) {
    const auto p = testutil::random_stable_params(1e1, 1e6);
    const auto a = spectra::output_spectrum_analytic(p, grid);
    const auto n = spectra::output_spectrum_numeric(p, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double scale = std::max({std::abs(a.s[i]), std::abs(n.s[i]), 1e-30});
      CHECK(std::abs(a.s[i] - n.s[i]) / scale < 1e-8);
    }
  }
}

TEST_CASE("both routes are even in the detuning") {
  const auto p = coop_point(1e4, 0.954174, 10.0);
  const auto grid = linspace(-2.0, 2.0, 81);  // symmetric grid
  for (const auto& series : {spectra::output_spectrum_analytic(p, grid),
                             spectra::output_spectrum_numeric(p, grid)}) {
    const std::size_t n = series.s.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(series.s[i] - series.s[n - 1 - i]) < 1e-12);
      CHECK(series.s[i] >= 0.0);
    }
  }
}

TEST_CASE("grid validation") {
  const auto p = coop_point(1e4, 0.5, 1.0);
  CHECK_THROWS_AS(spectra::output_spectrum_analytic(p, {}), InvalidInput);
  CHECK_THROWS_AS(spectra::output_spectrum_analytic(p, {0.0, 0.0}), InvalidInput);
}

TEST_CASE("spectra require a stable drift") {
  const auto p = coop_point(1e4, 1.2, 1.0);
  CHECK_THROWS_AS(spectra::output_spectrum_analytic(p, {0.0, 1.0}), NotHurwitz);
  CHECK_THROWS_AS(spectra::output_spectrum_numeric(p, {0.0, 1.0}), NotHurwitz);
  CHECK_THROWS_AS(spectra::integrated_weight(p), NotHurwitz);
}

TEST_CASE("weak coupling: single Lorentzian-like peak at resonance") {
  for (int it = 0; it < 20; ++it) {
    // g_eff below kappa/4 keeps the response unsplit.
    const double geff = testutil::uniform(0.02, 0.24);
    const double r = testutil::uniform(0.2, 1.5);
    SystemParams p;
    p.kappa = 1.0;
    p.gamma_m = testutil::log_uniform(1e-5, 1e-3);
    p.n_th = testutil::uniform(0.0, 20.0);
    p.g_minus = geff * std::cosh(r);
    p.g_plus = geff * std::sinh(r);
    const auto grid = linspace(-2.0, 2.0, 1601);
    const auto s = spectra::output_spectrum_analytic(p, grid).s;
    CHECK(count_local_maxima(s) == 1);
  }
}

TEST_CASE("strong coupling: normal-mode splitting close to 2 g_eff") {
  for (int it = 0; it < 20; ++it) {
    const double geff = testutil::uniform(1.0, 3.0);
    const double r = testutil::uniform(0.2, 1.5);
    SystemParams p;
    p.kappa = 1.0;
    p.gamma_m = testutil::log_uniform(1e-5, 1e-3);
    p.n_th = testutil::uniform(0.0, 20.0);
    p.g_minus = geff * std::cosh(r);
    p.g_plus = geff * std::sinh(r);
    const auto grid = linspace(-2.5 * geff, 2.5 * geff, 4001);
    const auto s = spectra::output_spectrum_analytic(p, grid).s;
    REQUIRE(count_local_maxima(s) == 2);
    int first = -1, second = -1;
    for (int i = 1; i + 1 < static_cast<int>(s.size()); ++i)
      if (s[i] > s[i - 1] && s[i] > s[i + 1]) (first < 0 ? first : second) = i;
    const double split = grid[second] - grid[first];
    CHECK(split == Approx(2.0 * geff).epsilon(0.10));
  }
}

TEST_CASE("integrated weight ties the area to the Bogoliubov occupancy") {
  for (double coop : {1e2, 1e4, 1e6}) {
    const auto opt = rwa::optimal_ratio_analytic(coop, 10.0);
    const auto p = coop_point(coop, opt.ratio, 10.0);
    const auto w = spectra::integrated_weight(p);
    const auto rep = rwa::steady_state(p);
    CHECK(w.beta_occ_inferred ==
          Approx(rep.beta_occupancy.value()).epsilon(0.01));
  }
}

TEST_CASE("integrated weight: null and monotone cases") {
  const auto w0 = spectra::integrated_weight(coop_point(1e4, 0.0, 0.0));
  CHECK(std::abs(w0.area) < 1e-15);

  const auto a1 = spectra::integrated_weight(coop_point(1e4, 0.5, 5.0)).area;
  const auto a2 = spectra::integrated_weight(coop_point(1e4, 0.5, 10.0)).area;
  CHECK(a2 > a1);

  CHECK_THROWS_AS(spectra::integrated_weight(coop_point(1e4, 1.0, 1.0)),
                  InvalidInput);
}

TEST_CASE("bounds: vacuum Bogoliubov mode") {
  const auto b = spectra::squeezing_bounds(1.2, 0.0, 3.0);
  const double em2r = std::exp(-2.4);
  CHECK(b.upper == Approx(2.0 * em2r).epsilon(1e-12));
  CHECK(b.lower == Approx(em2r).epsilon(1e-12));
  CHECK(em2r >= b.lower);
  CHECK(em2r <= b.upper);
}

TEST_CASE("bounds: sandwich the exact variance at the working point") {
  const auto p = coop_point(1e4, 0.954174, 10.0);
  const auto rep = rwa::steady_state(p);
  const auto d = derive(p);
  const auto b =
      spectra::squeezing_bounds(d.r, rep.beta_occupancy.value(), p.n_th);
  CHECK(b.lower <= rep.var_x1);
  CHECK(rep.var_x1 <= b.upper);
}

TEST_CASE("bounds: zeta never drops below one") {
  for (int it = 0; it < 200; ++it) {
    const double r = testutil::uniform(0.0, 5.0);
    const double n_th = testutil::uniform(0.0, 100.0);
    const auto b = spectra::squeezing_bounds(r, testutil::uniform(0.0, 10.0), n_th);
    CHECK(b.zeta >= 1.0);
  }
}
