#include <cmath>

#include "doctest.h"
#include "rfiqkd/errors.hpp"
#include "rfiqkd/optimizer.hpp"

using namespace rfiqkd;

namespace {

Scenario make_scenario(double beta, double distance, double n_pulses,
                       double gamma, SecurityMode mode) {
  return Scenario{reference_channel(beta), distance,
                  FluctuationConfig(n_pulses, gamma),
                  SecurityConfig(defaults::kReconciliationEfficiency, mode)};
}

bool same_params(const ProtocolParams& a, const ProtocolParams& b) {
  return a.mu == b.mu && a.nu == b.nu && a.p_mu == b.p_mu &&
         a.p_nu == b.p_nu && a.p_za_mu == b.p_za_mu &&
         a.p_xa_mu == b.p_xa_mu && a.p_za_nu == b.p_za_nu &&
         a.p_xa_nu == b.p_xa_nu && a.p_zb == b.p_zb && a.p_xb == b.p_xb;
}

}  // namespace

TEST_CASE("evaluation composes the full pipeline") {
  const Scenario sc =
      make_scenario(0.0, 50.0, 1e11, 5.0, SecurityMode::RfiEveInfo);
  const ProtocolParams p;
  const ObservedStatistics stats =
      simulate_observations(sc.channel, p, sc.distance_km);
  const SinglePhotonBounds bounds = estimate_all(stats, p, sc.fluctuation);
  const KeyRateReport direct = rfi_key_rate(p, stats, bounds, sc.security);
  const KeyRateReport composed = evaluate_protocol(sc, p);
  CHECK(composed.rate == direct.rate);
  CHECK(objective(sc, p) == direct.rate);
  CHECK(composed.rate > 0.0);
}

TEST_CASE("configuration validation") {
  const Scenario sc =
      make_scenario(0.0, 10.0, 1e11, 5.0, SecurityMode::RfiEveInfo);
  OptimizerConfig cfg;
  cfg.n_starts = 0;
  CHECK_THROWS_AS(optimize(sc, cfg), ValidationError);
  cfg = OptimizerConfig{};
  cfg.tol = 0.0;
  CHECK_THROWS_AS(optimize(sc, cfg), ValidationError);
  cfg = OptimizerConfig{};
  cfg.max_iters = 0;
  CHECK_THROWS_AS(optimize(sc, cfg), ValidationError);
}

TEST_CASE("uniform baseline tunes only the signal intensity") {
  const Scenario sc =
      make_scenario(0.0, 50.0, 1e11, 5.0, SecurityMode::RfiEveInfo);
  const OptimizationResult res = unbiased_baseline(sc);
  CHECK(res.report.rate > 0.0);
  CHECK(res.params.p_mu == doctest::Approx(1.0 / 3.0));
  CHECK(res.params.p_za_mu == doctest::Approx(1.0 / 3.0));
  CHECK(res.params.p_zb == doctest::Approx(1.0 / 3.0));
  CHECK(res.params.nu == doctest::Approx(0.1));
  CHECK(res.params.mu > 0.1);
  CHECK(res.params.mu <= 1.0);
}

TEST_CASE("optimization is deterministic for a fixed seed") {
  const Scenario sc =
      make_scenario(10.0, 50.0, 1e11, 5.0, SecurityMode::RfiEveInfo);
  OptimizerConfig cfg;
  cfg.n_starts = 4;
  cfg.seed = 42;
  const OptimizationResult a = optimize(sc, cfg);
  const OptimizationResult b = optimize(sc, cfg);
  CHECK(same_params(a.params, b.params));
  CHECK(a.report.rate == b.report.rate);
}

TEST_CASE("optimization dominates the uniform baseline") {
  for (double distance : {10.0, 50.0}) {
    const Scenario sc =
        make_scenario(0.0, distance, 1e11, 5.0, SecurityMode::RfiEveInfo);
    OptimizerConfig cfg;
    cfg.n_starts = 4;
    const OptimizationResult best = optimize(sc, cfg);
    const OptimizationResult base = unbiased_baseline(sc);
    CHECK(best.report.rate >= base.report.rate);
    CHECK(best.report.rate > 0.0);
  }
}

TEST_CASE("optimized parameters respect the search box") {
  const Scenario sc =
      make_scenario(20.0, 50.0, 1e11, 5.0, SecurityMode::RfiEveInfo);
  OptimizerConfig cfg;
  cfg.n_starts = 4;
  const OptimizationResult res = optimize(sc, cfg);
  const ProtocolParams& p = res.params;
  CHECK(is_feasible(p));
  CHECK(p.mu <= search_box::kMuMax);
  CHECK(p.nu >= search_box::kNuMin);
  CHECK(p.nu <= search_box::kNuMax);
  CHECK(p.mu - p.nu >= search_box::kIntensityGap * (1.0 - 1e-12));
  CHECK(p.p_mu >= search_box::kProbFloor);
  CHECK(p.p_nu >= search_box::kProbFloor);
}

TEST_CASE("a warm start can only improve the result") {
  const Scenario sc =
      make_scenario(0.0, 75.0, 1e11, 5.0, SecurityMode::RfiEveInfo);
  OptimizerConfig cfg;
  cfg.n_starts = 2;
  const OptimizationResult first = optimize(sc, cfg);
  const OptimizationResult warmed = optimize(sc, cfg, {first.params});
  CHECK(warmed.report.rate >= first.report.rate);
}

TEST_CASE("two-basis mode pins the third basis to the floor") {
  const Scenario sc = make_scenario(10.0, 50.0, 1e11, 5.0, SecurityMode::Bb84);
  OptimizerConfig cfg;
  cfg.n_starts = 4;
  const OptimizationResult res = optimize(sc, cfg);
  CHECK(res.report.rate > 0.0);
  CHECK(res.params.p_ya_mu() ==
        doctest::Approx(search_box::kProbFloor).epsilon(1e-6));
  CHECK(res.params.p_ya_nu() ==
        doctest::Approx(search_box::kProbFloor).epsilon(1e-6));
  CHECK(res.params.p_yb() ==
        doctest::Approx(search_box::kProbFloor).epsilon(1e-6));
  CHECK(is_feasible(res.params));
}

TEST_CASE("hopeless statistics report no key with a usable fallback point") {
  const Scenario sc =
      make_scenario(0.0, 50.0, 1e3, 5.0, SecurityMode::RfiEveInfo);
  OptimizerConfig cfg;
  cfg.n_starts = 3;
  const OptimizationResult res = optimize(sc, cfg);
  CHECK(res.report.rate == 0.0);
  CHECK(res.report.no_key);
  CHECK(is_feasible(res.params));
}
