#include "rfiqkd/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "rfiqkd/errors.hpp"

namespace rfiqkd {

using namespace search_box;

void OptimizerConfig::validate() const {
  if (n_starts < 1) throw ValidationError("n_starts must be at least 1");
  if (max_iters < 1) throw ValidationError("max_iters must be at least 1");
  if (!(tol > 0.0)) throw ValidationError("tol must be positive");
}

KeyRateReport evaluate_protocol(const Scenario& scenario,
                                const ProtocolParams& params) {
  const ObservedStatistics stats =
      simulate_observations(scenario.channel, params, scenario.distance_km);
  const SinglePhotonBounds bounds =
      estimate_all(stats, params, scenario.fluctuation);
  if (scenario.security.mode == SecurityMode::Bb84) {
    return bb84_key_rate(params, stats, bounds, scenario.security);
  }
  return rfi_key_rate(params, stats, bounds, scenario.security);
}

double objective(const Scenario& scenario, const ProtocolParams& params) {
  return evaluate_protocol(scenario, params).rate;
}

namespace {

enum Coord {
  kMu, kNu, kPMu, kPNu, kPZaMu, kPXaMu, kPZaNu, kPXaNu, kPZb, kPXb,
  kNumCoords
};

double get(const ProtocolParams& p, int c) {
  switch (c) {
    case kMu: return p.mu;
    case kNu: return p.nu;
    case kPMu: return p.p_mu;
    case kPNu: return p.p_nu;
    case kPZaMu: return p.p_za_mu;
    case kPXaMu: return p.p_xa_mu;
    case kPZaNu: return p.p_za_nu;
    case kPXaNu: return p.p_xa_nu;
    case kPZb: return p.p_zb;
    default: return p.p_xb;
  }
}

void set(ProtocolParams& p, int c, double v) {
  switch (c) {
    case kMu: p.mu = v; break;
    case kNu: p.nu = v; break;
    case kPMu: p.p_mu = v; break;
    case kPNu: p.p_nu = v; break;
    case kPZaMu: p.p_za_mu = v; break;
    case kPXaMu: p.p_xa_mu = v; break;
    case kPZaNu: p.p_za_nu = v; break;
    case kPXaNu: p.p_xa_nu = v; break;
    case kPZb: p.p_zb = v; break;
    default: p.p_xb = v; break;
  }
}

// Two-out-of-three probability pair (the third component is the remainder):
// clamp both into the box and shrink proportionally if the remainder margin
// is violated.
void repair_pair(double& a, double& b, double margin) {
  a = std::clamp(a, kProbFloor, 1.0 - kProbFloor);
  b = std::clamp(b, kProbFloor, 1.0 - kProbFloor);
  const double cap = 1.0 - margin;
  if (a + b > cap) {
    const double scale = cap / (a + b);
    a = std::max(a * scale, kProbFloor);
    b = std::max(b * scale, kProbFloor);
  }
}

struct SearchSpace {
  bool zx_only = false;  // Z/X-only protocol: X weights derived from Z

  std::vector<int> free_coords() const {
    if (zx_only) return {kMu, kNu, kPMu, kPNu, kPZaMu, kPZaNu, kPZb};
    return {kMu,    kNu,    kPMu,   kPNu,   kPZaMu,
            kPXaMu, kPZaNu, kPXaNu, kPZb,   kPXb};
  }

  // Feasible interval of one coordinate with the others held fixed.
  std::pair<double, double> interval(const ProtocolParams& p, int c) const {
    switch (c) {
      case kMu:
        return {p.nu + kIntensityGap, kMuMax};
      case kNu:
        return {kNuMin, std::min(kNuMax, p.mu - kIntensityGap)};
      case kPMu:
        return {kProbFloor,
                std::min(1.0 - kProbFloor, 1.0 - kSumMargin - p.p_nu)};
      case kPNu:
        return {kProbFloor,
                std::min(1.0 - kProbFloor, 1.0 - kSumMargin - p.p_mu)};
      default:
        break;
    }
    if (zx_only) {
      // The paired X weight tracks this Z weight, leaving kProbFloor to Y.
      return {kProbFloor, 1.0 - 2.0 * kProbFloor};
    }
    double partner;
    switch (c) {
      case kPZaMu: partner = p.p_xa_mu; break;
      case kPXaMu: partner = p.p_za_mu; break;
      case kPZaNu: partner = p.p_xa_nu; break;
      case kPXaNu: partner = p.p_za_nu; break;
      case kPZb: partner = p.p_xb; break;
      default: partner = p.p_zb; break;
    }
    return {kProbFloor,
            std::min(1.0 - kProbFloor, 1.0 - kSumMargin - partner)};
  }

  // Bring a point onto the search manifold: derive the X weights in Z/X-only
  // mode and resolve box/sum violations.
  void repair(ProtocolParams& p) const {
    p.nu = std::clamp(p.nu, kNuMin, kNuMax);
    p.mu = std::clamp(p.mu, p.nu + kIntensityGap, kMuMax);
    repair_pair(p.p_mu, p.p_nu, std::max(kSumMargin, kProbFloor));
    if (zx_only) {
      p.p_za_mu = std::clamp(p.p_za_mu, kProbFloor, 1.0 - 2.0 * kProbFloor);
      p.p_za_nu = std::clamp(p.p_za_nu, kProbFloor, 1.0 - 2.0 * kProbFloor);
      p.p_zb = std::clamp(p.p_zb, kProbFloor, 1.0 - 2.0 * kProbFloor);
      p.p_xa_mu = 1.0 - p.p_za_mu - kProbFloor;
      p.p_xa_nu = 1.0 - p.p_za_nu - kProbFloor;
      p.p_xb = 1.0 - p.p_zb - kProbFloor;
    } else {
      repair_pair(p.p_za_mu, p.p_xa_mu, kProbFloor);
      repair_pair(p.p_za_nu, p.p_xa_nu, kProbFloor);
      repair_pair(p.p_zb, p.p_xb, kProbFloor);
    }
  }
};

double safe_objective(const Scenario& sc, const ProtocolParams& p) {
  try {
    return objective(sc, p);
  } catch (const ValidationError&) {
    return -1.0;  // infeasible: worse than any clamped rate
  }
}

// Deterministic golden-section maximization; assumes a (near-)unimodal
// objective and a fixed iteration budget so results are bit-reproducible.
template <typename F>
double golden_max(F&& f, double lo, double hi, int iters = 90) {
  const double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters && b - a > 1e-12; ++i) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

// Pattern-style coordinate descent: march each coordinate in steps
// proportional to its feasible interval, halving the step whenever a full
// sweep stalls.
double local_search(const Scenario& sc, const SearchSpace& space,
                    const OptimizerConfig& cfg, ProtocolParams& p, double f) {
  double step = 0.25;
  const double step_min = 1e-5;
  const std::vector<int> coords = space.free_coords();
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const double f_before = f;
    for (int c : coords) {
      for (int dir : {+1, -1}) {
        while (true) {
          const auto [lo, hi] = space.interval(p, c);
          if (!(hi > lo)) break;
          const double x = get(p, c);
          const double cand = std::clamp(x + dir * step * (hi - lo), lo, hi);
          if (cand == x) break;
          ProtocolParams q = p;
          set(q, c, cand);
          if (space.zx_only) space.repair(q);
          const double fq = safe_objective(sc, q);
          if (fq > f) {
            p = q;
            f = fq;
          } else {
            break;
          }
        }
      }
    }
    const double rel = (f - f_before) / std::max(f, 1e-300);
    if (rel < cfg.tol) {
      step *= 0.5;
      if (step < step_min) break;
    }
  }
  return f;
}

ProtocolParams random_start(std::uint64_t seed, int start_index,
                            const SearchSpace& space) {
  std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL *
                                 static_cast<std::uint64_t>(start_index + 1));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double r[10];
  for (double& x : r) x = unit(rng);

  ProtocolParams p;
  p.nu = 0.01 + 0.29 * r[0];
  p.mu = p.nu + kIntensityGap + r[1] * (kMuMax - p.nu - kIntensityGap);
  const double vac = 0.02 + 0.38 * r[2];
  const double mu_share = 0.15 + 0.7 * r[3];
  p.p_mu = (1.0 - vac) * mu_share;
  p.p_nu = (1.0 - vac) * (1.0 - mu_share);
  const double groups[3][2] = {{r[4], r[5]}, {r[6], r[7]}, {r[8], r[9]}};
  double z[3], x[3];
  for (int i = 0; i < 3; ++i) {
    const double yw = 0.02 + 0.38 * groups[i][0];
    const double z_share = 0.15 + 0.7 * groups[i][1];
    z[i] = (1.0 - yw) * z_share;
    x[i] = (1.0 - yw) * (1.0 - z_share);
  }
  p.p_za_mu = z[0]; p.p_xa_mu = x[0];
  p.p_za_nu = z[1]; p.p_xa_nu = x[1];
  p.p_zb = z[2]; p.p_xb = x[2];
  space.repair(p);
  return p;
}

// A deliberately key-heavy point; one fixed start alongside the random ones.
ProtocolParams biased_start(const SearchSpace& space) {
  ProtocolParams p;
  p.mu = 0.5;
  p.nu = 0.1;
  p.p_mu = 0.6;
  p.p_nu = 0.3;
  p.p_za_mu = 0.85; p.p_xa_mu = 0.10;
  p.p_za_nu = 0.30; p.p_xa_nu = 0.60;
  p.p_zb = 0.85; p.p_xb = 0.10;
  space.repair(p);
  return p;
}

ProtocolParams baseline_start(const Scenario& sc, const SearchSpace& space) {
  auto rate_at_mu = [&](double mu) {
    ProtocolParams p = unbiased_protocol(mu);
    space.repair(p);
    return safe_objective(sc, p);
  };
  const double mu =
      golden_max(rate_at_mu, 0.1 + kIntensityGap, kMuMax);
  ProtocolParams p = unbiased_protocol(mu);
  space.repair(p);
  return p;
}

}  // namespace

OptimizationResult optimize(const Scenario& scenario,
                            const OptimizerConfig& config,
                            const std::vector<ProtocolParams>& extra_starts) {
  config.validate();
  SearchSpace space{scenario.security.mode == SecurityMode::Bb84};

  std::vector<ProtocolParams> starts;
  starts.push_back(baseline_start(scenario, space));
  if (config.n_starts > 1) starts.push_back(biased_start(space));
  for (int k = 2; k < config.n_starts; ++k) {
    starts.push_back(random_start(config.seed, k, space));
  }
  for (ProtocolParams p : extra_starts) {
    space.repair(p);
    starts.push_back(p);
  }
  if (starts.empty() ||
      std::none_of(starts.begin(), starts.end(),
                   [](const ProtocolParams& p) { return is_feasible(p); })) {
    throw NumericalError("search-failure: no feasible start found");
  }

  const ProtocolParams baseline = starts.front();
  ProtocolParams best = baseline;
  double best_rate = -1.0;
  for (const ProtocolParams& start : starts) {
    ProtocolParams p = start;
    double f = safe_objective(scenario, p);
    f = local_search(scenario, space, config, p, f);
    if (f > best_rate) {
      best_rate = f;
      best = p;
    }
  }
  if (best_rate <= 0.0) {
    // Nothing produces key here; report the baseline point instead of an
    // arbitrary interior one.
    return {baseline, evaluate_protocol(scenario, baseline)};
  }
  return {best, evaluate_protocol(scenario, best)};
}

OptimizationResult unbiased_baseline(const Scenario& scenario) {
  auto rate_at_mu = [&](double mu) {
    return safe_objective(scenario, unbiased_protocol(mu));
  };
  const double mu =
      golden_max(rate_at_mu, 0.1 + kIntensityGap, kMuMax);
  const ProtocolParams p = unbiased_protocol(mu);
  return {p, evaluate_protocol(scenario, p)};
}

}  // namespace rfiqkd
