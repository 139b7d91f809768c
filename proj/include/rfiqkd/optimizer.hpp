#ifndef RFIQKD_OPTIMIZER_HPP
#define RFIQKD_OPTIMIZER_HPP

#include <cstdint>
#include <vector>

#include "rfiqkd/channel.hpp"
#include "rfiqkd/decoy.hpp"
#include "rfiqkd/fluctuation.hpp"
#include "rfiqkd/protocol.hpp"
#include "rfiqkd/security.hpp"

namespace rfiqkd {

/// Everything that defines one operating point except the protocol
/// parameters themselves.
struct Scenario {
  ChannelParams channel;
  double distance_km;
  FluctuationConfig fluctuation;
  SecurityConfig security;
};

/// Multi-start local search settings. For a fixed (seed, config, scenario)
/// the result is fully deterministic, and the start sequence for n starts is
/// a prefix of the sequence for n + 1.
struct OptimizerConfig {
  int n_starts = 16;
  int max_iters = 200;
  double tol = 1e-6;      // relative objective improvement per sweep
  std::uint64_t seed = 1;

  void validate() const;
};

// Search box. Probabilities live in [1e-4, 1 - 1e-4] with pairwise sums kept
// 1e-6 below 1; intensities satisfy nu + 1e-4 <= mu <= 1.
namespace search_box {
inline constexpr double kProbFloor = 1e-4;
inline constexpr double kSumMargin = 1e-6;
inline constexpr double kIntensityGap = 1e-4;
inline constexpr double kNuMin = 1e-4;
inline constexpr double kNuMax = 0.5;
inline constexpr double kMuMax = 1.0;
}  // namespace search_box

/// Full pipeline at one point: expected observables -> fluctuation-bounded
/// single-photon estimates -> key rate for the scenario's security mode.
KeyRateReport evaluate_protocol(const Scenario& scenario,
                                const ProtocolParams& params);

/// Key rate as a scalar objective. Throws ValidationError on infeasible
/// parameters; the optimizer treats that as minus infinity.
double objective(const Scenario& scenario, const ProtocolParams& params);

struct OptimizationResult {
  ProtocolParams params;
  KeyRateReport report;
};

/// Multi-start projected coordinate descent over the ten decision variables
/// (seven in the Z/X-only mode, where the X weights track the Z weights with
/// the Y weight pinned at the box floor). Start 0 is the unbiased reference
/// point with its intensity pre-optimized, so the result never falls below
/// that baseline; remaining starts are seeded random draws. extra_starts
/// are appended after the seeded ones (used by scans to warm-start from a
/// neighbouring grid point). If every start lands at zero rate the baseline
/// parameters are returned with the no_key flag.
OptimizationResult optimize(const Scenario& scenario,
                            const OptimizerConfig& config,
                            const std::vector<ProtocolParams>& extra_starts = {});

/// Reference configuration: all intensity/basis probabilities 1/3, decoy
/// intensity 0.1, signal intensity alone optimized by golden-section search.
OptimizationResult unbiased_baseline(const Scenario& scenario);

}  // namespace rfiqkd

#endif
