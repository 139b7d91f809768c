#include "rfiqkd/channel.hpp"

#include <cmath>

#include "rfiqkd/errors.hpp"

namespace rfiqkd {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fold an arbitrary angle into [0, 90] degrees; |cos| and |sin| are
// preserved, which is all the correlator analysis depends on.
double fold_beta(double beta_deg) {
  if (!std::isfinite(beta_deg)) {
    throw ValidationError("frame rotation beta must be finite");
  }
  double b = std::fmod(std::fabs(beta_deg), 180.0);
  if (b > 90.0) b = 180.0 - b;
  return b;
}

}  // namespace

ChannelParams::ChannelParams(double eta_, double y0_, double ed_,
                             double alpha_, double beta_deg_)
    : eta(eta_),
      y0(y0_),
      ed(ed_),
      alpha_db_per_km(alpha_),
      beta_deg(fold_beta(beta_deg_)) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw ValidationError("detector efficiency must lie in (0, 1]");
  }
  if (!(y0 >= 0.0 && y0 < 1.0)) {
    throw ValidationError("dark-count probability must lie in [0, 1)");
  }
  if (!(ed >= 0.0 && ed < 0.5)) {
    throw ValidationError("detector error probability must lie in [0, 0.5)");
  }
  if (!(alpha_db_per_km >= 0.0)) {
    throw ValidationError("fiber loss coefficient must be nonnegative");
  }
}

double ChannelParams::beta_rad() const { return beta_deg * kPi / 180.0; }

ChannelParams reference_channel(double beta_deg) {
  return ChannelParams(defaults::kEta, defaults::kDarkCount,
                       defaults::kDetectorError, defaults::kFiberLossDbKm,
                       beta_deg);
}

double transmittance(const ChannelParams& params, double distance_km) {
  if (!(distance_km >= 0.0)) {
    throw ValidationError("distance must be nonnegative");
  }
  return params.eta * std::pow(10.0, -params.alpha_db_per_km * distance_km / 10.0);
}

double n_photon_yield(const ChannelParams& params, double t, unsigned n) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw ValidationError("transmission probability must lie in [0, 1]");
  }
  return 1.0 - (1.0 - params.y0) * std::pow(1.0 - t, static_cast<double>(n));
}

double single_photon_error(const ChannelParams& params, BasisPair pair) {
  const double b = params.beta_rad();
  double kappa;
  switch (pair) {
    case BasisPair::ZZ: kappa = 1.0; break;
    case BasisPair::XX:
    case BasisPair::YY: kappa = std::cos(b); break;
    case BasisPair::XY: kappa = std::sin(b); break;
    default: kappa = -std::sin(b); break;  // YX
  }
  return 0.5 * (1.0 - (1.0 - 2.0 * params.ed) * kappa);
}

double observed_gain(const ChannelParams& params, double intensity,
                     double distance_km) {
  if (!(intensity >= 0.0)) {
    throw ValidationError("mean photon number must be nonnegative");
  }
  const double t = transmittance(params, distance_km);
  return 1.0 - (1.0 - params.y0) * std::exp(-t * intensity);
}

double observed_error_gain(const ChannelParams& params, double intensity,
                           BasisPair pair, double distance_km) {
  if (!(intensity >= 0.0)) {
    throw ValidationError("mean photon number must be nonnegative");
  }
  const double t = transmittance(params, distance_km);
  const double e1 = single_photon_error(params, pair);
  return 0.5 * params.y0 + e1 * (1.0 - std::exp(-t * intensity));
}

ObservedStatistics simulate_observations(const ChannelParams& params,
                                         const ProtocolParams& protocol,
                                         double distance_km) {
  if (!is_feasible(protocol)) {
    throw ValidationError("protocol parameters are infeasible");
  }
  ObservedStatistics stats{};
  const double intensities[2] = {protocol.mu, protocol.nu};
  for (int i = 0; i < 2; ++i) {
    const double gain = observed_gain(params, intensities[i], distance_km);
    for (BasisPair pair : kAllBasisPairs) {
      stats.q[i][index_of(pair)] = gain;
      stats.eq[i][index_of(pair)] =
          observed_error_gain(params, intensities[i], pair, distance_km);
    }
  }
  stats.q0 = params.y0;
  return stats;
}

}  // namespace rfiqkd
