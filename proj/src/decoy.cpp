#include "rfiqkd/decoy.hpp"

#include <algorithm>
#include <cmath>

#include "rfiqkd/errors.hpp"

namespace rfiqkd {

double y1_lower_bound(double mu, double nu, double q_mu_upper,
                      double q_nu_lower, double q0_upper) {
  if (!(nu > 0.0 && mu > nu)) {
    throw ValidationError(
        "intensity-ordering: decoy intensity must satisfy 0 < nu < mu");
  }
  const double mu2 = mu * mu;
  const double nu2 = nu * nu;
  const double raw =
      mu / (mu * nu - nu2) *
      (q_nu_lower * std::exp(nu) - q_mu_upper * std::exp(mu) * nu2 / mu2 -
       (mu2 - nu2) / mu2 * q0_upper);
  return std::clamp(raw, 0.0, 1.0);
}

double e1_upper_bound(double nu, double eq_nu_upper, double q0_lower,
                      double y1_lower) {
  if (!(nu > 0.0)) {
    throw ValidationError("decoy intensity must be positive");
  }
  if (!(y1_lower > 0.0)) {
    throw NumericalError(
        "undefined-error-rate: no single-photon yield to attribute errors to");
  }
  const double raw =
      (eq_nu_upper * std::exp(nu) - 0.5 * q0_lower) / (nu * y1_lower);
  return std::clamp(raw, 0.0, 0.5);
}

SinglePhotonBounds estimate_all(const ObservedStatistics& stats,
                                const ProtocolParams& protocol,
                                const FluctuationConfig& config) {
  if (!is_feasible(protocol)) {
    throw ValidationError("protocol parameters are infeasible");
  }
  const double gamma = config.gamma;
  const BoundedValue q0 = vacuum_bounds(stats.q0, config, protocol.p_vacuum());

  SinglePhotonBounds bounds;
  for (BasisPair pair : kAllBasisPairs) {
    const double n_mu =
        effective_count(config, protocol.p_mu *
                                    protocol.pair_selection_prob(true, pair));
    const double n_nu =
        effective_count(config, protocol.p_nu *
                                    protocol.pair_selection_prob(false, pair));
    const double q_mu_up = gain_upper(stats.gain(true, pair), n_mu, gamma);
    const double q_nu_lo = gain_lower(stats.gain(false, pair), n_nu, gamma);
    const double y1 =
        y1_lower_bound(protocol.mu, protocol.nu, q_mu_up, q_nu_lo, q0.upper);

    double e1;
    if (y1 > 0.0) {
      const double eq_nu_up =
          error_gain_upper(stats.error_gain(false, pair), n_nu, gamma);
      e1 = e1_upper_bound(protocol.nu, eq_nu_up, q0.lower, y1);
    } else {
      e1 = 0.5;  // no certified yield, no correlator information
    }
    bounds.e1_upper[index_of(pair)] = e1;
    if (pair == BasisPair::ZZ) bounds.y1_zz_lower = y1;
  }
  return bounds;
}

}  // namespace rfiqkd
