#ifndef RFIQKD_DECOY_HPP
#define RFIQKD_DECOY_HPP

#include <array>

#include "rfiqkd/basis.hpp"
#include "rfiqkd/channel.hpp"
#include "rfiqkd/fluctuation.hpp"
#include "rfiqkd/protocol.hpp"

namespace rfiqkd {

/// Single-photon bounds extracted from the three-intensity statistics:
/// the yield floor for the key-generating pair and an error-rate ceiling per
/// basis pair. As produced by estimate_all every e1 ceiling lies in
/// [0, 0.5]; a ceiling pinned at 0.5 carries no correlator information.
struct SinglePhotonBounds {
  double y1_zz_lower = 0.0;
  std::array<double, 5> e1_upper{};  // indexed by BasisPair

  double e1(BasisPair p) const { return e1_upper[index_of(p)]; }
};

/// Analytic three-intensity floor on the single-photon yield:
///   mu/(mu nu - nu^2) * [Qnu^L e^nu - Qmu^U e^mu nu^2/mu^2
///                        - (mu^2 - nu^2)/mu^2 * Q0^U],
/// clamped to [0, 1]. A zero result means the decoy data cannot certify any
/// single-photon signal; callers treat that as no key.
double y1_lower_bound(double mu, double nu, double q_mu_upper,
                      double q_nu_lower, double q0_upper);

/// Analytic ceiling on the single-photon error rate:
///   (EQnu^U e^nu - Q0^L / 2) / (nu * Y1^L),
/// clamped to [0, 0.5]. Requires a strictly positive yield floor.
double e1_upper_bound(double nu, double eq_nu_upper, double q0_lower,
                      double y1_lower);

/// Full estimation pass: applies the directional fluctuation bounds (signal
/// gain up, decoy gain down, decoy error-gain up, vacuum both ways) with the
/// per-pair effective counts N * P_intensity * P(basis_A|intensity) *
/// P(basis_B), then forms a per-pair yield floor and error ceiling. A pair
/// whose yield floor degenerates to zero gets the uninformative ceiling 0.5
/// instead of an error (its correlator contribution vanishes, which is the
/// conservative direction).
SinglePhotonBounds estimate_all(const ObservedStatistics& stats,
                                const ProtocolParams& protocol,
                                const FluctuationConfig& config);

}  // namespace rfiqkd

#endif
