#ifndef RFIQKD_CHANNEL_HPP
#define RFIQKD_CHANNEL_HPP

#include <array>

#include "rfiqkd/basis.hpp"
#include "rfiqkd/protocol.hpp"

namespace rfiqkd {

/// Physical scenario of the fiber link and receiver. beta is the drift angle
/// between the parties' local X/Y frames, given in degrees; it is folded into
/// [0, 90] on construction (the correlator analysis is periodic in it).
struct ChannelParams {
  double eta;             // detector efficiency, in (0, 1]
  double y0;              // dark-count probability per pulse, in [0, 1)
  double ed;              // erroneous-detector probability, in [0, 0.5)
  double alpha_db_per_km; // fiber loss coefficient, >= 0
  double beta_deg;        // frame rotation, folded into [0, 90]

  ChannelParams(double eta, double y0, double ed, double alpha_db_per_km,
                double beta_deg);

  double beta_rad() const;
};

namespace defaults {
// Receiver/link parameters used by every batch run unless overridden.
inline constexpr double kEta = 0.145;
inline constexpr double kDarkCount = 3.0e-6;
inline constexpr double kDetectorError = 0.015;
inline constexpr double kFiberLossDbKm = 0.2;
inline constexpr double kReconciliationEfficiency = 1.16;
inline constexpr double kGamma = 5.0;           // confidence width, std devs
inline constexpr double kPulseCount = 1.0e11;   // total pulses sent
}  // namespace defaults

ChannelParams reference_channel(double beta_deg);

/// Expected observables for one scenario: gain and error-gain per
/// (intensity, basis pair), with intensity index 0 = signal, 1 = decoy, plus
/// the vacuum gain. Invariant: 0 <= eq <= q <= 1 entrywise.
struct ObservedStatistics {
  std::array<std::array<double, 5>, 2> q;   // [signal|decoy][pair]
  std::array<std::array<double, 5>, 2> eq;  // [signal|decoy][pair]
  double q0;                                // vacuum gain (dark counts only)

  double gain(bool signal, BasisPair p) const {
    return q[signal ? 0 : 1][index_of(p)];
  }
  double error_gain(bool signal, BasisPair p) const {
    return eq[signal ? 0 : 1][index_of(p)];
  }
};

/// End-to-end transmission probability eta * 10^(-alpha L / 10).
double transmittance(const ChannelParams& params, double distance_km);

/// Detection probability of an n-photon pulse through transmission t with a
/// threshold detector: 1 - (1 - y0)(1 - t)^n.
double n_photon_yield(const ChannelParams& params, double t, unsigned n);

/// Error probability carried by a detected single photon for the given basis
/// pair: (1 - (1 - 2 ed) kappa)/2 with kappa = 1 for ZZ, cos(beta) for
/// XX/YY, sin(beta) for XY and -sin(beta) for YX. The YX value exceeds 1/2
/// for beta > 0 (anticorrelated pair); only the squared correlator
/// (1 - 2e)^2 is frame-invariant.
double single_photon_error(const ChannelParams& params, BasisPair pair);

/// Poisson-averaged gain of a weak coherent pulse:
/// 1 - (1 - y0) exp(-t * intensity).
double observed_gain(const ChannelParams& params, double intensity,
                     double distance_km);

/// Joint probability of detection and bit error:
/// y0/2 + e1(pair) * (1 - exp(-t * intensity)). Dark counts produce random
/// bits, hence the 1/2.
double observed_error_gain(const ChannelParams& params, double intensity,
                           BasisPair pair, double distance_km);

/// Fills the full gain/error-gain table for both intensities and all five
/// basis pairs. Pure function of its arguments.
ObservedStatistics simulate_observations(const ChannelParams& params,
                                         const ProtocolParams& protocol,
                                         double distance_km);

}  // namespace rfiqkd

#endif
