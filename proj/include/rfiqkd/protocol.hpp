#ifndef RFIQKD_PROTOCOL_HPP
#define RFIQKD_PROTOCOL_HPP

#include "rfiqkd/basis.hpp"

namespace rfiqkd {

/// The ten transmitter/receiver decision variables of the three-intensity
/// biased protocol: signal and decoy mean photon numbers, the probabilities
/// of sending each intensity (vacuum takes the remainder), Alice's
/// conditional basis probabilities per intensity (Y takes the remainder) and
/// Bob's measurement basis probabilities (Y takes the remainder).
struct ProtocolParams {
  double mu = 0.5;
  double nu = 0.1;
  double p_mu = 1.0 / 3.0;
  double p_nu = 1.0 / 3.0;
  double p_za_mu = 1.0 / 3.0;
  double p_xa_mu = 1.0 / 3.0;
  double p_za_nu = 1.0 / 3.0;
  double p_xa_nu = 1.0 / 3.0;
  double p_zb = 1.0 / 3.0;
  double p_xb = 1.0 / 3.0;

  double p_vacuum() const { return 1.0 - p_mu - p_nu; }
  double p_ya_mu() const { return 1.0 - p_za_mu - p_xa_mu; }
  double p_ya_nu() const { return 1.0 - p_za_nu - p_xa_nu; }
  double p_yb() const { return 1.0 - p_zb - p_xb; }

  /// Alice's basis probability conditioned on the signal (true) or decoy
  /// (false) intensity.
  double alice_basis_prob(bool signal, Basis b) const;
  double bob_basis_prob(Basis b) const;

  /// Joint sifting probability of a pair under the given intensity:
  /// P(basis_A | intensity) * P(basis_B).
  double pair_selection_prob(bool signal, BasisPair p) const {
    return alice_basis_prob(signal, alice_basis(p)) *
           bob_basis_prob(bob_basis(p));
  }
};

/// All probabilities strictly positive, intensity/basis sums strictly below
/// one, 0 < nu < mu <= 1, everything checked with margin 1e-6.
bool is_feasible(const ProtocolParams& p);

/// Reference configuration: all intensity and basis probabilities 1/3,
/// nu = 0.1, mu free.
ProtocolParams unbiased_protocol(double mu);

inline constexpr double kFeasibilityMargin = 1e-6;

}  // namespace rfiqkd

#endif
