#ifndef RFIQKD_SECURITY_HPP
#define RFIQKD_SECURITY_HPP

#include "rfiqkd/channel.hpp"
#include "rfiqkd/decoy.hpp"
#include "rfiqkd/protocol.hpp"

namespace rfiqkd {

enum class SecurityMode {
  // Privacy term 1 - I_E with Eve's information computed from the
  // frame-drift correlator. Default.
  RfiEveInfo,
  // Privacy term 1 - H(e1_ZZ) using the key-pair error ceiling alone,
  // ignoring the correlator. Kept selectable for auditing the difference.
  RfiLiteral,
  // Z/X-only protocol whose both bases suffer the frame rotation.
  Bb84,
};

struct SecurityConfig {
  double f = defaults::kReconciliationEfficiency;  // >= 1
  SecurityMode mode = SecurityMode::RfiEveInfo;

  SecurityConfig() = default;
  SecurityConfig(double f, SecurityMode mode);
};

/// Key rate with every intermediate needed to audit it. For the Z/X-only
/// mode c_value/phi/varphi are not defined and reported as zero, i_e is the
/// privacy entropy H(e1) of the X-pair ceiling, and e1_privacy_upper echoes
/// that ceiling; for the frame-independent modes e1_privacy_upper echoes the
/// ZZ ceiling.
struct KeyRateReport {
  double rate = 0.0;  // secret bits per pulse, >= 0
  bool no_key = false;

  double c_value = 0.0;
  double phi = 0.0;
  double varphi = 0.0;
  double i_e = 0.0;

  double y1_zz_lower = 0.0;
  double e1_privacy_upper = 0.0;
  double q_mu_zz = 0.0;
  double e_mu_zz = 0.0;  // signal-pulse QBER in the key pair
};

/// H(x) = -x log2 x - (1-x) log2(1-x), continuous at the endpoints.
double binary_entropy(double x);

/// Frame-drift correlator: sum of (1 - 2 e1)^2 over the four X/Y pairs.
/// Accepts raw error rates in [0, 1]; values above 1/2 (anticorrelated
/// pairs) enter through the square like their mirror below 1/2.
double compute_c(double e1_xx, double e1_xy, double e1_yx, double e1_yy);
double compute_c(const SinglePhotonBounds& bounds);

/// Eve's information per single-photon key bit, from the ZZ error ceiling
/// and the correlator value:
///   I_E = (1 - e) H((1 + phi)/2) + e H((1 + varphi)/2)
/// with phi = min(sqrt(C/2)/(1 - e), 1) and, when phi saturates at 1,
/// varphi = sqrt(C/2 - (1 - e)^2)/e (else exactly 0).
double eve_information(double e1_zz, double c_value);

/// Secret key rate of the frame-independent protocol:
///   P_mu P(Z_A|mu) P(Z_B) { -f Qmu_ZZ H(Emu_ZZ)
///                           + mu e^-mu Y1^L [privacy] }
/// where privacy is 1 - I_E (RfiEveInfo) or 1 - H(e1_ZZ) (RfiLiteral).
/// Negative raw rates are reported as 0 with the no_key flag.
KeyRateReport rfi_key_rate(const ProtocolParams& protocol,
                           const ObservedStatistics& stats,
                           const SinglePhotonBounds& bounds,
                           const SecurityConfig& sec);

/// Same rate structure for the Z/X-only protocol. Both of its bases are
/// rotated by beta, so the key-pair observables are read from the XX entries
/// (whose single-photon error is exactly the rotated-Z error) and the
/// privacy term uses the XX error ceiling.
KeyRateReport bb84_key_rate(const ProtocolParams& protocol,
                            const ObservedStatistics& stats,
                            const SinglePhotonBounds& bounds,
                            const SecurityConfig& sec);

}  // namespace rfiqkd

#endif
