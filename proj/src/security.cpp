#include "rfiqkd/security.hpp"

#include <algorithm>
#include <cmath>

#include "rfiqkd/errors.hpp"

namespace rfiqkd {

SecurityConfig::SecurityConfig(double f_, SecurityMode mode_)
    : f(f_), mode(mode_) {
  if (!(f >= 1.0)) {
    throw ValidationError("reconciliation efficiency must be at least 1");
  }
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError("binary entropy argument must lie in [0, 1]");
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

namespace {

void check_error_rate(double e, const char* what) {
  if (!(e >= 0.0 && e <= 1.0)) {  // NaN fails too: incomplete bounds
    throw ValidationError(std::string("incomplete-bounds: ") + what +
                          " must be a probability in [0, 1]");
  }
}

double correlator_term(double e) { return (1.0 - 2.0 * e) * (1.0 - 2.0 * e); }

}  // namespace

double compute_c(double e1_xx, double e1_xy, double e1_yx, double e1_yy) {
  check_error_rate(e1_xx, "XX error bound");
  check_error_rate(e1_xy, "XY error bound");
  check_error_rate(e1_yx, "YX error bound");
  check_error_rate(e1_yy, "YY error bound");
  return correlator_term(e1_xx) + correlator_term(e1_xy) +
         correlator_term(e1_yx) + correlator_term(e1_yy);
}

double compute_c(const SinglePhotonBounds& bounds) {
  return compute_c(bounds.e1(BasisPair::XX), bounds.e1(BasisPair::XY),
                   bounds.e1(BasisPair::YX), bounds.e1(BasisPair::YY));
}

namespace {

struct EveTerms {
  double phi;
  double varphi;
  double i_e;
};

EveTerms eve_terms(double e1_zz, double c_value) {
  if (!(e1_zz >= 0.0 && e1_zz <= 0.5)) {
    throw ValidationError("key-pair error bound must lie in [0, 0.5]");
  }
  if (!(c_value >= 0.0 && c_value <= 4.0)) {
    throw ValidationError("correlator value must lie in [0, 4]");
  }
  const double one_minus_e = 1.0 - e1_zz;
  const double s = std::sqrt(c_value / 2.0);
  const double phi = std::min(s / one_minus_e, 1.0);
  double varphi = 0.0;
  if (phi >= 1.0 && e1_zz > 0.0) {
    // Below saturation the definition makes varphi identically zero.
    double inner = c_value / 2.0 - one_minus_e * one_minus_e;
    if (inner < -1e-12) {
      throw NumericalError("internal-inconsistency in varphi radicand");
    }
    inner = std::max(inner, 0.0);
    varphi = std::min(std::sqrt(inner) / e1_zz, 1.0);
  }
  const double i_e = one_minus_e * binary_entropy((1.0 + phi) / 2.0) +
                     e1_zz * binary_entropy((1.0 + varphi) / 2.0);
  return EveTerms{phi, varphi, i_e};
}

KeyRateReport assemble_report(const ProtocolParams& protocol, double q_mu,
                              double e_mu, double y1, double e1_privacy,
                              double privacy_term, const SecurityConfig& sec) {
  const double prefactor = protocol.p_mu * protocol.p_za_mu * protocol.p_zb;
  const double ec_cost = sec.f * q_mu * binary_entropy(e_mu);
  const double gain_term =
      protocol.mu * std::exp(-protocol.mu) * y1 * privacy_term;
  const double raw = prefactor * (gain_term - ec_cost);

  KeyRateReport report;
  report.rate = std::max(raw, 0.0);
  report.no_key = raw <= 0.0;
  report.y1_zz_lower = y1;
  report.e1_privacy_upper = e1_privacy;
  report.q_mu_zz = q_mu;
  report.e_mu_zz = e_mu;
  return report;
}

}  // namespace

double eve_information(double e1_zz, double c_value) {
  return eve_terms(e1_zz, c_value).i_e;
}

KeyRateReport rfi_key_rate(const ProtocolParams& protocol,
                           const ObservedStatistics& stats,
                           const SinglePhotonBounds& bounds,
                           const SecurityConfig& sec) {
  const double q_mu = stats.gain(true, BasisPair::ZZ);
  const double e_mu =
      q_mu > 0.0
          ? std::clamp(stats.error_gain(true, BasisPair::ZZ) / q_mu, 0.0, 1.0)
          : 0.0;
  const double e1_zz = bounds.e1(BasisPair::ZZ);
  const double c = compute_c(bounds);
  const EveTerms eve = eve_terms(e1_zz, c);

  const double privacy = sec.mode == SecurityMode::RfiLiteral
                             ? 1.0 - binary_entropy(e1_zz)
                             : 1.0 - eve.i_e;
  KeyRateReport report =
      assemble_report(protocol, q_mu, e_mu, bounds.y1_zz_lower, e1_zz,
                      privacy, sec);
  report.c_value = c;
  report.phi = eve.phi;
  report.varphi = eve.varphi;
  report.i_e = eve.i_e;
  return report;
}

KeyRateReport bb84_key_rate(const ProtocolParams& protocol,
                            const ObservedStatistics& stats,
                            const SinglePhotonBounds& bounds,
                            const SecurityConfig& sec) {
  // The rotated Z pair has the same statistics as the XX pair, whose
  // single-photon error already carries cos(beta).
  const double q_mu = stats.gain(true, BasisPair::XX);
  const double e_mu =
      q_mu > 0.0
          ? std::clamp(stats.error_gain(true, BasisPair::XX) / q_mu, 0.0, 1.0)
          : 0.0;
  const double e1_xx = bounds.e1(BasisPair::XX);
  const double privacy = 1.0 - binary_entropy(e1_xx);

  KeyRateReport report = assemble_report(protocol, q_mu, e_mu,
                                         bounds.y1_zz_lower, e1_xx, privacy,
                                         sec);
  report.i_e = binary_entropy(e1_xx);
  return report;
}

}  // namespace rfiqkd
