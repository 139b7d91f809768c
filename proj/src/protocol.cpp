#include "rfiqkd/protocol.hpp"

#include <cmath>

namespace rfiqkd {

double ProtocolParams::alice_basis_prob(bool signal, Basis b) const {
  const double pz = signal ? p_za_mu : p_za_nu;
  const double px = signal ? p_xa_mu : p_xa_nu;
  switch (b) {
    case Basis::Z: return pz;
    case Basis::X: return px;
    default: return 1.0 - pz - px;
  }
}

double ProtocolParams::bob_basis_prob(Basis b) const {
  switch (b) {
    case Basis::Z: return p_zb;
    case Basis::X: return p_xb;
    default: return 1.0 - p_zb - p_xb;
  }
}

bool is_feasible(const ProtocolParams& p) {
  const double m = kFeasibilityMargin;
  const double vals[] = {p.mu,      p.nu,      p.p_mu,    p.p_nu,
                         p.p_za_mu, p.p_xa_mu, p.p_za_nu, p.p_xa_nu,
                         p.p_zb,    p.p_xb};
  for (double v : vals) {
    if (!std::isfinite(v)) return false;
  }
  if (p.nu < m) return false;
  if (p.mu - p.nu < m) return false;
  if (p.mu > 1.0) return false;
  if (p.p_mu < m || p.p_nu < m || p.p_vacuum() < m) return false;
  if (p.p_za_mu < m || p.p_xa_mu < m || p.p_ya_mu() < m) return false;
  if (p.p_za_nu < m || p.p_xa_nu < m || p.p_ya_nu() < m) return false;
  if (p.p_zb < m || p.p_xb < m || p.p_yb() < m) return false;
  return true;
}

ProtocolParams unbiased_protocol(double mu) {
  ProtocolParams p;
  p.mu = mu;
  p.nu = 0.1;
  return p;
}

}  // namespace rfiqkd
