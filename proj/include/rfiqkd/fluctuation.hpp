#ifndef RFIQKD_FLUCTUATION_HPP
#define RFIQKD_FLUCTUATION_HPP

namespace rfiqkd {

/// Finite-size setting: total pulses sent and the confidence width in
/// standard deviations. gamma = 0 selects the asymptotic regime where every
/// bound collapses to its central value.
struct FluctuationConfig {
  double n_pulses;
  double gamma;

  FluctuationConfig(double n_pulses, double gamma);

  bool asymptotic() const { return gamma == 0.0; }
};

struct BoundedValue {
  double central;
  double lower;  // clamped at 0
  double upper;  // capped at 1
};

/// Expected number of pulses routed to one observable: N * selection_prob.
/// A zero selection probability means the observable was never sampled and
/// is rejected.
double effective_count(const FluctuationConfig& config, double selection_prob);

/// q * (1 + gamma / sqrt(n_eff * q)), capped at 1. Relative-width Gaussian
/// bound; q = 0 with gamma > 0 is rejected because the width divides by
/// sqrt(q).
double gain_upper(double q, double n_eff, double gamma);

/// Mirror of gain_upper with subtraction, clamped at 0.
double gain_lower(double q, double n_eff, double gamma);

/// Same functional form applied to the error-gain product.
double error_gain_upper(double eq, double n_eff, double gamma);

/// Lower/upper bounds for the vacuum gain with effective count
/// N * p_vacuum.
BoundedValue vacuum_bounds(double q0, const FluctuationConfig& config,
                           double p_vacuum);

}  // namespace rfiqkd

#endif
