#include "rfiqkd/fluctuation.hpp"

#include <algorithm>
#include <cmath>

#include "rfiqkd/errors.hpp"

namespace rfiqkd {

namespace {

void check_central(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ValidationError(std::string(what) +
                          " must be a probability in [0, 1]");
  }
}

// Relative half-width gamma / sqrt(n_eff * value).
double relative_width(double value, double n_eff, double gamma) {
  if (!(gamma >= 0.0)) throw ValidationError("gamma must be nonnegative");
  if (gamma == 0.0) return 0.0;
  if (value <= 0.0) {
    throw NumericalError(
        "zero-observation: relative fluctuation bound undefined for a "
        "never-observed quantity");
  }
  if (!(n_eff > 0.0)) {
    throw NumericalError("effective count must be positive");
  }
  return gamma / std::sqrt(n_eff * value);
}

}  // namespace

FluctuationConfig::FluctuationConfig(double n_pulses_, double gamma_)
    : n_pulses(n_pulses_), gamma(gamma_) {
  if (!(n_pulses >= 1.0)) {
    throw ValidationError("total pulse count must be at least 1");
  }
  if (!(gamma >= 0.0)) {
    throw ValidationError("gamma must be nonnegative");
  }
}

double effective_count(const FluctuationConfig& config, double selection_prob) {
  if (!(selection_prob > 0.0)) {
    throw NumericalError(
        "degenerate-selection: observable has zero selection probability");
  }
  if (selection_prob > 1.0) {
    throw ValidationError("selection probability must not exceed 1");
  }
  return config.n_pulses * selection_prob;
}

double gain_upper(double q, double n_eff, double gamma) {
  check_central(q, "gain");
  if (gamma == 0.0) return q;
  const double w = relative_width(q, n_eff, gamma);
  return std::min(1.0, q * (1.0 + w));
}

double gain_lower(double q, double n_eff, double gamma) {
  check_central(q, "gain");
  if (gamma == 0.0) return q;
  const double w = relative_width(q, n_eff, gamma);
  return std::max(0.0, q * (1.0 - w));
}

double error_gain_upper(double eq, double n_eff, double gamma) {
  check_central(eq, "error-gain");
  if (gamma == 0.0) return eq;
  const double w = relative_width(eq, n_eff, gamma);
  return std::min(1.0, eq * (1.0 + w));
}

BoundedValue vacuum_bounds(double q0, const FluctuationConfig& config,
                           double p_vacuum) {
  check_central(q0, "vacuum gain");
  if (!(p_vacuum > 0.0 && p_vacuum < 1.0)) {
    throw ValidationError("no-vacuum-pulses: vacuum probability must lie in (0, 1)");
  }
  if (config.asymptotic()) return BoundedValue{q0, q0, q0};
  const double n_eff = effective_count(config, p_vacuum);
  const double w = relative_width(q0, n_eff, config.gamma);
  return BoundedValue{q0, std::max(0.0, q0 * (1.0 - w)),
                      std::min(1.0, q0 * (1.0 + w))};
}

}  // namespace rfiqkd
