#pragma once

// Independent slow-path references used to cross-check the closed-form
// library results. Everything here is computed the brute-force way on
// purpose; keep it free of library includes.

#include <algorithm>
#include <cmath>

namespace oracle {

// Poisson-averaged detection probability accumulated term by term from the
// n-photon yields, truncated at n = 40 (tail < 1e-40 for intensity <= 1).
inline double poisson_gain(double y0, double t, double intensity) {
  double sum = 0.0;
  double weight = std::exp(-intensity);
  for (int n = 0; n <= 40; ++n) {
    const double yield_n = 1.0 - (1.0 - y0) * std::pow(1.0 - t, n);
    sum += weight * yield_n;
    weight *= intensity / (n + 1);
  }
  return sum;
}

inline double y1_true(double y0, double t) {
  return 1.0 - (1.0 - y0) * (1.0 - t);
}

// True single-photon error rate: dark counts give random bits, transmitted
// photons err with the pair's intrinsic probability.
inline double e1_true(double y0, double t, double e_pair) {
  return (0.5 * y0 + e_pair * t) / y1_true(y0, t);
}

// Error rates above 1/2 describe an anticorrelated pair; the informative
// distance from randomness is min(e, 1 - e).
inline double folded(double e) { return std::min(e, 1.0 - e); }

}  // namespace oracle
