#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "rfiqkd/channel.hpp"
#include "rfiqkd/errors.hpp"

using namespace rfiqkd;

TEST_CASE("transmittance follows exponential fiber loss") {
  const ChannelParams ch = reference_channel(0.0);
  CHECK(transmittance(ch, 0.0) == doctest::Approx(0.145).epsilon(1e-14));
  CHECK(transmittance(ch, 50.0) == doctest::Approx(0.0145).epsilon(1e-12));
  CHECK(transmittance(ch, 100.0) == doctest::Approx(0.00145).epsilon(1e-12));
  CHECK_THROWS_AS(transmittance(ch, -1.0), ValidationError);
}

TEST_CASE("drift angle folds into the first quadrant") {
  CHECK(reference_channel(0.0).beta_deg == doctest::Approx(0.0));
  CHECK(reference_channel(90.0).beta_deg == doctest::Approx(90.0));
  CHECK(reference_channel(100.0).beta_deg == doctest::Approx(80.0));
  CHECK(reference_channel(-30.0).beta_deg == doctest::Approx(30.0));
  CHECK(reference_channel(370.0).beta_deg == doctest::Approx(10.0));
  CHECK(reference_channel(180.0).beta_deg == doctest::Approx(0.0));
}

TEST_CASE("constructor validates physical ranges") {
  CHECK_THROWS_AS(ChannelParams(0.0, 3e-6, 0.015, 0.2, 0.0), ValidationError);
  CHECK_THROWS_AS(ChannelParams(1.2, 3e-6, 0.015, 0.2, 0.0), ValidationError);
  CHECK_THROWS_AS(ChannelParams(0.145, 1.0, 0.015, 0.2, 0.0), ValidationError);
  CHECK_THROWS_AS(ChannelParams(0.145, -1e-6, 0.015, 0.2, 0.0),
                  ValidationError);
  CHECK_THROWS_AS(ChannelParams(0.145, 3e-6, 0.5, 0.2, 0.0), ValidationError);
  CHECK_THROWS_AS(ChannelParams(0.145, 3e-6, 0.015, -0.1, 0.0),
                  ValidationError);
  CHECK_THROWS_AS(ChannelParams(0.145, 3e-6, 0.015, 0.2, INFINITY),
                  ValidationError);
  CHECK_NOTHROW(ChannelParams(1.0, 0.0, 0.0, 0.0, 0.0));
}

TEST_CASE("n-photon yield saturates with photon number") {
  const ChannelParams ch = reference_channel(0.0);
  const double t = transmittance(ch, 50.0);
  CHECK(n_photon_yield(ch, t, 0) == doctest::Approx(ch.y0).epsilon(1e-14));
  CHECK(n_photon_yield(ch, t, 1) ==
        doctest::Approx(1.0 - (1.0 - ch.y0) * (1.0 - t)).epsilon(1e-14));
  double prev = 0.0;
  for (unsigned n = 0; n <= 10; ++n) {
    const double yn = n_photon_yield(ch, t, n);
    CHECK(yn >= prev);
    CHECK(yn <= 1.0);
    prev = yn;
  }
}

TEST_CASE("single-photon error rates per basis pair") {
  const ChannelParams aligned = reference_channel(0.0);
  CHECK(single_photon_error(aligned, BasisPair::ZZ) == doctest::Approx(0.015));
  CHECK(single_photon_error(aligned, BasisPair::XX) == doctest::Approx(0.015));
  CHECK(single_photon_error(aligned, BasisPair::YY) == doctest::Approx(0.015));
  CHECK(single_photon_error(aligned, BasisPair::XY) == doctest::Approx(0.5));
  CHECK(single_photon_error(aligned, BasisPair::YX) == doctest::Approx(0.5));

  const ChannelParams drifted = reference_channel(10.0);
  CHECK(single_photon_error(drifted, BasisPair::ZZ) == doctest::Approx(0.015));
  CHECK(single_photon_error(drifted, BasisPair::XX) ==
        doctest::Approx(0.022368239789079147).epsilon(1e-12));
  CHECK(single_photon_error(drifted, BasisPair::XY) +
            single_photon_error(drifted, BasisPair::YX) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // the anticorrelated pair crosses 1/2 as soon as the frames drift
  CHECK(single_photon_error(drifted, BasisPair::YX) > 0.5);
}

TEST_CASE("coherent-pulse gain and error gain at the reference point") {
  const ChannelParams ch = reference_channel(0.0);
  CHECK(observed_gain(ch, 0.5, 50.0) ==
        doctest::Approx(0.0072267604767236593).epsilon(1e-13));
  CHECK(observed_error_gain(ch, 0.5, BasisPair::ZZ, 50.0) ==
        doctest::Approx(0.00010985673222105278).epsilon(1e-13));
}

TEST_CASE("closed-form gain matches the photon-number sum") {
  for (double beta : {0.0, 20.0}) {
    const ChannelParams ch = reference_channel(beta);
    for (double intensity : {0.1, 0.5, 1.0}) {
      for (double distance : {0.0, 50.0, 100.0}) {
        const double t = transmittance(ch, distance);
        CHECK(observed_gain(ch, intensity, distance) ==
              doctest::Approx(oracle::poisson_gain(ch.y0, t, intensity))
                  .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("simulated statistics table is consistent") {
  const ChannelParams ch = reference_channel(20.0);
  const ProtocolParams protocol;
  const ObservedStatistics stats = simulate_observations(ch, protocol, 50.0);
  CHECK(stats.q0 == doctest::Approx(ch.y0).epsilon(1e-14));
  for (bool signal : {true, false}) {
    for (BasisPair pair : kAllBasisPairs) {
      const double q = stats.gain(signal, pair);
      const double eq = stats.error_gain(signal, pair);
      CHECK(q > 0.0);
      CHECK(q <= 1.0);
      CHECK(eq >= 0.0);
      CHECK(eq <= q);
    }
  }
  // the signal intensity is brighter, so it clicks more often
  CHECK(stats.gain(true, BasisPair::ZZ) > stats.gain(false, BasisPair::ZZ));
  // gains do not depend on the basis pair, only errors do
  CHECK(stats.gain(true, BasisPair::ZZ) ==
        doctest::Approx(stats.gain(true, BasisPair::YX)).epsilon(1e-14));
  CHECK(stats.error_gain(true, BasisPair::YX) >
        stats.error_gain(true, BasisPair::XX));
}

TEST_CASE("simulation rejects infeasible protocol parameters") {
  ProtocolParams p;
  p.nu = 0.9;  // above mu
  CHECK_THROWS_AS(simulate_observations(reference_channel(0.0), p, 10.0),
                  ValidationError);
}
