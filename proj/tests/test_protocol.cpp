#include <cmath>

#include "doctest.h"
#include "rfiqkd/protocol.hpp"

using namespace rfiqkd;

TEST_CASE("default parameters are the uniform configuration") {
  ProtocolParams p;
  CHECK(is_feasible(p));
  CHECK(p.mu == doctest::Approx(0.5));
  CHECK(p.nu == doctest::Approx(0.1));
  CHECK(p.p_vacuum() == doctest::Approx(1.0 / 3.0));
  CHECK(p.p_ya_mu() == doctest::Approx(1.0 / 3.0));
  CHECK(p.p_ya_nu() == doctest::Approx(1.0 / 3.0));
  CHECK(p.p_yb() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("basis probabilities split by intensity") {
  ProtocolParams p;
  p.p_za_mu = 0.80;
  p.p_xa_mu = 0.15;
  p.p_za_nu = 0.20;
  p.p_xa_nu = 0.70;
  p.p_zb = 0.75;
  p.p_xb = 0.20;
  CHECK(p.alice_basis_prob(true, Basis::Z) == 0.80);
  CHECK(p.alice_basis_prob(true, Basis::X) == 0.15);
  CHECK(p.alice_basis_prob(true, Basis::Y) == doctest::Approx(0.05));
  CHECK(p.alice_basis_prob(false, Basis::Z) == 0.20);
  CHECK(p.alice_basis_prob(false, Basis::X) == 0.70);
  CHECK(p.bob_basis_prob(Basis::Z) == 0.75);
  CHECK(p.bob_basis_prob(Basis::Y) == doctest::Approx(0.05));

  CHECK(p.pair_selection_prob(true, BasisPair::ZZ) ==
        doctest::Approx(0.80 * 0.75));
  CHECK(p.pair_selection_prob(false, BasisPair::XY) ==
        doctest::Approx(0.70 * 0.05));
  CHECK(p.pair_selection_prob(true, BasisPair::YX) ==
        doctest::Approx(0.05 * 0.20));
}

TEST_CASE("feasibility rejects degenerate points") {
  const ProtocolParams ok;
  REQUIRE(is_feasible(ok));

  ProtocolParams p = ok;
  p.nu = p.mu;
  CHECK_FALSE(is_feasible(p));

  p = ok;
  p.mu = 1.1;
  CHECK_FALSE(is_feasible(p));

  p = ok;
  p.nu = -0.1;
  CHECK_FALSE(is_feasible(p));

  p = ok;
  p.p_mu = 0.7;
  p.p_nu = 0.3;  // vacuum weight collapses to 0
  CHECK_FALSE(is_feasible(p));

  p = ok;
  p.p_za_mu = 0.0;
  CHECK_FALSE(is_feasible(p));

  p = ok;
  p.p_zb = 0.9;  // Bob's Y weight goes negative
  CHECK_FALSE(is_feasible(p));

  p = ok;
  p.p_xb = std::nan("");
  CHECK_FALSE(is_feasible(p));
}

TEST_CASE("feasibility margin is respected at the boundary") {
  ProtocolParams p;
  p.p_mu = 0.5;
  p.p_nu = 0.5 - 2.0 * kFeasibilityMargin;
  CHECK(is_feasible(p));
  p.p_nu = 0.5 - 0.5 * kFeasibilityMargin;
  CHECK_FALSE(is_feasible(p));
}

TEST_CASE("unbiased reference point") {
  const ProtocolParams p = unbiased_protocol(0.42);
  CHECK(p.mu == 0.42);
  CHECK(p.nu == doctest::Approx(0.1));
  CHECK(p.p_mu == doctest::Approx(1.0 / 3.0));
  CHECK(p.p_nu == doctest::Approx(1.0 / 3.0));
  CHECK(p.p_za_mu == doctest::Approx(1.0 / 3.0));
  CHECK(p.p_xa_nu == doctest::Approx(1.0 / 3.0));
  CHECK(p.p_zb == doctest::Approx(1.0 / 3.0));
  CHECK(is_feasible(p));
}
