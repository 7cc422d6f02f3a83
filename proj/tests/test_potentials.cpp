#include <catch2/catch_amalgamated.hpp>

#include "voros/potentials.hpp"

using namespace voros;

TEST_CASE("all nine potentials are hbar-homogeneous of weight -2") {
  for (EqId id : all_equations()) {
    const PotentialSpec& ps = potential(id);
    CHECK_NOTHROW(verify_scaling(ps));
  }
}

TEST_CASE("every potential carries the accessory parameter exactly once") {
  for (EqId id : all_equations()) {
    int n = 0;
    for (auto& t : potential(id).terms)
      if (t.has_E) ++n;
    CHECK(n == 1);
  }
}

TEST_CASE("corrupted weight tables are rejected") {
  PotentialSpec ps = potential(EqId::V);
  ps.w.aE = Rat(-1);
  CHECK_THROWS_AS(verify_scaling(ps), ScalingMismatch);

  PotentialSpec ps2 = potential(EqId::I);
  ps2.terms[0].coeff = detail::pp("5");  // 4x^3 -> 5x^3 keeps homogeneity
  CHECK_NOTHROW(verify_scaling(ps2));    // (weights are blind to constants)
  ps2.terms[1].tpow = 2;                 // ...but not to t-powers
  CHECK_THROWS_AS(verify_scaling(ps2), ScalingMismatch);

  PotentialSpec ps3 = potential(EqId::VI);
  ps3.w.ax = Rat(-1);                    // x-1 stops being scale covariant
  CHECK_THROWS_AS(verify_scaling(ps3), ScalingMismatch);
}
