#include <catch2/catch_amalgamated.hpp>

#include "voros/rescale.hpp"

using namespace voros;

static ParamRat sy(int s) { return ParamRat::sym(s); }

TEST_CASE("every registered case rescales cleanly in every frame") {
  // expected sigma per case id (variants share their parent's value)
  std::map<std::string, int> sig = {
      {"VI.t0", 0},    {"V.t0", 0},      {"V.tinf1", 0},  {"V.tinf2", 1},
      {"IV.tinf1", 0}, {"IV.tinf2", 1},  {"III1.t0", 0},  {"III1.tinf", 1},
      {"III2.t0", 0},  {"III2.tinf", 1}, {"III3.t0", 0},  {"III3.tinf", 1},
      {"II.tinf1", 1}, {"II.tinf2", 1},  {"IIp.tinf1", 0}, {"IIp.tinf2", 1},
      {"I.tinf", 1}};
  for (const ExpansionCase& c : case_registry()) {
    INFO(c.id);
    for (const Frame& fr : cycle_frames(c)) {
      RescaledPotential rp = rescale_potential(c, fr, 5, 12);
      std::string key = c.variant_of.empty() ? c.id : c.variant_of;
      CHECK(rp.sigma == sig.at(key));
    }
  }
}

TEST_CASE("III3.tinf rescale: Q^res = 1/X^3 - G/X^2 + 1/X") {
  const ExpansionCase& c = expansion_case("III3.tinf");
  Frame fr = cycle_frames(c)[0];
  RescaledPotential rp = rescale_potential(c, fr, 4, 10);
  CHECK(rp.w == Rat(1, 2));
  // A is Lam-independent: slices >= 1 all zero
  for (int l = 1; l <= 4; ++l) CHECK(rp.A.coeff(l).known_zero());
  CHECK(rp.B.coeff(0).known_zero());
  // C = -1/X^2 = -(1+u)^{-2} at u = X-1
  XSeries c0 = rp.C.coeff(0);
  CHECK(c0.coeff(0) == ParamRat(-1));
  CHECK(c0.coeff(1) == ParamRat(2));
  CHECK(c0.coeff(2) == ParamRat(-3));
  // limiting curve (X-1)^2/X^3 = u^2 (1+u)^{-3}
  CHECK(rp.limit0.floor() == Rat(2));
  CHECK(rp.limit0.coeff(2) == ParamRat(1));
  CHECK(rp.limit0.coeff(3) == ParamRat(-3));
}

TEST_CASE("VI.t0 rescale: no extraction, double pole of strength nu^2") {
  const ExpansionCase& c = expansion_case("VI.t0");
  Frame fr = cycle_frames(c)[0];
  RescaledPotential rp = rescale_potential(c, fr, 4, 10);
  CHECK(rp.w == Rat(0));
  CHECK(rp.sigma == 0);
  // leading of the classical slice: (th0^2 + tht^2 + G00)/u^2 = nu^2/u^2
  CHECK(rp.limit0.floor() == Rat(-2));
  CHECK(rp.limit0.coeff(-2) == sy(S_nu) * sy(S_nu));
  // hbar^2 corrections present: B slice 0 leading -1/4 - 1/4 = -1/2 at u^-2
  CHECK(rp.B.coeff(0).coeff(-2) == ParamRat(Rat(-1, 2)));
  // C slice 0 = -1/(u^2 (u-1)) = (1/u^2) (1 + u + u^2 + ...)
  XSeries c0 = rp.C.coeff(0);
  CHECK(c0.coeff(-2) == ParamRat(1));
  CHECK(c0.coeff(-1) == ParamRat(1));
  // the x-t double pole feeds tht^2 * (j+1) u^{-2-j} Lam^j
  CHECK(rp.A.coeff(1).coeff(-3) == sy(S_tht) * sy(S_tht) * 2);
}

TEST_CASE("III1.tinf rescale in the frame at X = i") {
  const ExpansionCase& c = expansion_case("III1.tinf");
  auto frames = cycle_frames(c);
  REQUIRE(frames.size() == 2);
  RescaledPotential rp = rescale_potential(c, frames[0], 4, 10);
  CHECK(rp.sigma == 1);
  // slice 1 = th0/X^3 + thinf/X at X = i + u: value at u=0 is i th0 - i thinf
  ParamRat I{AlgConst::gen_i()};
  CHECK(rp.A.coeff(1).coeff(0) == I * sy(S_th0) - I * sy(S_thinf));
  // limiting curve (X^2+1)^2/(4X^4): double zero in both frames
  CHECK(rp.limit0.floor() == Rat(2));
  RescaledPotential rm = rescale_potential(c, frames[1], 4, 10);
  CHECK(rm.limit0.floor() == Rat(2));
  // (X^2+1)^2/(4X^4) = u^2(2i+u)^2/(4(i+u)^4): coeff u^2 = (2i)^2/(4 i^4) = -1
  CHECK(rp.limit0.coeff(2) == ParamRat(-1));
}

TEST_CASE("IV.tinf1 rescale at infinity") {
  const ExpansionCase& c = expansion_case("IV.tinf1");
  Frame fr = cycle_frames(c)[0];
  REQUIRE(fr.kind == FrameKind::AtInfinity);
  RescaledPotential rp = rescale_potential(c, fr, 4, 10);
  CHECK(rp.sigma == 0);
  // Q^res = th0^2/X^2 - G/X + 2 thinf Lam + (Lam X + 1)^2, u = 1/X
  CHECK(rp.A.coeff(0).coeff(0) == ParamRat(1));
  CHECK(rp.A.coeff(0).coeff(2) == sy(S_th0) * sy(S_th0));
  CHECK(rp.A.coeff(1).coeff(0) == sy(S_thinf) * 2);
  CHECK(rp.A.coeff(1).coeff(-1) == ParamRat(2));  // 2 Lam X
  CHECK(rp.A.coeff(2).coeff(-2) == ParamRat(1));  // Lam^2 X^2
  CHECK(rp.C.coeff(0).coeff(1) == ParamRat(-1));  // -G/X
}

TEST_CASE("IIp.tinf2 rescale: the th0 term enters at Lam^2") {
  const ExpansionCase& c = expansion_case("IIp.tinf2");
  Frame fr = cycle_frames(c)[0];
  RescaledPotential rp = rescale_potential(c, fr, 4, 10);
  CHECK(rp.sigma == 1);
  CHECK(rp.A.coeff(1).known_zero());
  // th0^2 Lam^2 / X^2 at u = X + 1/2: value 4 th0^2 at u = 0
  CHECK(rp.A.coeff(2).coeff(0) == sy(S_th0) * sy(S_th0) * 4);
  // limit (X+1/2)^2/X: coeff u^2 of u^2/(u - 1/2) ... = -2
  CHECK(rp.limit0.floor() == Rat(2));
  CHECK(rp.limit0.coeff(2) == ParamRat(-2));
}

TEST_CASE("II.tinf2 and I.tinf limiting curves") {
  {
    RescaledPotential rp = rescale_potential(
        expansion_case("II.tinf2"), cycle_frames(expansion_case("II.tinf2"))[0],
        4, 10);
    // X^2 (X^2 + 2): coeff u^2 = 2
    CHECK(rp.limit0.floor() == Rat(2));
    CHECK(rp.limit0.coeff(2) == ParamRat(2));
  }
  {
    RescaledPotential rp = rescale_potential(
        expansion_case("I.tinf"), cycle_frames(expansion_case("I.tinf"))[0], 4,
        10);
    // 4(X-q)^2(X+2q): coeff u^2 = 12 q
    CHECK(rp.limit0.floor() == Rat(2));
    CHECK(rp.limit0.coeff(2) == ParamRat(AlgConst::gen_q() * AlgConst(12)));
  }
}

TEST_CASE("corrupted scaling data is rejected") {
  ExpansionCase c = expansion_case("III3.tinf");
  c.dx = Rat(1, 3);  // breaks the integrality of the combined exponents
  CHECK_THROWS_AS(rescale_potential(c, cycle_frames(c)[0], 4, 10),
                  ScalingDegreeError);
  ExpansionCase c2 = expansion_case("III3.tinf");
  c2.g00 = parse_rat("3");  // not a double zero of the limiting curve
  CHECK_THROWS_AS(rescale_potential(c2, cycle_frames(c2)[0], 4, 10),
                  DegenerationError);
}
