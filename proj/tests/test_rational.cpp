// Tests for the rational-function method: exact-in-hbar accessory slices for
// the pole-residue cycles, their Laurent data, agreement of their hbar-Taylor
// coefficients with the residue-condition solver, and the terminating
// hbar-polynomial slices of an irregular case.

#include <catch2/catch_amalgamated.hpp>

#include "voros/rational_method.hpp"

using namespace voros;

namespace {
ParamRat pr(const std::string& s) { return parse_rat(s); }
}  // namespace

TEST_CASE("III3.t0 exact accessory slices and Laurent data") {
  RationalSolver rs(expansion_case("III3.t0"), 3);
  RationalExpansion rx = rs.run();
  CHECK(rx.G[0] == pr("-nu^2 + hbar^2/4"));
  CHECK(rx.G[1] == pr("-2/(4*nu^2 - hbar^2)"));
  CHECK(rx.G[2] ==
        pr("-(20*nu^2 + 7*hbar^2)/(2*(4*nu^2 - hbar^2)^3*(nu^2 - hbar^2))"));
  CHECK(rx.G[3] ==
        pr("-4*(144*nu^4 + 232*hbar^2*nu^2 + 29*hbar^4)"
           "/((4*nu^2 - hbar^2)^5*(4*nu^2 - 9*hbar^2)*(nu^2 - hbar^2))"));

  // Laurent coefficients of the slices S^[l] at X = 0 (lambda = nu/hbar + 1/2)
  CHECK(rs.S(0, -1) == pr("nu/hbar + 1/2"));
  CHECK(rs.S(0, 0) == pr("1/(hbar*(2*nu + hbar))"));
  CHECK(rs.S(0, 1) == pr("-1/(2*hbar*(nu + hbar)*(2*nu + hbar)^2)"));
  CHECK(rs.S(1, -1).is_zero());
  CHECK(rs.S(1, -2) == pr("1/(hbar*(2*nu - hbar))"));
  CHECK(rs.S(1, 0) == pr("1/(hbar*(2*nu + hbar)^3*(2*nu - hbar)*(nu + hbar))"));
  CHECK(rs.S(2, -3) == pr("-1/(2*hbar*(nu - hbar)*(2*nu - hbar)^2)"));
  CHECK(rs.S(2, -2) == pr("1/(hbar*(2*nu + hbar)*(nu - hbar)*(2*nu - hbar)^3)"));

  // coefficients beyond the per-slice budget are refused, not fabricated
  CHECK_THROWS_AS(rs.S(1, 3), InsufficientDepth);
}

TEST_CASE("VI.t0 exact accessory slices") {
  const std::string A = "(th0^2 + th1^2 + tht^2 + thinf^2)";
  const std::string B =
      "(-(th0^2 + th1^2 + tht^2 + thinf^2)^2"
      " + 2*(th0^2 - th1^2)*(tht^2 - thinf^2)"
      " + 2*(th0^2 - thinf^2)*(tht^2 - th1^2))";
  const std::string C =
      "((th0^2 - tht^2)^2*(th1^2 + thinf^2)"
      " + (th0^2 + tht^2)*(th1^2 - thinf^2)^2)";
  const std::string D = "((th0^2 - tht^2)^2*(th1^2 - thinf^2)^2)";
  const std::string P1 =
      "(16*(nu^4 - (th0^2 + th1^2 + 3*tht^2 - thinf^2)*nu^2"
      " + (th0^2 - tht^2)*(th1^2 - thinf^2))"
      " + 4*(2*nu^2 + th0^2 + th1^2 + 3*tht^2 - thinf^2)*hbar^2 - 3*hbar^4)";
  const std::string P2 =
      "(-3072*nu^10 + 2048*" + A + "*nu^8 - 1024*" + B + "*nu^6 - 6144*" + C +
      "*nu^4 + 5120*" + D + "*nu^2"
      " + (4864*nu^8 - 4096*" + A + "*nu^6 + 768*" + B + "*nu^4 + 3072*" + C +
      "*nu^2 + 1792*" + D + ")*hbar^2"
      " - (1920*nu^6 - 2304*" + A + "*nu^4 + 192*" + B + "*nu^2 + 384*" + C +
      ")*hbar^4"
      " + (96*nu^4 - 512*" + A + "*nu^2 + 16*" + B + ")*hbar^6"
      " + (68*nu^2 + 40*" + A + ")*hbar^8 - 9*hbar^10)";

  RationalExpansion rx = rational_solve("VI.t0", 2);
  CHECK(rx.G[0] == pr("nu^2 - th0^2 - tht^2 + hbar^2/4"));
  CHECK(rx.G[1] == pr("-" + P1 + "/(8*(4*nu^2 - hbar^2))"));
  CHECK(rx.G[2] == pr(P2 + "/(512*(4*nu^2 - hbar^2)^3*(nu^2 - hbar^2))"));
}

TEST_CASE("V.t0 exact accessory slices") {
  RationalExpansion rx = rational_solve("V.t0", 1);
  CHECK(rx.G[0] == pr("-nu^2 + th0^2 + tht^2 - hbar^2/4"));
  CHECK(rx.G[1] == pr("thinf*(-4*(nu^2 - th0^2 + tht^2) + hbar^2)"
                      "/(2*(4*nu^2 - hbar^2))"));
}

TEST_CASE("III1.t0 exact accessory slices") {
  const std::string P2 =
      "(-64*(nu^6 - 3*(th0^2 + thinf^2)*nu^4 + 5*th0^2*thinf^2*nu^2)"
      " + 16*(3*nu^4 - 6*(th0^2 + thinf^2)*nu^2 - 7*th0^2*thinf^2)*hbar^2"
      " - 12*(nu^2 - th0^2 - thinf^2)*hbar^4 + hbar^6)";
  RationalExpansion rx = rational_solve("III1.t0", 2);
  CHECK(rx.G[0] == pr("-nu^2 + hbar^2/4"));
  CHECK(rx.G[1] == pr("-2*th0*thinf/(4*nu^2 - hbar^2)"));
  CHECK(rx.G[2] == pr(P2 + "/(32*(4*nu^2 - hbar^2)^3*(nu^2 - hbar^2))"));
}

TEST_CASE("III2.t0 exact accessory slices") {
  RationalExpansion rx = rational_solve("III2.t0", 3);
  CHECK(rx.G[0] == pr("-nu^2 + hbar^2/4"));
  CHECK(rx.G[1] == pr("-2*thinf/(4*nu^2 - hbar^2)"));
  CHECK(rx.G[2] == pr("(48*nu^4 - (80*thinf^2 + 24*hbar^2)*nu^2"
                      " - (28*thinf^2*hbar^2 - 3*hbar^4))"
                      "/(8*(4*nu^2 - hbar^2)^3*(nu^2 - hbar^2))"));
  CHECK(rx.G[3] == pr("thinf*(448*nu^6 - 48*(12*thinf^2 - hbar^2)*nu^4"
                      " - 4*(232*thinf^2 + 27*hbar^2)*hbar^2*nu^2"
                      " - (116*hbar^4*thinf^2 - 17*hbar^6))"
                      "/((4*nu^2 - hbar^2)^5*(4*nu^2 - 9*hbar^2)"
                      "*(nu^2 - hbar^2))"));
}

TEST_CASE("hbar-Taylor of exact slices reproduces the residue solver") {
  struct Spec {
    const char* id;
    long K, L;
  };
  for (Spec s : {Spec{"VI.t0", 2, 1}, Spec{"V.t0", 2, 1}, Spec{"III1.t0", 2, 2},
                 Spec{"III2.t0", 2, 2}, Spec{"III3.t0", 2, 3}}) {
    INFO(s.id);
    const ExpansionCase& c = expansion_case(s.id);
    AccessoryExpansion ax = solve(c, s.K, s.L);
    RationalExpansion rx = rational_solve(c, s.L);
    for (long l = 0; l <= s.L; ++l) {
      INFO("l = " << l);
      std::vector<ParamRat> tc = rx.G[l].taylor(S_hbar, 2 * s.K);
      for (long k = 0; k <= s.K; ++k) CHECK(tc[2 * k] == ax.G(k, l));
      for (long j = 1; j <= 2 * s.K; j += 2) CHECK(tc[j].is_zero());
    }
  }
}

TEST_CASE("irregular case: terminating hbar-polynomial slices") {
  const ExpansionCase& c = expansion_case("III3.tinf");
  RationalExpansion rx = rational_solve(c, 4);
  CHECK(rx.G[0] == pr("2"));
  CHECK(rx.G[1] == pr("-2*nu"));
  CHECK(rx.G[2] == pr("(4*nu^2 + 9*hbar^2)/32"));
  CHECK(rx.G[3] == pr("(4*nu^3 + 3*hbar^2*nu)/512"));
  CHECK(rx.G[4] == pr("(80*nu^4 + 136*hbar^2*nu^2 + 9*hbar^4)/65536"));

  ESeries es = assemble_E(c, rx);
  REQUIRE(es.terms.size() == 5);
  CHECK(es.terms[0].first == Rat(1, 2));
  CHECK(es.terms[2].first == Rat(0));
  CHECK(es.terms[4].first == Rat(-1, 2));

  // the pole-residue recursion itself refuses an irregular cycle
  CHECK_THROWS_AS(RationalSolver(c, 2), CatalogMiss);
}
