#include <catch2/catch_amalgamated.hpp>

#include "voros/textform.hpp"

using namespace voros;

static ParamRat P(const std::string& s) { return parse_rat(s); }

TEST_CASE("surd tower relations") {
  AlgConst i = AlgConst::gen_i(), s2 = AlgConst::gen_sqrt2(),
           s3 = AlgConst::gen_sqrt3(), p = AlgConst::gen_p(),
           c3 = AlgConst::gen_cbrt2(), q = AlgConst::gen_q();
  CHECK(i * i == AlgConst(-1));
  CHECK(s2 * s2 == AlgConst(2));
  CHECK(s3 * s3 == AlgConst(3));
  CHECK(c3 * c3 * c3 == AlgConst(2));
  CHECK(q * q == AlgConst(Rat(-1, 6)));
  CHECK(p * p == q * AlgConst(3));
  CHECK(p * p * p * p == q * q * AlgConst(9));
}

TEST_CASE("surd inverses") {
  AlgConst i = AlgConst::gen_i(), s2 = AlgConst::gen_sqrt2(),
           p = AlgConst::gen_p(), c3 = AlgConst::gen_cbrt2();
  auto check_inv = [](const AlgConst& x) { CHECK(x * x.inverse() == AlgConst(1)); };
  check_inv(s2);
  check_inv(p);
  check_inv(c3);
  check_inv(i * s2 * c3);
  check_inv(AlgConst(1) + s2);                       // 1/(1+sqrt2) = sqrt2-1
  CHECK((AlgConst(1) + s2).inverse() == s2 - AlgConst(1));
  check_inv(AlgConst(1) + i);
  check_inv(AlgConst(3) + s2 * AlgConst(5) + c3 + p * AlgConst(Rat(2, 7)));
}

TEST_CASE("surd square roots") {
  AlgConst s2 = AlgConst::gen_sqrt2(), s3 = AlgConst::gen_sqrt3(),
           p = AlgConst::gen_p(), c3 = AlgConst::gen_cbrt2(),
           q = AlgConst::gen_q();
  CHECK(AlgConst(4).sqrt() == AlgConst(2));
  CHECK(AlgConst(Rat(9, 4)).sqrt() == AlgConst(Rat(3, 2)));
  CHECK(AlgConst(2).sqrt() == s2);
  CHECK((q * AlgConst(3)).sqrt() == p);
  CHECK((q * AlgConst(12)).sqrt() == p * AlgConst(2));
  CHECK((q * AlgConst(6)).sqrt() == p * s2);
  // sqrt(3*2^{1/3}/8) = sqrt3 * 2^{2/3} / 4
  CHECK((c3 * AlgConst(Rat(3, 8))).sqrt() == s3 * c3 * c3 * AlgConst(Rat(1, 4)));
  CHECK((AlgConst(-1)).sqrt() == AlgConst::gen_i());
  CHECK_THROWS_AS((AlgConst(1) + s2).sqrt(), BranchError);
}

TEST_CASE("polynomial arithmetic and division") {
  ParamRat nu = ParamRat::sym(S_nu), hb = ParamRat::sym(S_hbar);
  ParamRat a = (nu * 2 - hb) * (nu * 2 + hb);
  CHECK(a == nu * nu * 4 - hb * hb);
  // quotient of exactly divisible polynomials collapses to a polynomial
  ParamRat r = a / (nu * 2 - hb);
  CHECK(r.is_poly());
  CHECK(r == nu * 2 + hb);
  CHECK(a / a == ParamRat(1));
  // cancellation through addition
  ParamRat s = ParamRat(1) / (nu - hb) - ParamRat(1) / (nu + hb);
  CHECK(s == (hb * 2) / ((nu - hb) * (nu + hb)));
}

TEST_CASE("spec cancellation example") {
  CHECK(P("(4*nu^2 - hbar^2)/((2*nu - hbar)*(2*nu + hbar))") == ParamRat(1));
}

TEST_CASE("canonical text round-trip") {
  std::string s = "(-20*nu^2 - 7*hbar^2)/(2*(4*nu^2 - hbar^2)^3*(nu^2 - hbar^2))";
  ParamRat x = P(s);
  CHECK(ratfun_str(x) == s);
  CHECK(P(ratfun_str(x)) == x);
  // and on a few more shapes
  for (const char* t : {"0", "1", "-1/2", "nu", "nu^2 - hbar^2",
                        "(2*nu + hbar)/(2*(nu - hbar))",
                        "-nu/(4*(nu^2 - hbar^2)^2)"}) {
    ParamRat y = P(t);
    CHECK(P(ratfun_str(y)) == y);
  }
}

TEST_CASE("substitution and taylor expansion") {
  ParamRat nu = ParamRat::sym(S_nu), hb = ParamRat::sym(S_hbar);
  ParamRat f = ParamRat(1) / (nu - hb);
  auto tc = f.taylor(S_hbar, 3);
  for (int k = 0; k <= 3; ++k) {
    ParamRat expect = ParamRat(1);
    for (int j = 0; j <= k; ++j) expect = expect / nu;
    CHECK(tc[k] == expect);
  }
  // subst hbar -> 0 picks the constant term
  CHECK(f.subst(S_hbar, ParamRat()) == ParamRat(1) / nu);
  CHECK(P("nu^2 - hbar^2").subst(S_hbar, nu * 2) == -(nu * nu * 3));
}

TEST_CASE("exact square roots of monomial rational functions") {
  ParamRat nu = ParamRat::sym(S_nu), hb = ParamRat::sym(S_hbar);
  CHECK((nu * nu).sqrt_exact() == nu);
  ParamRat g = (nu * nu * Rat(9, 4)) / (nu - hb) / (nu - hb);
  CHECK(g.sqrt_exact() * g.sqrt_exact() == g);
  CHECK_THROWS_AS((nu * nu + hb).sqrt_exact(), BranchError);
}

TEST_CASE("parser accepts surd generators") {
  CHECK(P("q^2") == ParamRat(Rat(-1, 6)));
  CHECK(P("p^2 - 3*q") == ParamRat());
  CHECK(P("I*I") == ParamRat(-1));
  CHECK(P("cbrt2^3") == ParamRat(2));
  CHECK(P("(1 + sqrt2)*(sqrt2 - 1)") == ParamRat(1));
  CHECK(P("2^-1") == ParamRat(Rat(1, 2)));
}
