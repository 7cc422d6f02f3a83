#include <catch2/catch_amalgamated.hpp>

#include "voros/series.hpp"
#include "voros/textform.hpp"

using namespace voros;

static XSeries umono(const ParamRat& c, const Rat& e) {
  return XSeries::monomial("u", c, e);
}

TEST_CASE("polynomial series product") {
  XSeries one = XSeries::one("u", XSeries::INF());
  XSeries u = umono(ParamRat(1), 1);
  XSeries f = (one + u) * (one - u);
  CHECK(f.coeff_unchecked(0) == ParamRat(1));
  CHECK(f.coeff_unchecked(1) == ParamRat());
  CHECK(f.coeff_unchecked(2) == ParamRat(-1));
  CHECK(f.trust() >= XSeries::INF());
}

TEST_CASE("geometric inverse and trust") {
  XSeries u = umono(ParamRat(1), 1);
  XSeries f = (XSeries::one("u", 10) - u).inverse();
  for (int k = 0; k <= 10; ++k) CHECK(f.coeff(k) == ParamRat(1));
  CHECK(f.trust() == Rat(10));
  CHECK_THROWS_AS(f.coeff(11), InsufficientDepth);
}

TEST_CASE("binomial sqrt oracle") {
  // (1+u)^{-3/2} = 1 - 3/2 u + 15/8 u^2 - 35/16 u^3 + ...
  XSeries u = umono(ParamRat(1), 1);
  XSeries base = XSeries::one("u", 6) + u;
  XSeries f = (base * base * base).inverse().sqrt();
  CHECK(f.coeff(0) == ParamRat(1));
  CHECK(f.coeff(1) == ParamRat(Rat(-3, 2)));
  CHECK(f.coeff(2) == ParamRat(Rat(15, 8)));
  CHECK(f.coeff(3) == ParamRat(Rat(-35, 16)));
}

TEST_CASE("sqrt of a Laurent square with even leading order") {
  // sqrt((X-1)^2/X^3) around X = 1, u = X-1: u * (1+u)^{-3/2}
  XSeries u = umono(ParamRat(1), 1);
  XSeries base = XSeries::one("u", 8) + u;
  XSeries f = (u * u) * (base * base * base).inverse();
  XSeries s = f.sqrt();
  CHECK(s.floor() == Rat(1));
  CHECK(s.coeff(1) == ParamRat(1));
  CHECK(s.coeff(2) == ParamRat(Rat(-3, 2)));
  CHECK(s.coeff(3) == ParamRat(Rat(15, 8)));
  CHECK((s * s - f).known_zero());
  // opposite branch
  XSeries sm = f.sqrt(-1);
  CHECK(sm.coeff(1) == ParamRat(-1));
}

TEST_CASE("odd leading order has no Puiseux-free sqrt branch pair") {
  XSeries u = umono(ParamRat(1), 1);
  XSeries s = u.sqrt();
  CHECK(s.floor() == Rat(1, 2));
  CHECK(s.ramification() == 2);
}

TEST_CASE("derivative has zero residue") {
  ParamRat nu = ParamRat::sym(S_nu);
  XSeries f = umono(nu, -3) + umono(ParamRat(5), -1) + umono(nu * nu, 2);
  XSeries df = f.derivative();
  CHECK(df.coeff_unchecked(-1) == ParamRat());
  CHECK(df.coeff_unchecked(-4) == nu * (-3));
}

TEST_CASE("trust propagation through multiplication") {
  XSeries u = umono(ParamRat(1), 1);
  XSeries a = XSeries::one("u", 4) + u;          // known to u^4
  XSeries b = umono(ParamRat(1), 2);             // exact monomial u^2
  XSeries prod = a * b;
  CHECK(prod.trust() == Rat(6));
  XSeries c = umono(ParamRat(1), -2) + XSeries::zero_to("u", 3);
  CHECK((a * c).trust() == Rat(2));  // min(3 + floor(a), 4 + floor(c)) = min(3, 2)
}

TEST_CASE("mixed variable tags are rejected") {
  XSeries u = umono(ParamRat(1), 1);
  XSeries t = XSeries::monomial("t", ParamRat(1), 1);
  CHECK_THROWS_AS(u * t, TagMismatch);
  CHECK_THROWS_AS(u + t, TagMismatch);
}

TEST_CASE("BiSeries inversion expands in the outer parameter") {
  // 1/(u - Lam) = sum_j Lam^j u^{-j-1}: the Lam-adic branch, not the u-adic one
  BiSeries b("Lam");
  b.set(0, umono(ParamRat(1), 1));
  b.set(1, XSeries(ParamRat(-1)));
  b.set_trust(Rat(6));
  BiSeries inv = b.inverse();
  for (int j = 0; j <= 6; ++j) {
    XSeries slice = inv.coeff(j);
    CHECK(slice.coeff_unchecked(Rat(-j - 1)) == ParamRat(1));
  }
}

TEST_CASE("BiSeries sqrt matches the WKB leading branch") {
  // sqrt(nu^2/u^2 - Lam/u) = nu/u - Lam/(2 nu) - Lam^2 u/(8 nu^3) - ...
  ParamRat nu = ParamRat::sym(S_nu);
  BiSeries q("Lam");
  q.set(0, umono(nu * nu, -2));
  q.set(1, umono(ParamRat(-1), -1));
  q.set_trust(Rat(4));
  BiSeries s = q.sqrt();
  CHECK(s.coeff(0).coeff_unchecked(-1) == nu);
  CHECK(s.coeff(1).coeff_unchecked(0) == ParamRat(Rat(-1, 2)) / nu);
  CHECK(s.coeff(2).coeff_unchecked(1) == ParamRat(Rat(-1, 8)) / (nu * nu * nu));
  CHECK((s * s - q).known_zero());
  BiSeries sm = q.sqrt(-1);
  CHECK(sm.coeff(0).coeff_unchecked(-1) == -nu);
}

TEST_CASE("pow_int") {
  XSeries u = umono(ParamRat(1), 1);
  XSeries f = XSeries::one("u", 10) + u;
  CHECK(f.pow_int(3).coeff(2) == ParamRat(3));
  CHECK(f.pow_int(-2).coeff(1) == ParamRat(-2));
  CHECK(f.pow_int(0).coeff(0) == ParamRat(1));
}
