#pragma once
// Registry of the 17 accessory-parameter expansion cases.
//
// Each ExpansionCase bundles everything the solver needs to reproduce one
// expansion: the scaling triple (d_x, d_y, d_E), the expansion parameter
// Lam = t^rho, the vanishing cycle (double zero / pole / point at infinity /
// two-point difference), the leading accessory value G_0^[0], and the m = 0
// residue target v0. The residue-series conditions in the rescaled frame are
//
//   R_{-1}^[sigma] = nu,   R_{-1}^[l] = 0 (l != sigma),
//   R_0^[0] = v0,          R_0^[l] = 0 (l >= 1),
//   R_m^[l] = 0            (m >= 1),
//
// with sigma = -d_y/rho a nonnegative integer. v0 is +1/2 for pole cycles,
// -d/2 at a double zero of order d, and 0 when every V_m (m >= 0) vanishes.
//
// The sqrt branch per frame is calibrated against the printed leading
// coefficients (the source fixes it only implicitly); the calibration is
// locked in by the per-case solver tests.

#include "voros/potentials.hpp"

namespace voros {

struct CatalogMiss : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CycleKind { DoubleZero, PoleResidue, AtInfinity, TwoPointDifference };

inline const char* cycle_name(CycleKind k) {
  switch (k) {
    case CycleKind::DoubleZero: return "double-zero";
    case CycleKind::PoleResidue: return "pole-residue";
    case CycleKind::AtInfinity: return "at-infinity";
    case CycleKind::TwoPointDifference: return "two-point-difference";
  }
  return "?";
}

struct Cycle {
  CycleKind kind = CycleKind::DoubleZero;
  AlgConst x_star;        // DoubleZero / PoleResidue location
  int d = 1;              // zero order of sqrt(Q0^[0]) at the point
  AlgConst x_plus, x_minus;  // TwoPointDifference locations
  bool requires_nu_nonzero = false;
};

// E = rel_sign * D(W) + shift, D in {t d/dt, d/dt, t(t-1) d/dt}.
enum class DerivOp { TDdt, Ddt, TTm1Ddt };

// One conjecture relation against one catalogued block. Dual-block cases
// (V.tinf1, IV.tinf1, III3.t0) carry two of these.
struct BlockRelation {
  std::string block_id;
  int sign = +1;
  DerivOp deriv = DerivOp::TDdt;
  // additive shift on the right-hand side, as (t-exponent, coefficient) pairs
  std::vector<std::pair<Rat, ParamRat>> shift;
  ParamRat s_pref;                      // block variable s = s_pref * t^{s_pow}
  Rat s_pow = Rat(1);                   // (s_pref = 1, s_pow = 1 when the block
                                        //  is already a t-series)
  std::vector<std::pair<Sym, ParamRat>> subs;  // parameter identification
};

struct ExpansionCase {
  std::string id;
  EqId eq = EqId::VI;
  Rat dx, dE;         // x = t^dx X, E = t^dE G
  Rat rho;            // Lam = t^rho
  Cycle cycle;
  int branch = +1;        // sqrt branch in the frame (second frame: branch2)
  int branch2 = +1;
  ParamRat g00;           // leading accessory value G_0^[0]
  Rat v0;                 // m = 0 residue target at Lam-slice 0
  bool exp_sign_minus = true;  // which sign of the exp(V_gamma) condition holds
  std::vector<BlockRelation> relations;
  long verify_l = 0;      // Lam-orders of E checked by verify (0..verify_l)
  std::string variant_of; // nonempty for footnote-branch variants
};

namespace detail {

inline std::vector<std::pair<Sym, ParamRat>> subs(
    std::initializer_list<std::pair<const char*, const char*>> kv) {
  std::vector<std::pair<Sym, ParamRat>> out;
  for (auto& [k, v] : kv) {
    int s = sym_from_name(k);
    if (s < 0) throw CatalogMiss(std::string("unknown symbol ") + k);
    out.emplace_back(static_cast<Sym>(s), parse_rat(v));
  }
  return out;
}

inline BlockRelation rel(std::string block, int sign, DerivOp d,
                         std::vector<std::pair<Rat, const char*>> shift,
                         const std::string& s_pref, Rat s_pow,
                         std::vector<std::pair<Sym, ParamRat>> sb = {}) {
  BlockRelation r;
  r.block_id = std::move(block);
  r.sign = sign;
  r.deriv = d;
  for (auto& [e, c] : shift) r.shift.emplace_back(e, parse_rat(c));
  r.s_pref = parse_rat(s_pref);
  r.s_pow = s_pow;
  r.subs = std::move(sb);
  return r;
}

std::vector<ExpansionCase> build_registry();

}  // namespace detail

inline const std::vector<ExpansionCase>& case_registry() {
  static const std::vector<ExpansionCase> reg = detail::build_registry();
  return reg;
}

inline const ExpansionCase& expansion_case(const std::string& id) {
  for (const auto& c : case_registry())
    if (c.id == id) return c;
  throw CatalogMiss("unknown case id: " + id);
}

inline std::vector<std::string> main_case_ids() {
  std::vector<std::string> out;
  for (const auto& c : case_registry())
    if (c.variant_of.empty()) out.push_back(c.id);
  return out;
}

namespace detail {

inline std::vector<ExpansionCase> build_registry() {
  using D = DerivOp;
  std::vector<ExpansionCase> reg;
  auto add = [&](ExpansionCase c) { reg.push_back(std::move(c)); };

  // ---- H_VI --------------------------------------------------------------
  {
    ExpansionCase c;
    c.id = "VI.t0";
    c.eq = EqId::VI;
    c.dx = c.dE = 0;
    c.rho = 1;
    c.cycle = {CycleKind::PoleResidue, AlgConst(0), 2, {}, {}, true};
    c.g00 = parse_rat("nu^2 - th0^2 - tht^2");
    c.v0 = Rat(1, 2);
    c.relations = {rel("VI.W", +1, D::TTm1Ddt, {}, "1", 1,
                       subs({{"dsig", "-nu^2 + hbar^2/4"},
                             {"d0", "-th0^2 + hbar^2/4"},
                             {"d1", "-th1^2 + hbar^2/4"},
                             {"dt", "-tht^2 + hbar^2/4"},
                             {"dinf", "-thinf^2 + hbar^2/4"}}))};
    c.verify_l = 2;
    add(c);
  }

  // ---- H_V ---------------------------------------------------------------
  {
    ExpansionCase c;
    c.id = "V.t0";
    c.eq = EqId::V;
    c.dx = c.dE = 0;
    c.rho = 1;
    c.cycle = {CycleKind::PoleResidue, AlgConst(0), 2, {}, {}, true};
    c.g00 = parse_rat("-nu^2 + th0^2 + tht^2");
    c.v0 = Rat(1, 2);
    c.relations = {rel("V.W0", +1, D::TDdt, {}, "1", 1,
                       subs({{"dsig", "-nu^2 + hbar^2/4"},
                             {"d0", "-th0^2 + hbar^2/4"},
                             {"dt", "-tht^2 + hbar^2/4"}}))};
    c.verify_l = 2;
    add(c);
  }
  {
    ExpansionCase c;
    c.id = "V.tinf1";
    c.eq = EqId::V;
    c.dx = 0;
    c.dE = 1;
    c.rho = -1;
    c.cycle = {CycleKind::AtInfinity, {}, 1, {}, {}, false};
    c.g00 = parse_rat("nu - thinf");
    c.v0 = 0;
    c.exp_sign_minus = false;
    c.relations = {
        rel("V.Winf1s", -1, D::TDdt, {{Rat(0), "th0^2 + tht^2 - hbar^2/2"}}, "-1", 1,
            subs({{"aD", "nu - thinf/2"},
                  {"e1", "-thinf - hbar"},
                  {"e3", "thinf*(th0^2 - tht^2)"},
                  {"w2", "2*th0^2 + 2*tht^2 + thinf^2"},
                  {"w4", "(th0^2 - tht^2)^2 + 2*thinf*(th0^2 + tht^2)"}})),
        rel("V.Winf1t", +1, D::TDdt, {}, "1", 1)};
    c.verify_l = 3;
    add(c);
  }
  {
    ExpansionCase c;
    c.id = "V.tinf2";
    c.eq = EqId::V;
    c.dx = 1;
    c.dE = 2;
    c.rho = -1;
    c.cycle = {CycleKind::DoubleZero, AlgConst(Rat(1, 2)), 1, {}, {}, false};
    c.branch = -1;
    c.g00 = parse_rat("-1/16");
    c.v0 = Rat(-1, 2);
    c.relations = {rel(
        "V.Winf2", +1, D::TDdt, {{Rat(0), "th0^2 + tht^2 - hbar^2/2"}}, "1", 1,
        subs({{"aD", "nu"},
              {"e1", "thinf - hbar"},
              {"e3", "-thinf*(th0^2 - tht^2)"},
              {"w2", "2*th0^2 + 2*tht^2 + thinf^2"},
              {"w4",
               "(th0^2 - tht^2)^2 + 2*thinf*(th0^2 + tht^2) - "
               "3*(2*th0^2 + 2*tht^2 + thinf^2)*hbar/8 + 105*hbar^2/1024"}}))};
    c.verify_l = 3;
    add(c);
  }

  // ---- H_IV --------------------------------------------------------------
  {
    ExpansionCase c;
    c.id = "IV.tinf1";
    c.eq = EqId::IV;
    c.dx = -1;
    c.dE = 1;
    c.rho = -2;
    c.cycle = {CycleKind::AtInfinity, {}, 1, {}, {}, false};
    c.branch = -1;
    c.g00 = parse_rat("2*nu");
    c.v0 = 0;
    c.exp_sign_minus = false;
    auto iv_subs = subs({{"aD", "-nu - thinf/3"},
                         {"m3", "(2*thinf + 3*hbar)/12"},
                         {"e2", "-(3*th0^2 + thinf^2)/12"},
                         {"e3", "(9*th0^2*thinf - thinf^3)/108"}});
    c.relations = {rel("IV.Winf1s", -1, D::Ddt, {}, "2", 2, iv_subs),
                   rel("IV.Winf1t", +1, D::Ddt, {}, "1", 1,
                       subs({{"d0", "-th0^2 + hbar^2/4"}}))};
    c.verify_l = 3;
    add(c);
  }
  {
    ExpansionCase c;
    c.id = "IV.tinf2";
    c.eq = EqId::IV;
    c.dx = 1;
    c.dE = 3;
    c.rho = -2;
    c.cycle = {CycleKind::DoubleZero, AlgConst(Rat(-1, 3)), 1, {}, {}, false};
    c.g00 = parse_rat("-4/27");
    c.v0 = Rat(-1, 2);
    c.relations = {rel("IV.Winf2", -1, D::Ddt, {}, "2", 2,
                       subs({{"aD", "-nu"},
                             {"m3", "(2*thinf + 3*hbar)/12"},
                             {"e2", "-(3*th0^2 + thinf^2)/12"},
                             {"e3", "(9*th0^2*thinf - thinf^3)/108"}}))};
    c.verify_l = 3;
    add(c);
  }

  // ---- H_III1 ------------------------------------------------------------
  {
    ExpansionCase c;
    c.id = "III1.t0";
    c.eq = EqId::III1;
    c.dx = c.dE = 0;
    c.rho = 1;
    c.cycle = {CycleKind::PoleResidue, AlgConst(0), 2, {}, {}, true};
    c.g00 = parse_rat("-nu^2");
    c.v0 = Rat(1, 2);
    c.relations = {rel("III1.W0", +1, D::TDdt, {}, "1", 1,
                       subs({{"dsig", "-nu^2 + hbar^2/4"}}))};
    c.verify_l = 2;
    add(c);
  }
  {
    ExpansionCase c;
    c.id = "III1.tinf";
    c.eq = EqId::III1;
    c.dx = Rat(1, 2);
    c.dE = 1;
    c.rho = Rat(-1, 2);
    c.cycle = {CycleKind::TwoPointDifference, {}, 1, AlgConst::gen_i(),
               -AlgConst::gen_i(), false};
    c.branch = -1;
    c.branch2 = +1;
    c.g00 = parse_rat("-1/2");
    c.v0 = 0;
    c.exp_sign_minus = false;
    c.relations = {rel("III1.Winf", -1, D::TDdt, {{Rat(1), "1/2"}}, "8*I", Rat(1, 2),
                       subs({{"aD", "nu/2"},
                             {"e2", "th0*thinf"},
                             {"w2", "th0^2 + thinf^2"}}))};
    c.verify_l = 4;
    add(c);
  }

  // ---- H_III2 ------------------------------------------------------------
  {
    ExpansionCase c;
    c.id = "III2.t0";
    c.eq = EqId::III2;
    c.dx = c.dE = 0;
    c.rho = 1;
    c.cycle = {CycleKind::PoleResidue, AlgConst(0), 2, {}, {}, true};
    c.g00 = parse_rat("-nu^2");
    c.v0 = Rat(1, 2);
    c.relations = {rel("III2.W0", +1, D::TDdt, {}, "1", 1,
                       subs({{"dsig", "-nu^2 + hbar^2/4"}}))};
    c.verify_l = 3;
    add(c);
  }
  {
    ExpansionCase c;
    c.id = "III2.tinf";
    c.eq = EqId::III2;
    c.dx = Rat(1, 3);
    c.dE = Rat(2, 3);
    c.rho = Rat(-1, 3);
    AlgConst c3 = AlgConst::gen_cbrt2();
    c.cycle = {CycleKind::DoubleZero, c3, 1, {}, {}, false};
    c.g00 = ParamRat(c3 * c3 * AlgConst(Rat(3, 4)));  // 3/2^{4/3}
    c.v0 = Rat(-1, 2);
    // s = (54 t)^{1/3} = 3 * 2^{1/3} * t^{1/3}
    c.relations = {rel("III2.Winf", -1, D::TDdt, {}, "3*cbrt2", Rat(1, 3),
                       subs({{"aD", "nu"}, {"m1", "thinf"}}))};
    c.verify_l = 3;
    add(c);
  }

  // ---- H_III3 ------------------------------------------------------------
  {
    ExpansionCase c;
    c.id = "III3.t0";
    c.eq = EqId::III3;
    c.dx = c.dE = 0;
    c.rho = 1;
    c.cycle = {CycleKind::PoleResidue, AlgConst(0), 2, {}, {}, true};
    c.g00 = parse_rat("-nu^2");
    c.v0 = Rat(1, 2);
    c.relations = {rel("III3.W0", -1, D::TDdt, {}, "1", 1,
                       subs({{"a", "nu"}})),
                   rel("III3.W0v", +1, D::TDdt, {}, "1", 1,
                       subs({{"dsig", "-nu^2 + hbar^2/4"}}))};
    c.verify_l = 3;
    add(c);
  }
  {
    ExpansionCase c;
    c.id = "III3.tinf";
    c.eq = EqId::III3;
    c.dx = Rat(1, 2);
    c.dE = Rat(1, 2);
    c.rho = Rat(-1, 4);
    c.cycle = {CycleKind::DoubleZero, AlgConst(1), 1, {}, {}, false};
    c.g00 = parse_rat("2");
    c.v0 = Rat(-1, 2);
    c.relations = {rel("III3.Winf", +1, D::TDdt, {}, "-32*I", Rat(1, 4),
                       subs({{"aD", "I*nu"}}))};
    c.verify_l = 7;
    add(c);
  }

  // ---- H_II --------------------------------------------------------------
  {
    ExpansionCase c;
    c.id = "II.tinf1";
    c.eq = EqId::II;
    c.dx = Rat(1, 2);
    c.dE = Rat(1, 2);
    c.rho = Rat(-3, 2);
    c.cycle = {CycleKind::TwoPointDifference, {}, 1, AlgConst::gen_i(),
               -AlgConst::gen_i(), false};
    c.branch2 = -1;
    c.g00 = parse_rat("2*I*nu");
    c.v0 = 0;
    c.exp_sign_minus = false;
    c.relations = {rel("II.Winf1", +1, D::Ddt, {}, "8*I", Rat(3, 2),
                       subs({{"aD", "nu/2"}, {"m", "thinf/4"}}))};
    c.verify_l = 3;
    add(c);
  }
  {
    ExpansionCase c;
    c.id = "II.tinf2";
    c.eq = EqId::II;
    c.dx = Rat(1, 2);
    c.dE = 2;
    c.rho = Rat(-3, 2);
    c.cycle = {CycleKind::DoubleZero, AlgConst(0), 1, {}, {}, false};
    c.g00 = parse_rat("-1");
    c.v0 = Rat(-1, 2);
    // m enters the block only through m^2; the identification is quantum
    // corrected: m^2 = thinf^2/16 - 3 hbar^2/128.
    c.relations = {rel("II.Winf2", +1, D::Ddt, {}, "8*I", Rat(3, 2),
                       subs({{"aD", "nu"}}))};
    c.verify_l = 4;
    add(c);
  }

  // ---- H_II' -------------------------------------------------------------
  {
    ExpansionCase c;
    c.id = "IIp.tinf1";
    c.eq = EqId::IIp;
    c.dx = Rat(-1, 2);
    c.dE = Rat(1, 2);
    c.rho = Rat(-3, 2);
    c.cycle = {CycleKind::AtInfinity, {}, 1, {}, {}, false};
    c.branch = -1;
    c.g00 = parse_rat("-2*nu");
    c.v0 = 0;
    c.exp_sign_minus = false;
    c.relations = {rel("II.Winf1", +1, D::Ddt, {}, "4", Rat(3, 2),
                       subs({{"aD", "-nu"}, {"m", "th0/2"}}))};
    c.verify_l = 3;
    add(c);
  }
  {
    ExpansionCase c;
    c.id = "IIp.tinf2";
    c.eq = EqId::IIp;
    c.dx = 1;
    c.dE = 2;
    c.rho = Rat(-3, 2);
    c.cycle = {CycleKind::DoubleZero, AlgConst(Rat(-1, 2)), 1, {}, {}, false};
    c.g00 = parse_rat("1/4");
    c.v0 = Rat(-1, 2);
    c.relations = {rel("IIp.Winf2", +1, D::Ddt, {}, "4", Rat(3, 2),
                       subs({{"aD", "nu"}}))};
    c.verify_l = 4;
    add(c);
  }

  // ---- H_I ---------------------------------------------------------------
  {
    ExpansionCase c;
    c.id = "I.tinf";
    c.eq = EqId::I;
    c.dx = Rat(1, 2);
    c.dE = Rat(3, 2);
    c.rho = Rat(-5, 4);
    c.cycle = {CycleKind::DoubleZero, AlgConst::gen_q(), 1, {}, {}, false};
    c.g00 = parse_rat("-4*q/3");
    c.v0 = Rat(-1, 2);
    // s = 96 sqrt(6q) t^{5/4} with sqrt(6q) = sqrt2 * p  (p^2 = 3q).
    c.relations = {rel("I.W", +1, D::Ddt, {}, "96*sqrt2*p", Rat(5, 4),
                       subs({{"aD", "sqrt2*nu"}}))};
    c.verify_l = 4;
    add(c);
  }

  // ---- footnote-branch variants -----------------------------------------
  auto find = [&](const std::string& id) -> const ExpansionCase& {
    for (const auto& c : reg)
      if (c.id == id) return c;
    throw CatalogMiss("registry bootstrap: " + id);
  };
  {
    ExpansionCase c = find("III3.tinf");
    c.id = "III3.tinf.alt";
    c.variant_of = "III3.tinf";
    c.cycle.x_star = AlgConst(-1);
    c.g00 = parse_rat("-2");
    c.relations.clear();
    add(c);
  }
  {
    ExpansionCase c = find("III1.tinf");
    c.id = "III1.tinf.alt";
    c.variant_of = "III1.tinf";
    c.cycle.x_plus = AlgConst(1);
    c.cycle.x_minus = AlgConst(-1);
    c.g00 = parse_rat("1/2");
    c.relations.clear();
    add(c);
  }
  {
    ExpansionCase c = find("I.tinf");
    c.id = "I.tinf.alt";
    c.variant_of = "I.tinf";
    c.cycle.x_star = -AlgConst::gen_q();
    c.g00 = parse_rat("4*q/3");
    c.relations.clear();
    add(c);
  }

  return reg;
}

}  // namespace detail

}  // namespace voros
