#pragma once
// The nine quantum-curve potentials Q_J(x) and their hbar-scaling weights.
//
// Each potential is stored as a sum of structured terms
//     coeff(theta, hbar) * [E] * t^tpow * prod_k base_k^{p_k}
// over the factor bases x, x-1, x-t, x+t, x^2+t. Keeping the factors
// unexpanded is what later lets the small-t / large-t limits be taken exactly
// factor by factor.
//
// verify_scaling() checks that assigning the listed hbar-weights to
// (x, t, E, theta) makes every term of Q_J homogeneous of weight -2 relative
// to hbar^2 d^2/dx^2 — i.e. that the normal form with hbar restored is
// equivalent to the classical (hbar = 1) curve. This pins down the data entry
// of both the potential and the weight table.

#include "voros/textform.hpp"

namespace voros {

struct ScalingMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EqId { VI, V, IV, III1, III2, III3, II, IIp, I };

inline const char* eq_name(EqId id) {
  switch (id) {
    case EqId::VI: return "VI";
    case EqId::V: return "V";
    case EqId::IV: return "IV";
    case EqId::III1: return "III1";
    case EqId::III2: return "III2";
    case EqId::III3: return "III3";
    case EqId::II: return "II";
    case EqId::IIp: return "II'";
    case EqId::I: return "I";
  }
  return "?";
}

enum class FactorBase { X, Xm1, XmT, XpT, X2pT };

struct PotTerm {
  ParamPoly coeff;  // polynomial in theta's and hbar
  bool has_E = false;
  long tpow = 0;
  std::vector<std::pair<FactorBase, int>> factors;  // base -> power (may be < 0)
};

// hbar-weights: x -> hbar^{ax} x etc.; E and each theta likewise.
struct ScalingWeights {
  Rat ax, at, aE, a0, a1, att, ainf;
};

struct PotentialSpec {
  EqId id;
  std::vector<PotTerm> terms;
  ScalingWeights w;
};

namespace detail {
inline ParamPoly pp(const std::string& s) {
  ParamRat r = parse_rat(s);
  if (!r.is_poly()) throw std::logic_error("potential coeff not polynomial");
  return r.num();
}
inline PotTerm term(const std::string& coeff, bool has_E, long tpow,
                    std::vector<std::pair<FactorBase, int>> f) {
  return PotTerm{pp(coeff), has_E, tpow, std::move(f)};
}
}  // namespace detail

inline const PotentialSpec& potential(EqId id) {
  using detail::term;
  using enum FactorBase;
  static const std::map<EqId, PotentialSpec> table = [] {
    std::map<EqId, PotentialSpec> m;
    m[EqId::VI] = {EqId::VI,
                   {
                       term("th0^2 - hbar^2/4", false, 0, {{X, -2}}),
                       term("th1^2 - hbar^2/4", false, 0, {{Xm1, -2}}),
                       term("tht^2 - hbar^2/4", false, 0, {{XmT, -2}}),
                       term("thinf^2 - th0^2 - th1^2 - tht^2 + hbar^2/2", false,
                            0, {{X, -1}, {Xm1, -1}}),
                       term("-1", true, 0, {{X, -1}, {Xm1, -1}, {XmT, -1}}),
                   },
                   {0, 0, -2, -1, -1, -1, -1}};
    m[EqId::V] = {EqId::V,
                  {
                      term("th0^2 - hbar^2/4", false, 0, {{X, -2}}),
                      term("tht^2 - hbar^2/4", false, 0, {{XmT, -2}}),
                      term("1/4", false, 0, {}),
                      term("thinf", false, 0, {{X, -1}}),
                      term("-1", true, 0, {{X, -1}, {XmT, -1}}),
                  },
                  {-1, -1, -2, -1, 0, -1, -1}};
    m[EqId::IV] = {EqId::IV,
                   {
                       term("th0^2 - hbar^2/4", false, 0, {{X, -2}}),
                       term("-1", true, 0, {{X, -1}}),
                       term("2*thinf", false, 0, {}),
                       term("1", false, 0, {{XpT, 2}}),
                   },
                   {Rat(-1, 2), Rat(-1, 2), Rat(-3, 2), -1, 0, 0, -1}};
    m[EqId::III1] = {EqId::III1,
                     {
                         term("1/4", false, 2, {{X, -4}}),
                         term("th0", false, 1, {{X, -3}}),
                         term("-1", true, 0, {{X, -2}}),
                         term("thinf", false, 0, {{X, -1}}),
                         term("1/4", false, 0, {}),
                     },
                     {-1, -2, -2, -1, 0, 0, -1}};
    m[EqId::III2] = {EqId::III2,
                     {
                         term("1", false, 1, {{X, -3}}),
                         term("-1", true, 0, {{X, -2}}),
                         term("thinf", false, 0, {{X, -1}}),
                         term("1/4", false, 0, {}),
                     },
                     {-1, -3, -2, 0, 0, 0, -1}};
    m[EqId::III3] = {EqId::III3,
                     {
                         term("1", false, 1, {{X, -3}}),
                         term("-1", true, 0, {{X, -2}}),
                         term("1", false, 0, {{X, -1}}),
                     },
                     {-2, -4, -2, 0, 0, 0, 0}};
    m[EqId::II] = {EqId::II,
                   {
                       term("1", false, 0, {{X2pT, 2}}),
                       term("2*thinf", false, 0, {{X, 1}}),
                       term("1", true, 0, {}),
                   },
                   {Rat(-1, 3), Rat(-2, 3), Rat(-4, 3), 0, 0, 0, -1}};
    m[EqId::IIp] = {EqId::IIp,
                    {
                        term("th0^2 - hbar^2/4", false, 0, {{X, -2}}),
                        term("1", true, 0, {{X, -1}}),
                        term("1", false, 1, {}),
                        term("1", false, 0, {{X, 1}}),
                    },
                    {Rat(-2, 3), Rat(-2, 3), Rat(-4, 3), -1, 0, 0, 0}};
    m[EqId::I] = {EqId::I,
                  {
                      term("4", false, 0, {{X, 3}}),
                      term("2", false, 1, {{X, 1}}),
                      term("1", true, 0, {}),
                  },
                  {Rat(-2, 5), Rat(-4, 5), Rat(-6, 5), 0, 0, 0, 0}};
    return m;
  }();
  return table.at(id);
}

inline std::vector<EqId> all_equations() {
  return {EqId::VI, EqId::V,    EqId::IV, EqId::III1, EqId::III2,
          EqId::III3, EqId::II, EqId::IIp, EqId::I};
}

// hbar-weight of a structured factor base; a base that fails to rescale as a
// single monomial times itself is flagged.
inline Rat factor_weight(FactorBase b, const ScalingWeights& w, EqId id) {
  switch (b) {
    case FactorBase::X:
      return w.ax;
    case FactorBase::Xm1:
      if (w.ax != 0)
        throw ScalingMismatch(std::string(eq_name(id)) +
                              ": factor x-1 not homogeneous (x has weight)");
      return Rat(0);
    case FactorBase::XmT:
    case FactorBase::XpT:
      if (w.ax != w.at)
        throw ScalingMismatch(std::string(eq_name(id)) +
                              ": factor x±t not homogeneous");
      return w.ax;
    case FactorBase::X2pT:
      if (2 * w.ax != w.at)
        throw ScalingMismatch(std::string(eq_name(id)) +
                              ": factor x^2+t not homogeneous");
      return 2 * w.ax;
  }
  return Rat(0);
}

// Check hbar^{2ax} Q_J(hbar-scaled args, hbar=1 coeffs) == hbar^{-2} Q_J:
// every coefficient monomial theta^k hbar^h must satisfy
//   2ax + sum_theta a_theta*deg + tpow*at + [E]*aE + sum_f w_f*p_f == -2 + h.
inline void verify_scaling(const PotentialSpec& ps) {
  for (const auto& t : ps.terms) {
    Rat base = 2 * ps.w.ax + t.tpow * ps.w.at + (t.has_E ? ps.w.aE : Rat(0));
    for (auto& [b, p] : t.factors) base += factor_weight(b, ps.w, ps.id) * p;
    for (auto& [e, c] : t.coeff.terms()) {
      for (int s = 0; s < NSYM; ++s) {
        if (e[s] == 0) continue;
        if (s != S_hbar && s != S_th0 && s != S_th1 && s != S_tht &&
            s != S_thinf)
          throw ScalingMismatch(std::string(eq_name(ps.id)) +
                                ": unexpected symbol in potential");
      }
      Rat lhs = base + e[S_th0] * ps.w.a0 + e[S_th1] * ps.w.a1 +
                e[S_tht] * ps.w.att + e[S_thinf] * ps.w.ainf;
      Rat rhs = Rat(-2) + e[S_hbar];
      if (lhs != rhs)
        throw ScalingMismatch(std::string(eq_name(ps.id)) +
                              ": term weight " + rat_str(lhs) +
                              " != " + rat_str(rhs));
    }
  }
}

}  // namespace voros
