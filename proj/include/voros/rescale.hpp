#pragma once
// Rescaled potentials. Substituting x = t^{dx} X, E = t^{dE} G into Q_J and
// extracting the extremal power of Lam = t^rho produces
//
//     Q^res(X, Lam) = A(X, Lam) + hbar^2 B(X, Lam) + C(X, Lam) * G
//
// as Lam-series of local Laurent series in the frame coordinate u (u = X - x0
// at a finite point, u = 1/X at infinity). Individual factors may pick up
// fractional powers of Lam; only the combined exponent of each term is
// required to be a nonnegative integer, and that requirement is what
// certifies the data entry of the scaling triple (ScalingDegreeError).
//
// The sigma slot of the nu residue condition comes out of the same
// bookkeeping: with Q^res = t^w Q, the classical period rescales as
// \oint sqrt(Q^res) dX = t^{w/2 - dx} \oint sqrt(Q) dx, so
// sigma = (w/2 - dx)/rho, again a nonnegative integer.
//
// certification: at a double zero the classical slice Q^res_0 must vanish to
// order exactly 2 in u (the limiting curve divides by (X - x0)^2); at a pole
// cycle it must have a double pole. Failures raise DegenerationError.

#include "voros/cases.hpp"
#include "voros/series.hpp"

namespace voros {

struct ScalingDegreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FrameKind { FinitePoint, AtInfinity };

struct Frame {
  FrameKind kind = FrameKind::FinitePoint;
  AlgConst x0;      // center for FinitePoint
  int branch = +1;  // sqrt branch used in this frame
};

inline std::vector<Frame> cycle_frames(const ExpansionCase& c) {
  switch (c.cycle.kind) {
    case CycleKind::DoubleZero:
    case CycleKind::PoleResidue:
      return {{FrameKind::FinitePoint, c.cycle.x_star, c.branch}};
    case CycleKind::AtInfinity:
      return {{FrameKind::AtInfinity, {}, c.branch}};
    case CycleKind::TwoPointDifference:
      return {{FrameKind::FinitePoint, c.cycle.x_plus, c.branch},
              {FrameKind::FinitePoint, c.cycle.x_minus, c.branch2}};
  }
  throw std::logic_error("cycle_frames: bad kind");
}

struct RescaledPotential {
  BiSeries A, B, C;  // Q^res = A + hbar^2 B + C * G
  XSeries limit0;    // classical slice 0 with G -> G_0^[0] substituted
  Rat w;             // Q^res = t^w Q(t^{dx} X)
  int sigma = 0;     // Lam-slice carrying the nu residue target
};

namespace detail {

// One factor base as Lam^gamma * (sum of Lam-slices of u-polynomials).
struct FactorSeries {
  Rat gamma;
  BiSeries f;
};

inline FactorSeries base_series(FactorBase base, const Frame& fr, const Rat& a,
                                const Rat& b, const Rat& utrust,
                                const Rat& ltrust) {
  // image of X (and X^2) in the frame coordinate
  auto xhat = [&](int pw) -> XSeries {
    XSeries s("u");
    if (fr.kind == FrameKind::AtInfinity) {
      s = XSeries::monomial("u", ParamRat(1), Rat(-pw));
    } else if (fr.x0.is_zero()) {
      s = XSeries::monomial("u", ParamRat(1), Rat(pw));
    } else {
      XSeries lin = XSeries::monomial("u", ParamRat(fr.x0), 0) +
                    XSeries::monomial("u", ParamRat(1), 1);
      s = pw == 2 ? lin * lin : lin;
    }
    s.set_trust(utrust);
    return s;
  };
  std::vector<std::pair<Rat, XSeries>> parts;
  switch (base) {
    case FactorBase::X:
      parts = {{a, xhat(1)}};
      break;
    case FactorBase::Xm1:
      parts = {{a, xhat(1)}, {Rat(0), XSeries("u", ParamRat(-1), 0, utrust)}};
      break;
    case FactorBase::XmT:
      parts = {{a, xhat(1)}, {b, XSeries("u", ParamRat(-1), 0, utrust)}};
      break;
    case FactorBase::XpT:
      parts = {{a, xhat(1)}, {b, XSeries("u", ParamRat(1), 0, utrust)}};
      break;
    case FactorBase::X2pT:
      parts = {{2 * a, xhat(2)}, {b, XSeries("u", ParamRat(1), 0, utrust)}};
      break;
  }
  Rat gamma = parts[0].first;
  for (auto& [e, s] : parts) gamma = std::min(gamma, e);
  BiSeries f("Lam");
  for (auto& [e, s] : parts) {
    XSeries prev = f.coeff_unchecked(e - gamma);
    f.set(e - gamma, prev + s);
  }
  f.set_trust(ltrust);
  return {gamma, f};
}

}  // namespace detail

// lbud: Lam-orders 0..lbud are produced; ubud: u-depth carried per slice.
inline RescaledPotential rescale_potential(const ExpansionCase& c,
                                           const Frame& fr, long lbud,
                                           long ubud) {
  const PotentialSpec& ps = potential(c.eq);
  const Rat a = c.dx / c.rho;   // x contributes Lam^a
  const Rat b = Rat(1) / c.rho; // t contributes Lam^b
  const Rat utrust = Rat(ubud);
  const Rat lwork = Rat(lbud) + 4;

  struct RawTerm {
    Rat gamma;
    BiSeries ser;
    ParamPoly coeff;
    bool has_E;
  };
  std::vector<RawTerm> raw;
  Rat mu;
  bool mu_set = false;
  for (const auto& t : ps.terms) {
    Rat gamma = Rat(t.tpow) * b + (t.has_E ? c.dE * b : Rat(0));
    BiSeries ser = BiSeries::one("Lam", lwork);
    for (auto& [base, pw] : t.factors) {
      auto fs = detail::base_series(base, fr, a, b, utrust, lwork);
      gamma += fs.gamma * pw;
      ser = ser * fs.f.pow_int(pw);
    }
    raw.push_back({gamma, ser, t.coeff, t.has_E});
    // the classical normalization ignores hbar-correction coefficients
    ParamPoly cl = t.coeff.coeff_of(S_hbar, 0);
    if (!cl.is_zero() && (!mu_set || gamma < mu)) {
      mu = gamma;
      mu_set = true;
    }
  }
  if (!mu_set) throw ScalingDegreeError(c.id + ": empty classical potential");

  RescaledPotential out;
  out.A = BiSeries::zero_to("Lam", Rat(lbud));
  out.B = BiSeries::zero_to("Lam", Rat(lbud));
  out.C = BiSeries::zero_to("Lam", Rat(lbud));
  out.w = -mu * c.rho;
  for (auto& rt : raw) {
    Rat off = rt.gamma - mu;
    if (!is_integer(off) || off < 0)
      throw ScalingDegreeError(c.id + ": term at Lam^" + rat_str(off) +
                               " after normalization");
    BiSeries shifted = rt.ser.shifted(off).truncated(Rat(lbud));
    if (rt.has_E) {
      if (!rt.coeff.is_constant())
        throw ScalingDegreeError(c.id + ": non-constant accessory coupling");
      out.C += shifted.scaled(XSeries(ParamRat(rt.coeff.constant_part())));
    } else {
      for (auto& [e, cc] : rt.coeff.terms()) {
        int h = e[S_hbar];
        if (h != 0 && h != 2)
          throw ScalingDegreeError(c.id + ": hbar^" + std::to_string(h) +
                                   " in potential coefficient");
        ExpVec e0 = e;
        e0[S_hbar] = 0;
        ParamPoly mono;
        mono.add_term(e0, cc);
        (h == 0 ? out.A : out.B) += shifted.scaled(XSeries(ParamRat(mono)));
      }
    }
  }
  for (const BiSeries* s : {&out.A, &out.B, &out.C})
    for (auto& [e, sl] : s->terms())
      if (!sl.known_zero() && (!is_integer(e) || e < 0))
        throw ScalingDegreeError(c.id + ": surviving slice at Lam^" +
                                 rat_str(e));

  Rat sig = out.w / (2 * c.rho) - a;
  if (!is_integer(sig) || sig < 0)
    throw ScalingDegreeError(c.id + ": sigma = " + rat_str(sig) +
                             " not a nonnegative integer");
  out.sigma = (int)to_long(sig);

  // limiting-curve certification
  out.limit0 = out.A.coeff(0) + out.C.coeff(0).scaled(c.g00);
  Rat f0 = out.limit0.floor();
  switch (c.cycle.kind) {
    case CycleKind::DoubleZero:
    case CycleKind::TwoPointDifference:
      if (f0 != 2 * c.cycle.d)
        throw DegenerationError(c.id + ": classical slice vanishes to order " +
                                rat_str(f0) + " at the cycle point");
      break;
    case CycleKind::PoleResidue:
      if (f0 != -2)
        throw DegenerationError(c.id + ": expected a double pole, found order " +
                                rat_str(f0));
      break;
    case CycleKind::AtInfinity:
      if (f0 < 0)
        throw DegenerationError(c.id + ": classical slice singular at infinity");
      break;
  }
  return out;
}

}  // namespace voros
