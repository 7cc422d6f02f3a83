#pragma once
// The rational-function method: an independent second engine for the t -> 0
// pole-residue cases, exact in hbar. Expanding only in Lam (= t) and keeping
// hbar symbolic, the Riccati equation splits per Lam-order into coefficient
// recursions
//
//   (2*lambda + m) S^[l]_m = F^[l]_m,     lambda = nu/hbar + v0,
//
// for the Laurent coefficients S^[l]_m of S^[l](X) at the cycle point X = 0.
// F^[l]_m depends on earlier slices (and on lower m), and contains the
// accessory slice G^[l] exactly through the X^-2 coefficient of the E-term;
// the residue conditions Res S^[0] = lambda, Res S^[l] = 0 (l >= 1) therefore
// pin G^[l] at the m = -1 step and everything else by division by the pivot
// (2*lambda + m), which is invertible as long as 2*nu/hbar is not an integer.
//
// The result G^[l](nu, theta, hbar) is an exact rational function whose
// hbar-Taylor coefficients reproduce the G_k^[l] table of the residue-
// condition solver column by column.
//
// For the double-zero (irregular) cases the same interchange of expansions
// yields E-coefficients that are *polynomials* in hbar: the hbar-series of a
// fixed t-power terminates. rational_solve exposes those too, by running the
// residue-condition solver deep enough in hbar to certify termination.

#include "voros/solver.hpp"

namespace voros {

struct ResonantParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact-in-hbar accessory expansion: E = sum_l t^{dE + rho*l} G[l].
struct RationalExpansion {
  std::string case_id;
  long L = 0;
  std::vector<ParamRat> G;
};

namespace detail_rat {

// One Laurent slice in X: exact coefficients for exponents <= mmax.
struct Slice {
  std::map<long, ParamRat> c;
  long mmax = 0;
  ParamRat at(long j) const {
    if (j > mmax)
      throw InsufficientDepth("rational method: slice coefficient beyond budget");
    auto it = c.find(j);
    return it == c.end() ? ParamRat() : it->second;
  }
  void add(long j, const ParamRat& v) {
    if (j > mmax || v.is_zero()) return;
    auto it = c.find(j);
    if (it == c.end())
      c.emplace(j, v);
    else if ((it->second += v).is_zero())
      c.erase(it);
  }
};

// Lam-expansion of one structured potential factor base^pow about X = 0,
// as slices F[l] with F[l].mmax = mmax.
inline std::vector<Slice> factor_slices(FactorBase b, int pow, long L,
                                        long mmax) {
  std::vector<Slice> F(L + 1);
  for (auto& s : F) s.mmax = mmax;
  auto binom = [](long n, long k) {
    Rat r(1);
    for (long i = 0; i < k; ++i) r *= Rat(n - i, i + 1);
    return r;
  };
  switch (b) {
    case FactorBase::X:
      F[0].add(pow, ParamRat(1));
      return F;
    case FactorBase::Xm1:
      if (pow >= 0) {
        for (long j = 0; j <= pow; ++j)
          F[0].add(pow - j, ParamRat(binom(pow, j) * Rat(j % 2 ? -1 : 1)));
      } else {
        long n = -pow;
        // (X-1)^-n = (-1)^n sum_j binom(n-1+j, j) X^j
        for (long j = 0; j <= mmax; ++j)
          F[0].add(j, ParamRat(binom(n - 1 + j, j) * Rat(n % 2 ? -1 : 1)));
      }
      return F;
    case FactorBase::XmT:
      if (pow >= 0) {
        for (long j = 0; j <= std::min<long>(pow, L); ++j)
          F[j].add(pow - j, ParamRat(binom(pow, j) * Rat(j % 2 ? -1 : 1)));
      } else {
        long n = -pow;
        // (X-t)^-n = sum_l binom(n-1+l, l) Lam^l X^{-n-l}
        for (long l = 0; l <= L; ++l)
          F[l].add(-n - l, ParamRat(binom(n - 1 + l, l)));
      }
      return F;
    default:
      throw CatalogMiss("rational method: unsupported potential factor");
  }
}

inline std::vector<Slice> convolve(const std::vector<Slice>& a,
                                   const std::vector<Slice>& b, long L,
                                   long mmax) {
  std::vector<Slice> r(L + 1);
  for (auto& s : r) s.mmax = mmax;
  for (long la = 0; la <= L; ++la)
    for (auto& [ja, va] : a[la].c)
      for (long lb = 0; lb + la <= L; ++lb)
        for (auto& [jb, vb] : b[lb].c) r[la + lb].add(ja + jb, va * vb);
  return r;
}

}  // namespace detail_rat

class RationalSolver {
 public:
  RationalSolver(const ExpansionCase& c, long L) : c_(c), L_(L) {
    if (c.cycle.kind != CycleKind::PoleResidue ||
        !(c.cycle.x_star == AlgConst(0)) || c.dx != 0)
      throw CatalogMiss(c.id + ": rational method needs the pole cycle at X = 0");
  }

  RationalExpansion run() {
    using detail_rat::Slice;
    const ParamRat nu = ParamRat::sym(S_nu);
    const ParamRat hb = ParamRat::sym(S_hbar);
    const ParamRat h2inv = (hb * hb).inverse();
    // lambda = nu/hbar + v0; pivots 2*lambda + m stay invertible because
    // 2*nu/hbar is treated as a non-integer formal symbol.
    const ParamRat lambda = nu / hb + ParamRat(c_.v0);
    auto pivot = [&](long m) {
      ParamRat p = lambda * 2 + ParamRat(m);
      if (p.is_zero())
        throw ResonantParameter(c_.id + ": pivot 2*lambda + m vanishes at m = " +
                                std::to_string(m));
      return p;
    };

    // Lam-sliced potential about X = 0: P (no E) and C (E-coefficient),
    // both already divided by hbar^2.
    const long mmax0 = L_ + 1;
    std::vector<Slice> P(L_ + 1), C(L_ + 1);
    for (auto& s : P) s.mmax = mmax0;
    for (auto& s : C) s.mmax = mmax0;
    for (const PotTerm& t : potential(c_.eq).terms) {
      std::vector<Slice> cur(L_ + 1);
      for (auto& s : cur) s.mmax = mmax0;
      if (t.tpow > L_) continue;
      cur[t.tpow].add(0, ParamRat(t.coeff) * h2inv);
      for (auto& [b, p] : t.factors)
        cur = detail_rat::convolve(cur, detail_rat::factor_slices(b, p, L_, mmax0),
                                   L_, mmax0);
      auto& tgt = t.has_E ? C : P;
      for (long l = 0; l <= L_; ++l)
        for (auto& [j, v] : cur[l].c) tgt[l].add(j, v);
    }
    if (C[0].at(-2).is_zero())
      throw DegeneratePivot(c_.id + ": E-term has no double pole at the cycle point");

    RationalExpansion out;
    out.case_id = c_.id;
    out.L = L_;
    out.G.resize(L_ + 1);
    S_.assign(L_ + 1, Slice{});

    for (long l = 0; l <= L_; ++l) {
      Slice& Sl = S_[l];
      Sl.mmax = L_ - l;
      if (l == 0) Sl.add(-1, lambda);  // Res S^[0] = lambda
      // known right-hand side (over hbar^2), before G^[l] is solved
      Slice known;
      known.mmax = mmax0;
      for (auto& [j, v] : P[l].c) known.add(j, v);
      for (long jl = 1; jl <= l; ++jl)
        for (auto& [j, v] : C[jl].c) known.add(j, v * out.G[l - jl]);
      // cross products of strictly earlier slices
      auto cross_at = [&](long e) {
        ParamRat r;
        for (long a = 1; a + 1 <= l - 1 + 1 && a <= l - 1; ++a) {
          long b = l - a;
          if (b < 1) continue;
          for (auto& [i, vi] : S_[a].c) r += vi * S_[b].at(e - i);
        }
        return r;
      };
      bool g_solved = false;
      for (long m = -l - 1; m <= Sl.mmax; ++m) {
        long e = m - 1;
        // existing-entry part of (S^2)^[l] + (S^[l])': the unknown S^[l]_m
        // enters only through the pivot (2*lambda + m)
        ParamRat lhs = cross_at(e);
        if (l == 0) {
          ParamRat sq;
          for (auto& [i, vi] : Sl.c)
            for (auto& [j, vj] : Sl.c)
              if (i + j == e) sq += vi * vj;
          lhs += sq;
        } else {
          for (auto& [i, vi] : S_[0].c) {
            long j = e - i;
            if (j >= -l - 1 && j <= Sl.mmax) lhs += ParamRat(2) * vi * Sl.at(j);
          }
        }
        if (auto it = Sl.c.find(e + 1); it != Sl.c.end())
          lhs += ParamRat(e + 1) * it->second;  // derivative of preset entries
        if (m == -1) {
          // residue condition: S^[l]_{-1} is lambda (l = 0, preset above) or 0;
          // the X^-2 equation then pins G^[l] affinely through the E-pivot.
          ParamRat slope = C[0].at(-2);
          out.G[l] = (lhs - known.at(-2)) / slope;
          g_solved = true;
          for (auto& [j, v] : C[0].c) known.add(j, v * out.G[l]);
          continue;
        }
        if (m > -1 && !g_solved)
          throw DegeneratePivot(c_.id + ": residue step skipped");
        ParamRat v = (known.at(e) - lhs) / pivot(m);
        Sl.add(m, v);
      }
    }
    return out;
  }

  // Laurent coefficient S^[l]_m of the solved slices (for oracle checks).
  ParamRat S(long l, long m) const { return S_.at(l).at(m); }

 private:
  ExpansionCase c_;
  long L_;
  std::vector<detail_rat::Slice> S_;
};

// Double-zero (irregular) cases: the E-coefficient of each t-power is a
// polynomial in hbar, so the exact answer is the terminating hbar-sum of the
// residue-condition solver's column. K is chosen to exhibit the termination
// and the extra rows are required to vanish.
inline RationalExpansion rational_solve_polynomial(const ExpansionCase& c,
                                                  long L) {
  // The hbar-degree of the t-power-l coefficient is at most 2*floor(l/2), so
  // rows K-1 and K sit strictly above every admissible degree and certify
  // termination.
  long K = L / 2 + 2;
  AccessoryExpansion ax = solve(c, K, L);
  RationalExpansion out;
  out.case_id = c.id;
  out.L = L;
  out.G.resize(L + 1);
  ParamRat h2 = ParamRat::sym(S_hbar) * ParamRat::sym(S_hbar);
  for (long l = 0; l <= L; ++l) {
    for (long k = 2 * (K - 1); k <= 2 * K; k += 2)
      if (!ax.U[k][l].is_zero())
        throw DegenerationError(c.id +
                                ": hbar-series does not terminate at l = " +
                                std::to_string(l));
    ParamRat coeff, hpow(1);
    for (long k = 0; k <= K; ++k) {
      coeff += ax.G(k, l) * hpow;
      hpow *= h2;
    }
    out.G[l] = coeff;
  }
  return out;
}

inline RationalExpansion rational_solve(const ExpansionCase& c, long L) {
  if (c.cycle.kind == CycleKind::PoleResidue) return RationalSolver(c, L).run();
  if (c.cycle.kind == CycleKind::DoubleZero ||
      c.cycle.kind == CycleKind::TwoPointDifference)
    return rational_solve_polynomial(c, L);
  throw CatalogMiss(c.id + ": rational method applies to pole or double-zero cycles");
}
inline RationalExpansion rational_solve(const std::string& id, long L) {
  return rational_solve(expansion_case(id), L);
}

// Reassemble the exact E-series from the rational slices.
inline ESeries assemble_E(const ExpansionCase& c, const RationalExpansion& rx) {
  ESeries out;
  out.case_id = c.id;
  out.truncated_in_hbar = false;
  for (long l = 0; l <= rx.L; ++l)
    if (!rx.G[l].is_zero()) out.terms.emplace_back(c.dE + c.rho * l, rx.G[l]);
  return out;
}

}  // namespace voros
