#pragma once
// Per-frame WKB machinery. With S = sum_{m >= -1} hbar^m S_m and
// Q^res = A + hbar^2 B + C * sum_m hbar^m U_m(Lam), the Riccati equation
// hbar^2 (S^2 + dS/dX) = Q^res splits into
//
//   S_{-1}^2 = Q_0,
//   2 S_{-1} S_n = Q_{n+1} - sum_{a+b=n-1; a,b>=0} S_a S_b - S_{n-1}'   (n>=0)
//
// with Q_0 = A + C U_0, Q_1 = C U_1, Q_2 = B + C U_2, Q_m = C U_m (m >= 3).
// All rows live in the frame coordinate u; at infinity d/dX = -u^2 d/du and
// the cycle residue of a row is the u^1 coefficient, at a finite point it is
// the u^{-1} coefficient.
//
// The kernel W = C / (2 S_{-1}) carries the whole dependence of row n on the
// not-yet-determined U_{n+1}: S_n = (base with U_{n+1}=0) + W * U_{n+1}(Lam).

#include "voros/rescale.hpp"

namespace voros {

struct DegeneratePivot : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class FrameEngine {
 public:
  FrameEngine(const ExpansionCase& c, const Frame& fr, long lbud, long ubud)
      : fr_(fr), rp_(rescale_potential(c, fr, lbud, ubud)), lbud_(lbud) {}

  const Frame& frame() const { return fr_; }
  const RescaledPotential& rp() const { return rp_; }

  // U tables are indexed by the *original* Lam-order: U_m^[l] multiplies
  // hbar^m Lam^l. In the engine grading hbar_eff = hbar Lam^sigma that
  // coefficient sits at engine slice l - m*sigma, which is negative whenever
  // l < m*sigma — the U series are genuinely Laurent in Lam.
  void set_U(long m, long l, const ParamRat& v) {
    if ((long)U_.size() <= m) U_.resize(m + 1);
    if ((long)U_[m].size() <= l) U_[m].resize(l + 1);
    U_[m][l] = v;
  }
  ParamRat get_U(long m, long l) const {
    if ((long)U_.size() <= m || (long)U_[m].size() <= l) return ParamRat();
    return U_[m][l];
  }

  BiSeries Useries(long m) const {
    BiSeries s = BiSeries::zero_to("Lam", Rat(lbud_));
    if ((long)U_.size() > m)
      for (long l = 0; l < (long)U_[m].size(); ++l)
        if (!U_[m][l].is_zero())
          s.set(l - m * rp_.sigma, XSeries(U_[m][l]));
    return s;
  }

  // Row potential in the rescaled grading hbar_eff = hbar Lam^sigma. The
  // hbar^2 correction carries the *original* hbar, so it feeds row 2 shifted
  // down by 2 sigma; the shifted series must stay Lam-regular.
  BiSeries Qrow(long m) const {
    BiSeries q = rp_.C * Useries(m);
    if (m == 0) q += rp_.A;
    if (m == 2 && !rp_.B.known_zero()) {
      BiSeries b = rp_.B.shifted(Rat(-2 * rp_.sigma));
      if (b.floor() < 0)
        throw ScalingDegreeError(
            "hbar^2 correction below Lam^0 in the rescaled grading");
      q += b;
    }
    return q;
  }

  // row -1 and the division kernel; call again whenever U_0 changes
  void build_sqrt() {
    rows_.assign(1, Qrow(0).sqrt(fr_.branch));
    inv2S_ = (rows_[0] + rows_[0]).inverse();
    W_ = rp_.C * inv2S_;
  }

  // append row n = rows_.size() - 1 using the current U table
  void push_row() {
    long n = (long)rows_.size() - 1;
    BiSeries rhs = Qrow(n + 1);
    for (long a = 0; a <= n - 1 - a; ++a) {
      long b = n - 1 - a;
      BiSeries prod = rows_[a + 1] * rows_[b + 1];
      rhs -= (a == b) ? prod : prod + prod;
    }
    rhs -= dX(rows_[n]);
    rows_.push_back(rhs * inv2S_);
  }

  // incorporate a newly solved U_{m+1} entering row m at engine slice l:
  // S_m += v * Lam^l W; the stored table index is the original Lam-order.
  void bump_row(long m, long l, const ParamRat& v) {
    rows_[m + 1] += W_.shifted(l).scaled(XSeries(v));
    set_U(m + 1, l + (m + 1) * rp_.sigma, v);
  }

  long rows_built() const { return (long)rows_.size() - 1; }  // highest m + 1
  const BiSeries& row(long m) const { return rows_[m + 1]; }
  const BiSeries& W() const { return W_; }

  // d/dX of a Lam-series of u-series
  BiSeries dX(const BiSeries& s) const {
    BiSeries r = BiSeries::zero_to("Lam", s.trust());
    for (auto& [l, sl] : s.terms()) {
      XSeries d = sl.derivative();
      if (fr_.kind == FrameKind::AtInfinity)
        d = -(d * XSeries::monomial("u", ParamRat(1), 2));
      r.set(l, d);
    }
    return r;
  }

  ParamRat residue_of(const BiSeries& s, long l) const {
    Rat where = fr_.kind == FrameKind::AtInfinity ? Rat(1) : Rat(-1);
    return s.coeff(l).coeff(where);
  }
  ParamRat residue(long m, long l) const { return residue_of(rows_[m + 1], l); }
  ParamRat residueW(long l) const { return residue_of(W_, l); }

  // Riccati re-substitution defect hbar^m coefficient, rows -1..M:
  // sum_{a+b=m-2} S_a S_b + S_{m-2}' - Q_m  (valid for m <= M+1)
  BiSeries riccati_defect(long m) const {
    BiSeries acc = -Qrow(m);
    for (long a = -1; a <= m - 1; ++a) {
      long b = m - 2 - a;
      if (b < a || b > rows_built() - 1) continue;
      if (a < -1 || a > rows_built() - 1) continue;
      BiSeries prod = rows_[a + 1] * rows_[b + 1];
      acc += (a == b) ? prod : prod + prod;
    }
    if (m - 2 >= -1 && m - 2 <= rows_built() - 1) acc += dX(rows_[m - 1]);
    return acc;
  }

 private:
  Frame fr_;
  RescaledPotential rp_;
  long lbud_;
  std::vector<std::vector<ParamRat>> U_;  // U_[m][l]
  std::vector<BiSeries> rows_;            // rows_[i] = S_{i-1}
  BiSeries inv2S_, W_;
};

}  // namespace voros
