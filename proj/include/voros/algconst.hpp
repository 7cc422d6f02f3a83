#pragma once
// Constant field for all 17 expansion cases: Q adjoined with
//   I     (I^2 = -1)
//   sqrt2 (sqrt2^2 = 2)
//   sqrt3 (sqrt3^2 = 3)
//   cbrt2 (cbrt2^3 = 2)          -- needed by the reduced doubly confluent
//                                    large-t curve, whose double zero sits
//                                    at X = 2^{1/3}
//   p     (p^2 = I*sqrt2*sqrt3/2) -- p = sqrt(3q) with q = I/sqrt6, q^2 = -1/6
//
// An element is a Q-linear combination of the 48 reduced generator monomials.
// The tower is global; individual cases only ever touch the generators their
// coefficients need, so elements stay one or two terms long in practice.

#include "voros/rat.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace voros {

struct BranchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Packed generator exponents: I, sqrt2, sqrt3, p in {0,1}; cbrt2 in {0,1,2}.
struct SurdMono {
  int i = 0, s2 = 0, s3 = 0, p = 0, c3 = 0;
  bool operator<(const SurdMono& o) const {
    if (i != o.i) return i < o.i;
    if (s2 != o.s2) return s2 < o.s2;
    if (s3 != o.s3) return s3 < o.s3;
    if (p != o.p) return p < o.p;
    return c3 < o.c3;
  }
  bool operator==(const SurdMono& o) const {
    return i == o.i && s2 == o.s2 && s3 == o.s3 && p == o.p && c3 == o.c3;
  }
  bool trivial() const { return i == 0 && s2 == 0 && s3 == 0 && p == 0 && c3 == 0; }
};

class AlgConst {
 public:
  AlgConst() = default;
  AlgConst(const Rat& r) {
    if (r != 0) terms_[SurdMono{}] = r;
  }
  AlgConst(long n) : AlgConst(Rat(n)) {}

  static AlgConst gen_i() { return monomial(SurdMono{1, 0, 0, 0, 0}); }
  static AlgConst gen_sqrt2() { return monomial(SurdMono{0, 1, 0, 0, 0}); }
  static AlgConst gen_sqrt3() { return monomial(SurdMono{0, 0, 1, 0, 0}); }
  static AlgConst gen_p() { return monomial(SurdMono{0, 0, 0, 1, 0}); }
  static AlgConst gen_cbrt2() { return monomial(SurdMono{0, 0, 0, 0, 1}); }
  // q = I*sqrt2*sqrt3/6 (so q^2 = -1/6, and p^2 = 3q).
  static AlgConst gen_q() {
    AlgConst a = monomial(SurdMono{1, 1, 1, 0, 0});
    return a * AlgConst(Rat(1, 6));
  }

  static AlgConst monomial(SurdMono m, Rat c = Rat(1)) {
    AlgConst a;
    reduce(m, c);
    if (c != 0) a.terms_[m] = c;
    return a;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.trivial();
  }
  Rat rational_part() const {
    auto it = terms_.find(SurdMono{});
    return it == terms_.end() ? Rat(0) : it->second;
  }
  const std::map<SurdMono, Rat>& terms() const { return terms_; }

  AlgConst operator-() const {
    AlgConst r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  AlgConst& operator+=(const AlgConst& o) {
    for (auto& [m, c] : o.terms_) {
      auto it = terms_.find(m);
      if (it == terms_.end()) {
        terms_[m] = c;
      } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  AlgConst& operator-=(const AlgConst& o) { return *this += -o; }
  friend AlgConst operator+(AlgConst a, const AlgConst& b) { return a += b; }
  friend AlgConst operator-(AlgConst a, const AlgConst& b) { return a -= b; }

  friend AlgConst operator*(const AlgConst& a, const AlgConst& b) {
    AlgConst r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        SurdMono m{ma.i + mb.i, ma.s2 + mb.s2, ma.s3 + mb.s3, ma.p + mb.p,
                   ma.c3 + mb.c3};
        Rat c = ca * cb;
        reduce(m, c);
        r += monomial_unchecked(m, c);
      }
    return r;
  }
  AlgConst& operator*=(const AlgConst& o) { return *this = *this * o; }

  bool operator==(const AlgConst& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgConst& o) const { return !(*this == o); }

  AlgConst inverse() const {
    if (is_zero()) throw std::runtime_error("AlgConst: inverse of zero");
    if (is_rational()) return AlgConst(1 / rational_part());
    if (terms_.size() == 1) {
      // mono^N is rational for some small N; then 1/x = x^{N-1} / x^N.
      AlgConst pw = *this;              // x^{n}
      AlgConst prev(Rat(1));            // x^{n-1}
      for (int n = 1; n <= 12; ++n) {
        if (pw.is_rational()) return prev * AlgConst(1 / pw.rational_part());
        prev = pw;
        pw = pw * *this;
      }
      // fall through to the linear solve
    }
    return inverse_by_solve();
  }

  // sqrt restricted to rational multiples of a generator monomial (all the
  // leading coefficients the catalog produces are of this shape).
  AlgConst sqrt() const {
    if (is_zero()) return AlgConst();
    if (terms_.size() != 1)
      throw BranchError("AlgConst::sqrt: not a monomial surd");
    SurdMono target = terms_.begin()->first;
    Rat c = terms_.begin()->second;
    for (int i = 0; i < 2; ++i)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int s3 = 0; s3 < 2; ++s3)
          for (int p = 0; p < 2; ++p)
            for (int c3 = 0; c3 < 3; ++c3) {
              SurdMono tau{i, s2, s3, p, c3};
              SurdMono sq{2 * i, 2 * s2, 2 * s3, 2 * p, 2 * c3};
              Rat r(1);
              reduce(sq, r);
              if (!(sq == target)) continue;
              auto s = rat_sqrt(c / r);
              if (s) return monomial(tau, *s);
            }
    throw BranchError("AlgConst::sqrt: no square root in the tower");
  }

 private:
  static AlgConst monomial_unchecked(SurdMono m, const Rat& c) {
    AlgConst a;
    if (c != 0) a.terms_[m] = c;
    return a;
  }

  // Reduce generator exponents via the defining relations; p^2 feeds back
  // I*sqrt2*sqrt3, so iterate to a fixed point.
  static void reduce(SurdMono& m, Rat& c) {
    for (;;) {
      bool again = false;
      while (m.i >= 2) {
        m.i -= 2;
        c = -c;
      }
      while (m.s2 >= 2) {
        m.s2 -= 2;
        c *= 2;
      }
      while (m.s3 >= 2) {
        m.s3 -= 2;
        c *= 3;
      }
      while (m.c3 >= 3) {
        m.c3 -= 3;
        c *= 2;
      }
      while (m.p >= 2) {
        m.p -= 2;
        c /= 2;
        m.i += 1;
        m.s2 += 1;
        m.s3 += 1;
        again = true;
      }
      if (!again) break;
    }
  }

  AlgConst inverse_by_solve() const;

  std::map<SurdMono, Rat> terms_;
};

// Dense linear solve a*x = 1 over the 48-dimensional Q-basis; only reached for
// multi-term elements, which the catalog produces rarely.
inline AlgConst AlgConst::inverse_by_solve() const {
  auto index = [](const SurdMono& m) {
    return ((m.i * 2 + m.s2) * 2 + m.s3) * 2 + m.p + 16 * m.c3;
  };
  auto unindex = [](int k) {
    SurdMono m;
    m.c3 = k / 16;
    int r = k % 16;
    m.p = r & 1;
    m.s3 = (r >> 1) & 1;
    m.s2 = (r >> 2) & 1;
    m.i = (r >> 3) & 1;
    return m;
  };
  const int N = 48;
  std::vector<std::vector<Rat>> M(N, std::vector<Rat>(N + 1, Rat(0)));
  for (int k = 0; k < N; ++k) {
    AlgConst col = *this * monomial(unindex(k));
    for (auto& [m, c] : col.terms_) M[index(m)][k] = c;
  }
  M[0][N] = 1;
  // Gaussian elimination.
  for (int col = 0, row = 0; col < N && row < N; ++col) {
    int piv = -1;
    for (int r = row; r < N; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[piv], M[row]);
    Rat lead = M[row][col];
    for (auto& v : M[row]) v /= lead;
    for (int r = 0; r < N; ++r)
      if (r != row && M[r][col] != 0) {
        Rat f = M[r][col];
        for (int cc = col; cc <= N; ++cc) M[r][cc] -= f * M[row][cc];
      }
    ++row;
  }
  AlgConst x;
  // Back-substitute: rows are in echelon form with unit pivots.
  std::vector<Rat> sol(N, Rat(0));
  for (int r = N - 1; r >= 0; --r) {
    int lead = -1;
    for (int cidx = 0; cidx < N; ++cidx)
      if (M[r][cidx] != 0) {
        lead = cidx;
        break;
      }
    if (lead < 0) {
      if (M[r][N] != 0) throw std::runtime_error("AlgConst: singular inverse");
      continue;
    }
    Rat v = M[r][N];
    for (int cidx = lead + 1; cidx < N; ++cidx) v -= M[r][cidx] * sol[cidx];
    sol[lead] = v;
  }
  for (int k = 0; k < N; ++k)
    if (sol[k] != 0) x += monomial(unindex(k), sol[k]);
  return x;
}

}  // namespace voros
