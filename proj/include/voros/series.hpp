#pragma once
// Truncated series arithmetic: one Puiseux-series template PSeries<C>
// (rational exponents, coefficients in a ring C), instantiated as
//
//   XSeries  = PSeries<ParamRat>   series in one variable (u, X, t, Lambda)
//   BiSeries = PSeries<XSeries>    Lambda-series whose coefficients are
//                                  local u-series: the double expansions
//                                  S = sum_l Lambda^l S^[l](u)
//
// The outer variable of BiSeries is the expansion parameter Lambda, so
// inversion/sqrt happen slice-wise in the Lambda-adic topology — exactly the
// order of expansion the residue method prescribes.
//
// Every object carries an inclusive trust order: coefficients at orders
// <= trust are exact, higher ones unknown. Binary ops compute the tightest
// sound trust. A coefficient that is zero but only known-zero to finite
// trust is kept as an explicit zero so the information survives.

#include "voros/paramrat.hpp"

#include <map>
#include <string>

namespace voros {

struct NonInvertibleLeading : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TagMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientDepth : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// coefficient-ring customization points
inline bool coeff_known_zero(const ParamRat& c) { return c.is_zero(); }
inline bool coeff_prunable(const ParamRat& c) { return c.is_zero(); }
inline ParamRat coeff_inv(const ParamRat& c) {
  if (c.is_zero()) throw NonInvertibleLeading("zero leading ParamRat");
  return c.inverse();
}
inline ParamRat coeff_sqrt(const ParamRat& c) { return c.sqrt_exact(); }

template <class C>
class PSeries {
 public:
  static Rat INF() { return Rat(1000000000); }

  PSeries() : trust_(INF()) {}
  PSeries(const ParamRat& c) : trust_(INF()) {
    C cc{c};
    if (!coeff_prunable(cc)) t_[Rat(0)] = cc;
  }
  PSeries(long n) : PSeries(ParamRat(n)) {}
  explicit PSeries(std::string var) : var_(std::move(var)), trust_(INF()) {}
  PSeries(std::string var, const C& c, const Rat& e, Rat trust)
      : var_(std::move(var)), trust_(trust) {
    if (!coeff_prunable(c)) t_[e] = c;
  }

  static PSeries zero_to(std::string var, Rat trust) {
    PSeries s(std::move(var));
    s.trust_ = trust;
    return s;
  }
  static PSeries one(const std::string& var, Rat trust) {
    return PSeries(var, C{ParamRat(1)}, Rat(0), trust);
  }
  static PSeries monomial(const std::string& var, const C& c, const Rat& e) {
    return PSeries(var, c, e, INF());
  }

  const std::string& var() const { return var_; }
  void set_var(const std::string& v) { var_ = v; }
  Rat trust() const { return trust_; }
  void set_trust(const Rat& t) {
    trust_ = t;
    t_.erase(t_.upper_bound(t), t_.end());
  }
  const std::map<Rat, C>& terms() const { return t_; }
  bool known_zero() const {
    for (auto& [e, c] : t_)
      if (!coeff_known_zero(c)) return false;
    return true;
  }
  bool is_prunable() const { return known_zero() && trust_ >= INF(); }

  Rat floor() const {
    for (auto& [e, c] : t_)
      if (!coeff_known_zero(c)) return e;
    return INF();
  }

  C coeff(const Rat& e) const {
    if (e > trust_) throw InsufficientDepth("PSeries::coeff beyond trusted order");
    auto it = t_.find(e);
    return it == t_.end() ? C() : it->second;
  }
  C coeff_unchecked(const Rat& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? C() : it->second;
  }
  void set(const Rat& e, const C& c) {
    if (coeff_prunable(c))
      t_.erase(e);
    else
      t_[e] = c;
  }
  void add_to(const Rat& e, const C& c) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      if (!coeff_prunable(c)) t_[e] = c;
    } else {
      it->second += c;
      if (coeff_prunable(it->second)) t_.erase(it);
    }
  }

  long ramification() const {
    mpz_class l = 1;
    for (auto& [e, c] : t_)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
    return l.get_si();
  }

  PSeries truncated(const Rat& hi) const {
    PSeries r(var_);
    r.trust_ = std::min(trust_, hi);
    for (auto& [e, c] : t_)
      if (e <= r.trust_) r.t_[e] = c;
    return r;
  }

  PSeries shifted(const Rat& k) const {
    PSeries r(var_);
    r.trust_ = trust_ >= INF() ? INF() : trust_ + k;
    for (auto& [e, c] : t_) r.t_[e + k] = c;
    return r;
  }

  PSeries operator-() const {
    PSeries r = *this;
    for (auto& [e, c] : r.t_) c = C() - c;
    return r;
  }

  friend PSeries operator+(const PSeries& a, const PSeries& b) {
    a.check_tag(b);
    PSeries r(a.var_.empty() ? b.var_ : a.var_);
    r.trust_ = std::min(a.trust_, b.trust_);
    for (auto& [e, c] : a.t_)
      if (e <= r.trust_) r.t_[e] = c;
    for (auto& [e, c] : b.t_) {
      if (e > r.trust_) continue;
      r.add_to(e, c);
    }
    return r;
  }
  friend PSeries operator-(const PSeries& a, const PSeries& b) { return a + (-b); }
  PSeries& operator+=(const PSeries& o) { return *this = *this + o; }
  PSeries& operator-=(const PSeries& o) { return *this = *this - o; }

  friend PSeries operator*(const PSeries& a, const PSeries& b) {
    a.check_tag(b);
    PSeries r(a.var_.empty() ? b.var_ : a.var_);
    Rat fa = a.floor(), fb = b.floor();
    Rat t1 = (a.trust_ >= INF() || fb >= INF()) ? INF() : a.trust_ + fb;
    Rat t2 = (b.trust_ >= INF() || fa >= INF()) ? INF() : b.trust_ + fa;
    r.trust_ = std::min({t1, t2, INF()});
    for (auto& [ea, ca] : a.t_)
      for (auto& [eb, cb] : b.t_) {
        Rat e = ea + eb;
        if (e > r.trust_) continue;
        r.add_to(e, ca * cb);
      }
    return r;
  }
  PSeries& operator*=(const PSeries& o) { return *this = *this * o; }

  PSeries scaled(const C& c) const {
    PSeries r(var_);
    r.trust_ = trust_;
    for (auto& [e, cc] : t_) r.add_to(e, cc * c);
    return r;
  }

  // d/du in the series variable
  PSeries derivative() const {
    PSeries r(var_);
    r.trust_ = trust_ >= INF() ? INF() : trust_ - 1;
    for (auto& [e, c] : t_) {
      if (e == 0) continue;
      r.add_to(e - 1, c * C{ParamRat(e)});
    }
    return r;
  }

  PSeries inverse() const {
    Rat f = floor();
    if (f >= INF()) throw NonInvertibleLeading("PSeries: inverse of zero");
    C lead = t_.at(f);
    C leadinv = coeff_inv(lead);
    Rat w = trust_ >= INF() ? INF() : trust_ - f;  // relative width
    PSeries g = shifted(-f).scaled(leadinv);
    g.t_.erase(Rat(0));
    g.trust_ = w;
    Rat gf = g.floor();
    if (gf <= 0 && gf < INF())
      throw NonInvertibleLeading("PSeries: tail not above leading term");
    if (gf < INF() && w >= INF())
      throw NonInvertibleLeading("PSeries: inverse of untruncated non-monomial");
    PSeries acc = one(var_, w), pw = one(var_, w);
    if (gf < INF()) {
      int sign = -1;
      for (Rat reached = gf; reached <= w; reached += gf) {
        pw = pw * g;
        acc = acc + (sign < 0 ? -pw : pw);
        sign = -sign;
        if (pw.floor() >= INF()) break;
      }
    }
    acc.trust_ = w;
    return acc.scaled(leadinv).shifted(-f);
  }

  friend PSeries operator/(const PSeries& a, const PSeries& b) {
    return a * b.inverse();
  }

  PSeries sqrt(int branch = +1) const {
    Rat f = floor();
    if (f >= INF()) {
      if (trust_ >= INF()) return *this;
      throw NonInvertibleLeading("PSeries: sqrt of truncated zero");
    }
    C lead = t_.at(f);
    C slead = coeff_sqrt(lead);
    if (branch < 0) slead = C() - slead;
    Rat w = trust_ >= INF() ? INF() : trust_ - f;
    PSeries g = shifted(-f).scaled(coeff_inv(lead));
    g.t_.erase(Rat(0));
    g.trust_ = w;
    Rat gf = g.floor();
    if (gf < INF() && w >= INF())
      throw NonInvertibleLeading("PSeries: sqrt of untruncated non-monomial");
    PSeries acc = one(var_, w), pw = one(var_, w);
    if (gf < INF()) {
      Rat binom(1);
      long k = 0;
      for (Rat reached = gf; reached <= w; reached += gf) {
        ++k;
        binom *= (Rat(1, 2) - (k - 1)) / k;
        pw = pw * g;
        acc = acc + pw.scaled(C{ParamRat(binom)});
        if (pw.floor() >= INF()) break;
      }
    }
    acc.trust_ = w;
    return acc.scaled(slead).shifted(f / 2);
  }

  // Integer power; negative powers invert first (truncate beforehand unless
  // the series is a monomial).
  PSeries pow_int(long n) const {
    if (n < 0) return inverse().pow_int(-n);
    PSeries r = one(var_, INF());
    PSeries base = *this;
    while (n > 0) {
      if (n & 1) r = r * base;
      if (n > 1) base = base * base;
      n >>= 1;
    }
    return r;
  }

 private:
  void check_tag(const PSeries& o) const {
    if (!var_.empty() && !o.var_.empty() && var_ != o.var_)
      throw TagMismatch("PSeries: mixed variable tags " + var_ + " vs " + o.var_);
  }

  std::string var_;
  std::map<Rat, C> t_;
  Rat trust_;
};

using XSeries = PSeries<ParamRat>;
using BiSeries = PSeries<XSeries>;

inline bool coeff_known_zero(const XSeries& c) { return c.known_zero(); }
inline bool coeff_prunable(const XSeries& c) { return c.is_prunable(); }
inline XSeries coeff_inv(const XSeries& c) { return c.inverse(); }
inline XSeries coeff_sqrt(const XSeries& c) { return c.sqrt(+1); }

}  // namespace voros
