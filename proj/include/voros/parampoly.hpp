#pragma once
// Sparse multivariate polynomials in the case parameters, coefficients in the
// surd tower. The symbol universe is global and fixed; individual cases touch
// only a handful of entries each.

#include "voros/algconst.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace voros {

// Global symbol table. Order fixes the canonical printing order.
enum Sym : int {
  S_nu = 0,
  S_hbar,
  S_th0,
  S_th1,
  S_tht,
  S_thinf,
  S_aD,
  S_a,
  S_m,
  S_m1,
  S_m3,
  S_e1,
  S_e2,
  S_e3,
  S_w2,
  S_w4,
  S_dsig,
  S_d0,
  S_d1,
  S_dt,
  S_dinf,
  S_eps1,
  S_eps2,
  NSYM
};

inline const char* sym_name(int s) {
  static const char* names[NSYM] = {
      "nu", "hbar", "th0",  "th1", "tht", "thinf", "aD",   "a",
      "m",  "m1",   "m3",   "e1",  "e2",  "e3",    "w2",   "w4",
      "dsig", "d0", "d1",   "dt",  "dinf", "eps1", "eps2"};
  return names[s];
}

inline int sym_from_name(const std::string& n) {
  for (int s = 0; s < NSYM; ++s)
    if (n == sym_name(s)) return s;
  return -1;
}

using ExpVec = std::array<int16_t, NSYM>;

inline ExpVec expvec_zero() {
  ExpVec e{};
  return e;
}

class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const AlgConst& c) {
    if (!c.is_zero()) terms_[expvec_zero()] = c;
  }
  ParamPoly(const Rat& r) : ParamPoly(AlgConst(r)) {}
  ParamPoly(long n) : ParamPoly(AlgConst(n)) {}

  static ParamPoly sym(int s, int pow = 1) {
    ParamPoly p;
    ExpVec e = expvec_zero();
    e[s] = static_cast<int16_t>(pow);
    p.terms_[e] = AlgConst(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == expvec_zero());
  }
  AlgConst constant_part() const {
    auto it = terms_.find(expvec_zero());
    return it == terms_.end() ? AlgConst() : it->second;
  }
  const std::map<ExpVec, AlgConst>& terms() const { return terms_; }

  ParamPoly operator-() const {
    ParamPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  ParamPoly& operator+=(const ParamPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  ParamPoly& operator-=(const ParamPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) {
        ExpVec e;
        for (int k = 0; k < NSYM; ++k)
          e[k] = static_cast<int16_t>(ea[k] + eb[k]);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }
  bool operator<(const ParamPoly& o) const {
    auto cmp = [](const std::pair<ExpVec, AlgConst>& x,
                  const std::pair<ExpVec, AlgConst>& y) {
      if (!(x.first == y.first)) return x.first < y.first;
      return x.second.terms() < y.second.terms();
    };
    return std::lexicographical_compare(terms_.begin(), terms_.end(),
                                        o.terms_.begin(), o.terms_.end(), cmp);
  }

  // Leading term in reverse-lex order on exponent vectors (the map's last
  // entry): used by exact division and monic normalization.
  std::pair<ExpVec, AlgConst> leading() const {
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }

  int degree(int s) const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max<int>(d, e[s]);
    return d;
  }
  bool depends_on(int s) const {
    for (auto& [e, c] : terms_)
      if (e[s] != 0) return true;
    return false;
  }

  // Coefficient of sym^k (a polynomial in the remaining symbols).
  ParamPoly coeff_of(int s, int k) const {
    ParamPoly r;
    for (auto& [e, c] : terms_)
      if (e[s] == k) {
        ExpVec e2 = e;
        e2[s] = 0;
        r.add_term(e2, c);
      }
    return r;
  }

  ParamPoly scaled(const AlgConst& c) const {
    ParamPoly r;
    if (c.is_zero()) return r;
    for (auto& [e, cc] : terms_) r.add_term(e, cc * c);
    return r;
  }

  // Substitute sym -> value (value a polynomial); other symbols untouched.
  ParamPoly subst(int s, const ParamPoly& value) const {
    ParamPoly out;
    for (auto& [e, c] : terms_) {
      ExpVec e2 = e;
      int k = e2[s];
      e2[s] = 0;
      ParamPoly t;
      t.add_term(e2, c);
      for (int j = 0; j < k; ++j) t = t * value;
      out += t;
    }
    return out;
  }

  // Exact division; nullopt when the remainder is nonzero.
  static std::optional<ParamPoly> try_divide(const ParamPoly& a,
                                             const ParamPoly& b) {
    if (b.is_zero()) return std::nullopt;
    ParamPoly rem = a, q;
    auto [eb, cb] = b.leading();
    AlgConst cbinv = cb.inverse();
    while (!rem.is_zero()) {
      auto [er, cr] = rem.leading();
      ExpVec e;
      for (int k = 0; k < NSYM; ++k) {
        int d = er[k] - eb[k];
        if (d < 0) return std::nullopt;
        e[k] = static_cast<int16_t>(d);
      }
      ParamPoly mono;
      mono.add_term(e, cr * cbinv);
      q += mono;
      rem -= mono * b;
    }
    return q;
  }

  void add_term(const ExpVec& e, const AlgConst& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  std::map<ExpVec, AlgConst> terms_;
};

}  // namespace voros
