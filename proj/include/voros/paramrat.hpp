#pragma once
// Rational functions in the parameters with the denominator kept as a
// multiset of monic polynomial factors. Simplification is exact trial
// division against each factor only — all denominators produced by the
// residue/Riccati pipelines arise as products of simple factors like
// (2nu + m*hbar) or (4nu^2 - hbar^2), so no general multivariate gcd is
// needed.

#include "voros/parampoly.hpp"

#include <map>

namespace voros {

class ParamRat {
 public:
  ParamRat() = default;
  ParamRat(const ParamPoly& p) : num_(p) {}
  ParamRat(const AlgConst& c) : num_(c) {}
  ParamRat(const Rat& r) : num_(r) {}
  ParamRat(long n) : num_(n) {}

  static ParamRat sym(int s, int pow = 1) { return ParamRat(ParamPoly::sym(s, pow)); }

  static ParamRat frac(const ParamPoly& n, const ParamPoly& d) {
    ParamRat r(n);
    r.divide_by_poly(d);
    return r;
  }

  const ParamPoly& num() const { return num_; }
  const std::map<ParamPoly, int>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  AlgConst constant_value() const { return num_.constant_part(); }

  ParamPoly den_poly() const {
    ParamPoly d{AlgConst(1)};
    for (auto& [f, m] : den_)
      for (int k = 0; k < m; ++k) d *= f;
    return d;
  }

  ParamRat operator-() const {
    ParamRat r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend ParamRat operator+(const ParamRat& a, const ParamRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // lcm of the factor multisets
    std::map<ParamPoly, int> lcm = a.den_;
    for (auto& [f, m] : b.den_) {
      auto it = lcm.find(f);
      if (it == lcm.end())
        lcm[f] = m;
      else
        it->second = std::max(it->second, m);
    }
    ParamPoly na = a.num_, nb = b.num_;
    for (auto& [f, m] : lcm) {
      int ma = 0, mb = 0;
      if (auto it = a.den_.find(f); it != a.den_.end()) ma = it->second;
      if (auto it = b.den_.find(f); it != b.den_.end()) mb = it->second;
      for (int k = ma; k < m; ++k) na *= f;
      for (int k = mb; k < m; ++k) nb *= f;
    }
    ParamRat r;
    r.num_ = na + nb;
    r.den_ = lcm;
    r.simplify();
    return r;
  }
  friend ParamRat operator-(const ParamRat& a, const ParamRat& b) { return a + (-b); }
  ParamRat& operator+=(const ParamRat& o) { return *this = *this + o; }
  ParamRat& operator-=(const ParamRat& o) { return *this = *this - o; }

  friend ParamRat operator*(const ParamRat& a, const ParamRat& b) {
    if (a.is_zero() || b.is_zero()) return ParamRat();
    ParamRat r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (auto& [f, m] : b.den_) r.den_[f] += m;
    r.simplify();
    return r;
  }
  ParamRat& operator*=(const ParamRat& o) { return *this = *this * o; }

  ParamRat inverse() const {
    if (is_zero()) throw std::runtime_error("ParamRat: inverse of zero");
    ParamRat r;
    r.num_ = ParamPoly(AlgConst(1));
    for (auto& [f, m] : den_)
      for (int k = 0; k < m; ++k) r.num_ *= f;
    r.divide_by_poly(num_);
    return r;
  }
  friend ParamRat operator/(const ParamRat& a, const ParamRat& b) {
    return a * b.inverse();
  }

  bool operator==(const ParamRat& o) const {
    // cross-multiplied comparison; factored forms need not match
    return (num_ * o.den_poly()) == (o.num_ * den_poly());
  }
  bool operator!=(const ParamRat& o) const { return !(*this == o); }

  // Substitute a symbol by a rational function everywhere.
  ParamRat subst(int s, const ParamRat& value) const {
    ParamRat out = subst_poly(num_, s, value);
    for (auto& [f, m] : den_) {
      ParamRat fv = subst_poly(f, s, value);
      for (int k = 0; k < m; ++k) out = out / fv;
    }
    return out;
  }

  bool depends_on(int s) const {
    if (num_.depends_on(s)) return true;
    for (auto& [f, m] : den_)
      if (f.depends_on(s)) return true;
    return false;
  }

  // Taylor coefficients in one symbol about 0, orders 0..N. Requires every
  // denominator factor to have an invertible constant term in that symbol.
  std::vector<ParamRat> taylor(int s, int N) const {
    std::vector<ParamRat> numc(N + 1);
    for (int k = 0; k <= N; ++k) numc[k] = ParamRat(num_.coeff_of(s, k));
    for (auto& [f, m] : den_)
      for (int rep = 0; rep < m; ++rep) {
        ParamRat f0(f.coeff_of(s, 0));
        if (f0.is_zero())
          throw std::runtime_error("ParamRat::taylor: denominator vanishes at 0");
        ParamRat f0inv = f0.inverse();
        std::vector<ParamRat> out(N + 1);
        for (int k = 0; k <= N; ++k) {
          ParamRat acc = numc[k];
          for (int j = 1; j <= k; ++j)
            acc -= ParamRat(f.coeff_of(s, j)) * out[k - j];
          out[k] = acc * f0inv;
        }
        numc = std::move(out);
      }
    return numc;
  }

  // Exact square root for monomial-like inputs (constant * even powers of
  // symbols over even-multiplicity factors); what sqrt(Q0) leading data needs.
  ParamRat sqrt_exact() const {
    if (is_zero()) return ParamRat();
    if (num_.terms().size() != 1)
      throw BranchError("ParamRat::sqrt: numerator not a monomial");
    auto [e, c] = *num_.terms().begin();
    ExpVec h;
    for (int k = 0; k < NSYM; ++k) {
      if (e[k] % 2 != 0) throw BranchError("ParamRat::sqrt: odd symbol power");
      h[k] = static_cast<int16_t>(e[k] / 2);
    }
    ParamRat r;
    r.num_ = ParamPoly();
    r.num_.add_term(h, c.sqrt());
    for (auto& [f, m] : den_) {
      if (m % 2 != 0) throw BranchError("ParamRat::sqrt: odd factor multiplicity");
      r.den_[f] = m / 2;
    }
    return r;
  }

  // Signed rational content: gcd of all rational coordinates, sign taken from
  // the leading coefficient, so p / content(p) is integer-primitive.
  static Rat signed_content(const ParamPoly& p) {
    mpz_class g = 0, l = 1;
    for (auto& [e, c] : p.terms())
      for (auto& [m, r] : c.terms()) {
        mpz_class n = abs(r.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
      }
    if (g == 0) return Rat(1);
    Rat c(g, l);
    c.canonicalize();
    auto lead = p.leading().second;
    if (lead.terms().begin()->second < 0) c = -c;
    return c;
  }

  void divide_by_poly(const ParamPoly& d) {
    if (d.is_zero()) throw std::runtime_error("ParamRat: division by zero poly");
    if (d.is_constant()) {
      num_ = num_.scaled(d.constant_part().inverse());
      return;
    }
    // normalize the factor to its integer-primitive form, folding the content
    // into the numerator
    Rat c = signed_content(d);
    ParamPoly prim = d.scaled(AlgConst(1 / c));
    num_ = num_.scaled(AlgConst(1 / c));
    den_[prim] += 1;
    simplify();
  }

 private:
  static ParamRat subst_poly(const ParamPoly& p, int s, const ParamRat& value) {
    ParamRat out;
    for (auto& [e, c] : p.terms()) {
      ExpVec e2 = e;
      int k = e2[s];
      e2[s] = 0;
      ParamPoly mono;
      mono.add_term(e2, c);
      ParamRat t{mono};
      for (int j = 0; j < k; ++j) t *= value;
      out += t;
    }
    return out;
  }

  void simplify() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
      while (it->second > 0) {
        auto q = ParamPoly::try_divide(num_, it->first);
        if (!q) break;
        num_ = *q;
        --it->second;
      }
      if (it->second == 0)
        it = den_.erase(it);
      else
        ++it;
    }
  }

  ParamPoly num_;
  std::map<ParamPoly, int> den_;  // monic factor -> multiplicity
};

}  // namespace voros
