#pragma once
// Canonical textual form for ParamRat and a recursive-descent parser that
// round-trips it. The same parser accepts general +,-,*,/,^ expressions in
// the symbols and surd generators, which is how all catalog coefficient data
// is entered.
//
// Canonical shape:   (-20*nu^2 - 7*hbar^2)/(2*(4*nu^2 - hbar^2)^3*(nu^2 - hbar^2))

#include "voros/paramrat.hpp"

#include <cctype>
#include <memory>
#include <sstream>

namespace voros {

// ---------------------------------------------------------------- emission

inline std::string surdmono_str(const SurdMono& m) {
  std::string s;
  auto app = [&](const char* n, int e) {
    for (int k = 0; k < e; ++k) {
      if (!s.empty()) s += "*";
      s += n;
    }
  };
  app("I", m.i);
  app("sqrt2", m.s2);
  app("sqrt3", m.s3);
  app("p", m.p);
  app("cbrt2", m.c3);
  return s;
}

// AlgConst as a flat product/sum string; `need_parens` reports whether the
// result is a sum.
inline std::string algconst_str(const AlgConst& c, bool* is_sum = nullptr) {
  if (is_sum) *is_sum = false;
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, r] : c.terms()) {
    std::string mono = surdmono_str(m);
    Rat rr = r;
    if (first) {
      if (rr < 0) {
        os << "-";
        rr = -rr;
      }
    } else {
      os << (rr < 0 ? " - " : " + ");
      if (rr < 0) rr = -rr;
    }
    if (mono.empty())
      os << rat_str(rr);
    else if (rr == 1)
      os << mono;
    else
      os << rat_str(rr) << "*" << mono;
    first = false;
  }
  if (is_sum && c.terms().size() > 1) *is_sum = true;
  return os.str();
}

inline std::string poly_str(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // reverse map order: descending lex on exponent vectors
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string vars;
    for (int s = 0; s < NSYM; ++s) {
      if (e[s] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += sym_name(s);
      if (e[s] > 1) vars += "^" + std::to_string(e[s]);
    }
    // coefficient
    AlgConst cc = c;
    std::string sep = first ? "" : " + ";
    if (cc.terms().size() == 1) {
      Rat r = cc.terms().begin()->second;
      if (r < 0) {
        sep = first ? "-" : " - ";
        cc = -cc;
      }
    }
    os << sep;
    bool sum = false;
    std::string cs = algconst_str(cc, &sum);
    if (vars.empty()) {
      os << (sum ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
      os << vars;
    } else {
      os << (sum ? "(" + cs + ")" : cs) << "*" << vars;
    }
    first = false;
  }
  return os.str();
}

// gcd-content of all rational coordinates of all coefficients (positive).
inline Rat poly_content(const ParamPoly& p) {
  mpz_class g = 0, l = 1;
  for (auto& [e, c] : p.terms())
    for (auto& [m, r] : c.terms()) {
      mpz_class n = r.get_num();
      if (n < 0) n = -n;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
    }
  if (g == 0) return Rat(1);
  return Rat(g, l);
}

inline std::string ratfun_str(const ParamRat& x) {
  if (x.is_zero()) return "0";
  if (x.is_poly()) return poly_str(x.num());
  // clear coefficient denominators of the numerator into a denominator constant
  mpz_class l = 1;
  for (auto& [e, c] : x.num().terms())
    for (auto& [m, r] : c.terms())
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
  ParamPoly num = x.num().scaled(AlgConst(Rat(l)));
  std::ostringstream den;
  if (l != 1) den << l.get_str();
  // descending factor order (largest leading coefficient first)
  for (auto it = x.den().rbegin(); it != x.den().rend(); ++it) {
    auto& [f, m] = *it;
    if (den.tellp() > 0) den << "*";
    den << "(" << poly_str(f) << ")";
    if (m > 1) den << "^" << m;
  }
  std::string ns = poly_str(num);
  bool nparens = num.terms().size() > 1;
  std::ostringstream os;
  os << (nparens ? "(" + ns + ")" : ns) << "/";
  std::string ds = den.str();
  bool oneatom = x.den().size() == 1 && x.den().rbegin()->second == 1 && l == 1;
  os << (oneatom ? ds : "(" + ds + ")");
  return os.str();
}

// ---------------------------------------------------------------- parsing

// Expressions are parsed to a small tree first so that division can be
// applied factor-by-factor: "x/(2*(f)^3*(g))" must register f and g as
// separate denominator factors with their multiplicities, not one expanded
// polynomial.
struct RatExpr {
  enum Kind { Num, Atom, Neg, Add, Sub, Mul, Div, Pow } kind;
  Rat num;            // Kind::Num
  ParamRat atom;      // Kind::Atom (symbol or surd generator)
  std::unique_ptr<RatExpr> a, b;
  long e = 0;         // Kind::Pow exponent (may be negative)
};

inline ParamRat rat_expr_eval(const RatExpr* n);

// Divide r by the expression n, descending through products and powers.
inline void rat_expr_div(ParamRat& r, const RatExpr* n) {
  switch (n->kind) {
    case RatExpr::Mul:
      rat_expr_div(r, n->a.get());
      rat_expr_div(r, n->b.get());
      return;
    case RatExpr::Neg:
      rat_expr_div(r, n->a.get());
      r = -r;
      return;
    case RatExpr::Pow: {
      long e = n->e;
      if (e >= 0)
        for (long k = 0; k < e; ++k) rat_expr_div(r, n->a.get());
      else
        for (long k = 0; k < -e; ++k) r *= rat_expr_eval(n->a.get());
      return;
    }
    case RatExpr::Num:
      r *= ParamRat(1 / n->num);
      return;
    default:
      r = r / rat_expr_eval(n);
      return;
  }
}

inline ParamRat rat_expr_eval(const RatExpr* n) {
  switch (n->kind) {
    case RatExpr::Num:
      return ParamRat(n->num);
    case RatExpr::Atom:
      return n->atom;
    case RatExpr::Neg:
      return -rat_expr_eval(n->a.get());
    case RatExpr::Add:
      return rat_expr_eval(n->a.get()) + rat_expr_eval(n->b.get());
    case RatExpr::Sub:
      return rat_expr_eval(n->a.get()) - rat_expr_eval(n->b.get());
    case RatExpr::Mul:
      return rat_expr_eval(n->a.get()) * rat_expr_eval(n->b.get());
    case RatExpr::Div: {
      ParamRat r = rat_expr_eval(n->a.get());
      rat_expr_div(r, n->b.get());
      return r;
    }
    case RatExpr::Pow: {
      long e = n->e;
      ParamRat out(1);
      if (e >= 0) {
        for (long k = 0; k < e; ++k) out *= rat_expr_eval(n->a.get());
      } else {
        for (long k = 0; k < -e; ++k) rat_expr_div(out, n->a.get());
      }
      return out;
    }
  }
  throw std::logic_error("rat_expr_eval: bad node");
}

class RatExprParser {
 public:
  explicit RatExprParser(const std::string& s) : s_(s) {}

  ParamRat parse() {
    auto n = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw std::runtime_error("parse error at '" + s_.substr(pos_) + "'");
    return rat_expr_eval(n.get());
  }

 private:
  using Node = std::unique_ptr<RatExpr>;

  static Node mk(RatExpr::Kind k) {
    auto n = std::make_unique<RatExpr>();
    n->kind = k;
    return n;
  }
  static Node mk2(RatExpr::Kind k, Node a, Node b) {
    auto n = mk(k);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Node expr() {
    Node r = term();
    for (;;) {
      if (eat('+'))
        r = mk2(RatExpr::Add, std::move(r), term());
      else if (eat('-'))
        r = mk2(RatExpr::Sub, std::move(r), term());
      else
        return r;
    }
  }
  Node term() {
    Node r = factor();
    for (;;) {
      if (eat('*'))
        r = mk2(RatExpr::Mul, std::move(r), factor());
      else if (eat('/'))
        r = mk2(RatExpr::Div, std::move(r), factor());
      else
        return r;
    }
  }
  Node factor() {
    if (eat('-')) {
      Node n = mk(RatExpr::Neg);
      n->a = factor();
      return n;
    }
    Node base = primary();
    if (eat('^')) {
      bool neg = eat('-');
      Node n = mk(RatExpr::Pow);
      n->a = std::move(base);
      n->e = integer();
      if (neg) n->e = -n->e;
      return n;
    }
    return base;
  }
  Node primary() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Node r = expr();
      if (!eat(')')) throw std::runtime_error("parse error: expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        digits += s_[pos_++];
      Node n = mk(RatExpr::Num);
      n->num = Rat(mpz_class(digits));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      Node n = mk(RatExpr::Atom);
      if (name == "I")
        n->atom = ParamRat(AlgConst::gen_i());
      else if (name == "sqrt2")
        n->atom = ParamRat(AlgConst::gen_sqrt2());
      else if (name == "sqrt3")
        n->atom = ParamRat(AlgConst::gen_sqrt3());
      else if (name == "cbrt2")
        n->atom = ParamRat(AlgConst::gen_cbrt2());
      else if (name == "p")
        n->atom = ParamRat(AlgConst::gen_p());
      else if (name == "q")
        n->atom = ParamRat(AlgConst::gen_q());
      else if (int s = sym_from_name(name); s >= 0)
        n->atom = ParamRat::sym(s);
      else
        throw std::runtime_error("parse error: unknown symbol '" + name + "'");
      return n;
    }
    throw std::runtime_error(std::string("parse error: unexpected '") + c + "'");
  }
  long integer() {
    skip_ws();
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      digits += s_[pos_++];
    if (digits.empty()) throw std::runtime_error("parse error: expected integer");
    return std::stol(digits);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

inline ParamRat parse_rat(const std::string& s) { return RatExprParser(s).parse(); }

}  // namespace voros
