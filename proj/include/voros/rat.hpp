#pragma once
// Exact rational scalars on top of GMP, plus a few helpers the series layer
// needs (integrality tests, perfect-square roots, p/q formatting).

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace voros {

using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::runtime_error("to_long: non-integer rational");
  if (!r.get_num().fits_slong_p()) throw std::runtime_error("to_long: overflow");
  return r.get_num().get_si();
}

// r^k for integer k (k may be negative; r must be nonzero then).
inline Rat rat_pow(const Rat& r, long k) {
  if (k == 0) return Rat(1);
  bool inv = k < 0;
  unsigned long e = static_cast<unsigned long>(inv ? -k : k);
  Rat out;
  mpz_pow_ui(out.get_num().get_mpz_t(), r.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den().get_mpz_t(), r.get_den().get_mpz_t(), e);
  out.canonicalize();
  if (inv) {
    if (out == 0) throw std::runtime_error("rat_pow: zero to negative power");
    out = 1 / out;
  }
  return out;
}

// Exact square root if r is a perfect square of a rational (r >= 0).
inline std::optional<Rat> rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  mpz_class n = r.get_num(), d = r.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rat(sn, sd);
  }
  return std::nullopt;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace voros
