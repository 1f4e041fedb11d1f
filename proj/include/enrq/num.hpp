#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace enrq {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

// Rational vector (coordinates of a lattice vector, divisor part of a
// cohomology class, coefficients over a descendent basis).
using QVec = std::vector<Rat>;
using QMat = std::vector<std::vector<Rat>>;

// Parses "p/q" or "p" in base 10. Throws on malformed input or q = 0.
inline Rat parse_rat(const std::string& text) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

// Canonical "p/q" (or "p" when q = 1) in base 10.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

// mpq_class(p, q) does not canonicalize; this does.
inline Rat frac(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact square root of a perfect-square rational; false when no rational
// square root exists (or x < 0).
inline bool rat_sqrt(const Rat& x, Rat& out) {
  if (sgn(x) < 0) return false;
  Int num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), x.get_num().get_mpz_t(), 2) == 0) return false;
  if (mpz_root(den_root.get_mpz_t(), x.get_den().get_mpz_t(), 2) == 0) return false;
  out = Rat(num_root, den_root);
  out.canonicalize();
  return true;
}

inline QVec zero_vec(int n) { return QVec(static_cast<size_t>(n), Rat(0)); }

inline QVec vec_add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec vec_scale(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline QVec vec_neg(const QVec& a) { return vec_scale(Rat(-1), a); }

inline bool vec_is_zero(const QVec& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

inline bool vec_is_integral(const QVec& a) {
  for (const auto& x : a)
    if (!is_integer(x)) return false;
  return true;
}

}  // namespace enrq
