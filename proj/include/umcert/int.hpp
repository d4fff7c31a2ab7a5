#pragma once

// Exact integer and rational scaffolding shared by every module. GMP carries
// the representation; values are immutable once constructed and all helpers
// are pure, so everything here is safe for concurrent use.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace umcert {

using Int = mpz_class;

// Reduced fraction with positive denominator (mpq_class canonicalizes).
using Rational = mpq_class;

class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void internal_error(const std::string& what) {
  throw std::logic_error("internal invariant violated: " + what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

inline int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }

inline std::string to_decimal(const Int& v) { return v.get_str(); }

inline Int parse_int(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (ch != ' ' && ch != '\t') t += ch;
  require(!t.empty(), "parse_int: empty input");
  Int v;
  if (mpz_set_str(v.get_mpz_t(), t.c_str(), 10) != 0)
    throw domain_error("parse_int: not a decimal integer: '" + s + "'");
  return v;
}

// Floor division: a = q*n + r with 0 <= r < |n|... here n > 0 is required,
// giving the canonical residue range [0, n) used across all modules.
inline std::pair<Int, Int> floor_divmod(const Int& a, const Int& n) {
  require(sign_of(n) > 0, "floor_divmod: modulus must be positive");
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return {q, r};
}

inline Int floor_mod(const Int& a, const Int& n) {
  require(sign_of(n) > 0, "floor_mod: modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Euclidean quotient: a = q*b + r with 0 <= r < |b| (b may be negative).
inline std::pair<Int, Int> euclid_divmod(const Int& a, const Int& b) {
  require(sign_of(b) != 0, "euclid_divmod: division by zero");
  Int q, r;
  if (sign_of(b) > 0)
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  else
    mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {q, r};
}

inline Int int_abs(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

struct IntExtGcd {
  Int g, u, v;  // g = u*a + v*b, g >= 0
};

inline IntExtGcd int_ext_gcd(const Int& a, const Int& b) {
  IntExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

inline Int invmod(const Int& a, const Int& n) {
  require(sign_of(n) > 0 && n > 1, "invmod: modulus must exceed 1");
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0)
    throw domain_error("invmod: " + to_decimal(a) + " not invertible mod " +
                       to_decimal(n));
  return r;
}

inline Int isqrt(const Int& n) {
  require(sign_of(n) >= 0, "isqrt: negative input");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool fits_long(const Int& v) { return mpz_fits_slong_p(v.get_mpz_t()); }

inline long to_long(const Int& v) {
  require(fits_long(v), "to_long: value out of range");
  return mpz_get_si(v.get_mpz_t());
}

inline unsigned long to_ulong(const Int& v) {
  require(sign_of(v) >= 0 && mpz_fits_ulong_p(v.get_mpz_t()),
          "to_ulong: value out of range");
  return mpz_get_ui(v.get_mpz_t());
}

// Floor of a rational number as an Int.
inline Int rational_floor(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace umcert
