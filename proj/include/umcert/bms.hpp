#pragma once

// Bass-Milnor-Serre machinery: the divisor r(I), membership in the relative
// SL_2(S, I), deterministic completion of a first row, and the mu_r-valued
// SK_1 invariant of an explicit matrix.

#include "umcert/int.hpp"
#include "umcert/quad.hpp"
#include "umcert/residue.hpp"

#include <string>
#include <vector>

namespace umcert {

struct Mat2 {
  QuadInt a, b, c, d;  // row-major [[a, b], [c, d]]

  static Mat2 identity(RingKind k) {
    return {QuadInt::one(k), QuadInt::zero(k), QuadInt::zero(k),
            QuadInt::one(k)};
  }

  RingKind kind() const { return a.kind; }
};

inline QuadInt det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline bool operator==(const Mat2& x, const Mat2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

struct BmsPrimeLog {
  Int p;                // rational prime dividing m
  unsigned ord_p_m;     // ord_p(m)
  Rational minimand;    // minimal ord_P(I)/ord_P(Sp) - 1/(p-1) over P | p
  Int floor_pre_clamp;  // floor of the minimand, before clamping
  unsigned j;           // ord_p(r), after clamping into [0, ord_p(m)]
};

struct BmsDivisor {
  RingKind ring;
  PrincipalIdeal ideal;
  unsigned m;  // number of roots of unity in S
  unsigned r;  // the divisor r(I) of m
  std::vector<BmsPrimeLog> per_prime_log;
};

// r(I): for each rational prime p | m, j_p(I) is the nearest integer in
// [0, ord_p(m)] to min over primes P | p of floor(ord_P(I)/ord_P(Sp) -
// 1/(p-1)). The minimum of floors is already an integer, so "nearest"
// reduces to clamping; the log keeps the pre-clamp value auditable.
inline BmsDivisor r_of_ideal(RingKind kind, const PrincipalIdeal& ideal) {
  require(!ideal.is_zero(), "r_of_ideal: zero ideal");
  require(ideal.kind() == kind, "r_of_ideal: ideal kind mismatch");
  unsigned m = unit_group_order(kind);
  BmsDivisor out{kind, ideal, m, 1, {}};
  IntFactorization mf = factor_int(Int(m));
  for (const auto& pf : mf.factors) {
    const Int& p = pf.prime;
    bool first = true;
    Rational minimand;
    Int min_floor;
    for (const QuadInt& P : primes_above(kind, p)) {
      unsigned e_ideal = ord_prime(ideal.generator(), P);
      unsigned e_p = ord_prime(QuadInt::from_int(kind, p), P);
      Rational value = Rational(e_ideal, e_p) - Rational(1, p - 1);
      value.canonicalize();
      Int fl = rational_floor(value);
      if (first || fl < min_floor) {
        first = false;
        min_floor = fl;
        minimand = value;
      }
    }
    Int clamped = min_floor;
    if (clamped < 0) clamped = 0;
    if (clamped > pf.exponent) clamped = pf.exponent;
    unsigned j = static_cast<unsigned>(to_ulong(clamped));
    for (unsigned i = 0; i < j; ++i) out.r *= static_cast<unsigned>(to_ulong(p));
    out.per_prime_log.push_back({p, pf.exponent, minimand, min_floor, j});
  }
  return out;
}

struct Sl2RelCheck {
  bool ok;
  std::string reason;  // empty when ok
};

// M in SL_2(S, I): det = 1 and M = identity mod gen(I). Divisibility by a
// zero generator degenerates to exact equality, matching SL_2(S, 0).
inline Sl2RelCheck in_sl2_rel(const Mat2& m, const PrincipalIdeal& ideal) {
  const QuadInt& g = ideal.generator();
  RingKind k = m.kind();
  require(g.kind == k, "in_sl2_rel: kind mismatch");
  if (!(det(m) == QuadInt::one(k))) return {false, "det != 1"};
  if (!divides(g, m.a - QuadInt::one(k))) return {false, "a != 1 mod I"};
  if (!divides(g, m.b)) return {false, "b != 0 mod I"};
  if (!divides(g, m.c)) return {false, "c != 0 mod I"};
  if (!divides(g, m.d - QuadInt::one(k))) return {false, "d != 1 mod I"};
  return {true, ""};
}

// Complete (a, b) with a = 1 mod I, b = 0 mod I, gcd(a, b) a unit, to a
// matrix [[a, b], [c, d]] in SL_2(S, I). ext_gcd supplies a determinant-1
// second row; a shift by t*(a, b) with t = -c0 * a^-1 mod gen(I) pushes it
// into the right congruence class. t is the canonical divmod residue, so
// the completion is deterministic.
inline Mat2 complete_sl2_rel(const QuadInt& a, const QuadInt& b,
                             const PrincipalIdeal& ideal) {
  check_same_kind(a, b, "complete_sl2_rel");
  require(ideal.kind() == a.kind, "complete_sl2_rel: kind mismatch");
  require(!ideal.is_zero(), "complete_sl2_rel: zero ideal");
  const QuadInt& g = ideal.generator();
  RingKind k = a.kind;
  require(divides(g, a - QuadInt::one(k)),
          "complete_sl2_rel: a != 1 mod I");
  require(divides(g, b), "complete_sl2_rel: b != 0 mod I");
  QuadExtGcd e = quad_ext_gcd(a, b);
  require(is_unit(e.g), "pair not unimodular");
  // e.g is canonical, hence 1: a*u + b*v = 1
  QuadInt d0 = e.u, c0 = -e.v;  // a*d0 - b*c0 = 1
  QuadInt ainv = quad_invmod(a, g);
  QuadInt t = divmod(-c0 * ainv, g).r;
  Mat2 out{a, b, c0 + t * a, d0 + t * b};
  Sl2RelCheck check = in_sl2_rel(out, ideal);
  if (!check.ok) internal_error("complete_sl2_rel: " + check.reason);
  return out;
}

struct Sk1Certificate {
  Mat2 matrix;
  PrincipalIdeal ideal;
  BmsDivisor divisor;
  RootOfUnity value;
};

// The BMS invariant of M in SL_2(S, I): the power residue symbol
// (b / (a))_r for r = r(I). Trivial when r = 1 or b = 0.
inline Sk1Certificate sk1_invariant(const Mat2& m, const PrincipalIdeal& ideal) {
  Sl2RelCheck check = in_sl2_rel(m, ideal);
  if (!check.ok) throw domain_error("sk1_invariant: matrix not in SL2(S, I): " + check.reason);
  BmsDivisor divisor = r_of_ideal(m.kind(), ideal);
  if (divisor.r == 1 || m.b.is_zero())
    return {m, ideal, divisor, RootOfUnity(divisor.r, 0)};
  RootOfUnity value = symbol({m.b, PrincipalIdeal(m.a), divisor.r});
  return {m, ideal, divisor, value};
}

}  // namespace umcert
