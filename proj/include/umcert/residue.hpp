#pragma once

// m-th power residue symbols over Z[i] (m | 4) and Z[zeta_3] (m | 6).
// All congruences are decided by Euclidean divmod against the prime itself,
// so split, inert and ramified primes share one code path.

#include "umcert/int.hpp"
#include "umcert/quad.hpp"

#include <string>
#include <vector>

namespace umcert {

// Element of mu_r as (order, exponent): the value g^exponent for the
// canonical generator g of mu_r (g = i for r = 4, -1 for r = 2, zeta_3 for
// r = 3, 1 + zeta_3 for r = 6, 1 for r = 1).
struct RootOfUnity {
  unsigned order;
  unsigned exponent;

  RootOfUnity(unsigned r, unsigned k) : order(r), exponent(k % r) {
    require(r >= 1, "RootOfUnity: order must be positive");
  }

  bool is_trivial() const { return exponent == 0; }

  RootOfUnity pow(unsigned long e) const {
    return {order, static_cast<unsigned>((static_cast<unsigned long>(exponent) * (e % order)) % order)};
  }

  friend RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y) {
    require(x.order == y.order, "RootOfUnity: mixed orders");
    return {x.order, (x.exponent + y.exponent) % x.order};
  }

  friend bool operator==(const RootOfUnity& x, const RootOfUnity& y) {
    return x.order == y.order && x.exponent == y.exponent;
  }
};

// Canonical generator of mu_m inside the ring; m must divide the number of
// roots of unity (4 or 6).
inline QuadInt mu_generator(RingKind kind, unsigned m) {
  unsigned full = unit_group_order(kind);
  require(m >= 1 && full % m == 0,
          "mu_generator: m does not divide the unit group order");
  switch (m) {
    case 1: return QuadInt::one(kind);
    case 2: return {kind, -1, 0};
    case 3: return QuadInt::omega(kind);           // zeta_3
    case 4: return QuadInt::omega(kind);           // i
    case 6: return {kind, 1, 1};                   // 1 + zeta_3 = -zeta_3^2
    default: internal_error("mu_generator: unreachable");
  }
}

// The m elements of mu_m, ordered as powers of the canonical generator.
inline std::vector<QuadInt> mu_elements(RingKind kind, unsigned m) {
  QuadInt g = mu_generator(kind, m);
  std::vector<QuadInt> out;
  QuadInt v = QuadInt::one(kind);
  for (unsigned k = 0; k < m; ++k) {
    out.push_back(v);
    v = v * g;
  }
  if (!(v == QuadInt::one(kind))) internal_error("mu_elements: generator order");
  return out;
}

inline QuadInt embed_root(RingKind kind, const RootOfUnity& z) {
  QuadInt g = mu_generator(kind, z.order);
  QuadInt v = QuadInt::one(kind);
  for (unsigned k = 0; k < z.exponent; ++k) v = v * g;
  return v;
}

// base^e reduced mod pi at every step (repeated squaring with divmod).
inline QuadInt quad_powmod(const QuadInt& base, const Int& e,
                           const QuadInt& pi) {
  require(sign_of(e) >= 0, "quad_powmod: negative exponent");
  QuadInt acc = QuadInt::one(base.kind);
  QuadInt sq = divmod(base, pi).r;
  Int k = e;
  while (sign_of(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = divmod(acc * sq, pi).r;
    sq = divmod(sq * sq, pi).r;
    k >>= 1;
  }
  return acc;
}

// The unique zeta in mu_m with b^((q-1)/m) = zeta mod pi, q = N(pi).
// Requires pi prime, pi coprime to b and to m.
inline RootOfUnity prime_symbol(const QuadInt& b, const QuadInt& pi,
                                unsigned m) {
  check_same_kind(b, pi, "prime_symbol");
  require(is_quad_prime(pi), "prime_symbol: modulus not prime");
  mu_generator(pi.kind, m);  // validates m
  if (divides(pi, b)) throw domain_error("symbol undefined: prime divides numerator");
  if (divides(pi, QuadInt::from_int(pi.kind, Int(m))))
    throw domain_error("symbol undefined: prime divides the degree");
  Int q = norm(pi);
  Int e = q - 1;
  if (floor_mod(e, Int(m)) != 0)
    internal_error("prime_symbol: m does not divide q - 1");
  e /= m;
  QuadInt power = quad_powmod(b, e, pi);
  std::vector<QuadInt> mu = mu_elements(pi.kind, m);
  for (unsigned k = 0; k < m; ++k)
    if (divides(pi, power - mu[k])) return {m, k};
  internal_error("prime_symbol: power not congruent to any root of unity");
}

// Query for (b / a)_m with a an ideal; requires a + S*b*m = S for the
// degree m actually used.
struct SymbolQuery {
  QuadInt numerator;
  PrincipalIdeal denominator;
  unsigned degree;
};

// Product over the prime factorization of the denominator of prime symbols
// raised to their multiplicities.
inline RootOfUnity symbol(const SymbolQuery& query) {
  const QuadInt& gen = query.denominator.generator();
  unsigned m = query.degree;
  mu_generator(gen.kind, m);  // validates m for the ring
  require(!gen.is_zero(), "symbol: zero denominator ideal");
  check_same_kind(query.numerator, gen, "symbol");
  QuadInt bm = query.numerator * Int(m);
  if (!bm.is_zero() && !is_unit(quad_gcd(gen, bm))) {
    throw domain_error("symbol undefined: denominator not coprime to b*m");
  }
  if (bm.is_zero() && !query.denominator.is_unit_ideal())
    throw domain_error("symbol undefined: denominator not coprime to b*m");
  RootOfUnity out{m, 0};
  if (query.denominator.is_unit_ideal()) return out;  // empty product
  for (const auto& f : factor(gen).factors) {
    RootOfUnity s = prime_symbol(query.numerator, f.prime, m);
    out = out * s.pow(f.exponent);
  }
  return out;
}

}  // namespace umcert
