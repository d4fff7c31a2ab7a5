#pragma once

// Exact arithmetic in the two Euclidean imaginary quadratic rings Z[i] and
// Z[zeta_3]: nearest-lattice-point division, gcd with Bezout cofactors,
// canonical associates, and prime factorization. Elements are immutable
// value types; every operation is pure.

#include "umcert/int.hpp"
#include "umcert/numtheory.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace umcert {

enum class RingKind { gaussian, eisenstein };

inline const char* ring_name(RingKind k) {
  return k == RingKind::gaussian ? "gaussian" : "eisenstein";
}

inline char omega_letter(RingKind k) {
  return k == RingKind::gaussian ? 'i' : 'w';
}

// Order of the unit group: mu_4 for Z[i], mu_6 for Z[zeta_3].
inline unsigned unit_group_order(RingKind k) {
  return k == RingKind::gaussian ? 4 : 6;
}

// a + b*omega with omega = i (omega^2 = -1) or omega = zeta_3
// (omega^2 = -1 - omega). Arithmetic never mixes kinds.
struct QuadInt {
  RingKind kind;
  Int a;
  Int b;

  QuadInt(RingKind k, Int a_, Int b_)
      : kind(k), a(std::move(a_)), b(std::move(b_)) {}

  static QuadInt zero(RingKind k) { return {k, 0, 0}; }
  static QuadInt one(RingKind k) { return {k, 1, 0}; }
  static QuadInt omega(RingKind k) { return {k, 0, 1}; }
  static QuadInt from_int(RingKind k, Int v) { return {k, std::move(v), 0}; }

  bool is_zero() const { return sign_of(a) == 0 && sign_of(b) == 0; }

  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b;
  }
};

inline void check_same_kind(const QuadInt& x, const QuadInt& y,
                            const char* op) {
  require(x.kind == y.kind, std::string(op) + ": mixed ring kinds");
}

inline QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  check_same_kind(x, y, "add");
  return {x.kind, x.a + y.a, x.b + y.b};
}

inline QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  check_same_kind(x, y, "sub");
  return {x.kind, x.a - y.a, x.b - y.b};
}

inline QuadInt operator-(const QuadInt& x) { return {x.kind, -x.a, -x.b}; }

inline QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  check_same_kind(x, y, "mul");
  Int ac = x.a * y.a, bd = x.b * y.b, cross = x.a * y.b + x.b * y.a;
  if (x.kind == RingKind::gaussian) return {x.kind, ac - bd, cross};
  return {x.kind, ac - bd, cross - bd};  // omega^2 = -1 - omega
}

inline QuadInt operator*(const QuadInt& x, const Int& s) {
  return {x.kind, x.a * s, x.b * s};
}

inline QuadInt operator*(const Int& s, const QuadInt& x) { return x * s; }

inline Int norm(const QuadInt& x) {
  if (x.kind == RingKind::gaussian) return x.a * x.a + x.b * x.b;
  return x.a * x.a - x.a * x.b + x.b * x.b;
}

inline QuadInt conj(const QuadInt& x) {
  if (x.kind == RingKind::gaussian) return {x.kind, x.a, -x.b};
  return {x.kind, x.a - x.b, -x.b};  // conj(zeta_3) = -1 - zeta_3
}

inline bool is_unit(const QuadInt& x) { return norm(x) == 1; }

// Inverse of a unit: conj(u) since N(u) = 1.
inline QuadInt unit_inverse(const QuadInt& u) {
  require(is_unit(u), "unit_inverse: not a unit");
  return conj(u);
}

// Units listed as powers of the canonical generator of the unit group
// (i for Z[i], 1+zeta_3 for Z[zeta_3]).
inline std::vector<QuadInt> units(RingKind k) {
  std::vector<QuadInt> out;
  QuadInt g = k == RingKind::gaussian ? QuadInt::omega(k) : QuadInt(k, 1, 1);
  QuadInt u = QuadInt::one(k);
  for (unsigned n = 0; n < unit_group_order(k); ++n) {
    out.push_back(u);
    u = u * g;
  }
  return out;
}

namespace detail {

// Round num/den (den > 0) to nearest, ties toward negative infinity.
inline Int round_half_down(const Int& num, const Int& den) {
  return ceil_div(2 * num - den, 2 * den);
}

}  // namespace detail

struct QuadDivMod {
  QuadInt q, r;
};

// Nearest-lattice-point division: x = q*y + r with N(r) <= N(y)/2 over Z[i]
// and N(r) <= N(y)/3 over Z[zeta_3]. The quotient starts from coordinate
// rounding of x*conj(y)/N(y) (ties toward -inf) and is refined to the argmin
// of N(r) over the 3x3 neighbouring grid, ties to the lexicographically
// smaller (q.a, q.b); over Z[i] this coincides with plain coordinate
// rounding, over Z[zeta_3] it is what actually attains the 1/3 bound.
inline QuadDivMod divmod(const QuadInt& x, const QuadInt& y) {
  check_same_kind(x, y, "divmod");
  require(!y.is_zero(), "divmod: division by zero");
  Int n = norm(y);
  QuadInt t = x * conj(y);
  Int qa = detail::round_half_down(t.a, n);
  Int qb = detail::round_half_down(t.b, n);
  QuadInt best_q = QuadInt::zero(x.kind);
  QuadInt best_r = QuadInt::zero(x.kind);
  Int best_norm = -1;
  for (int da = -1; da <= 1; ++da) {
    for (int db = -1; db <= 1; ++db) {
      QuadInt q{x.kind, qa + da, qb + db};
      QuadInt r = x - q * y;
      Int nr = norm(r);
      bool better =
          sign_of(best_norm) < 0 || nr < best_norm ||
          (nr == best_norm &&
           (q.a < best_q.a || (q.a == best_q.a && q.b < best_q.b)));
      if (better) {
        best_q = q;
        best_r = r;
        best_norm = nr;
      }
    }
  }
  const int denom = x.kind == RingKind::gaussian ? 2 : 3;
  if (denom * best_norm > n) internal_error("divmod: remainder bound failed");
  return {best_q, best_r};
}

inline bool divides(const QuadInt& d, const QuadInt& x) {
  if (d.is_zero()) return x.is_zero();
  return divmod(x, d).r.is_zero();
}

inline std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& d) {
  auto [q, r] = divmod(x, d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

struct CanonicalAssociate {
  QuadInt canonical;  // in the canonical sector
  QuadInt unit;       // x = unit * canonical
};

// Canonical sector: complex argument in [0, pi/2) for Z[i], [0, pi/3) for
// Z[zeta_3]; decided by exact coordinate tests (a > 0, b >= 0 resp.
// 0 <= b < a).
inline bool in_canonical_sector(const QuadInt& x) {
  if (x.kind == RingKind::gaussian)
    return sign_of(x.a) > 0 && sign_of(x.b) >= 0;
  return sign_of(x.b) >= 0 && x.b < x.a;
}

inline CanonicalAssociate canonical_associate(const QuadInt& x) {
  require(!x.is_zero(), "canonical_associate: zero input");
  for (const QuadInt& u : units(x.kind)) {
    QuadInt c = u * x;
    if (in_canonical_sector(c)) return {c, unit_inverse(u)};
  }
  internal_error("canonical_associate: no associate in sector");
}

inline QuadInt quad_gcd(QuadInt x, QuadInt y) {
  check_same_kind(x, y, "gcd");
  require(!x.is_zero() || !y.is_zero(), "gcd: both arguments zero");
  while (!y.is_zero()) {
    QuadInt r = divmod(x, y).r;
    x = y;
    y = r;
  }
  return canonical_associate(x).canonical;
}

struct QuadExtGcd {
  QuadInt g, u, v;  // g = u*x + v*y, g canonical
};

inline QuadExtGcd quad_ext_gcd(const QuadInt& x, const QuadInt& y) {
  check_same_kind(x, y, "ext_gcd");
  require(!x.is_zero() || !y.is_zero(), "ext_gcd: both arguments zero");
  RingKind k = x.kind;
  QuadInt r0 = x, r1 = y;
  QuadInt s0 = QuadInt::one(k), s1 = QuadInt::zero(k);
  QuadInt t0 = QuadInt::zero(k), t1 = QuadInt::one(k);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QuadInt s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  auto [g, u] = canonical_associate(r0);
  QuadInt uinv = unit_inverse(u);
  QuadExtGcd out{g, uinv * s0, uinv * t0};
  if (out.u * x + out.v * y != out.g) internal_error("ext_gcd: identity failed");
  return out;
}

// Inverse of a mod the nonzero modulus m, as the canonical divmod residue.
inline QuadInt quad_invmod(const QuadInt& a, const QuadInt& m) {
  require(!m.is_zero(), "quad_invmod: zero modulus");
  QuadExtGcd e = quad_ext_gcd(a, m);
  require(is_unit(e.g), "quad_invmod: not invertible");
  // e.g is canonical, hence exactly 1
  return divmod(e.u, m).r;
}

// Principal ideal, stored as the canonical generator of its associate class
// (zero ideal keeps the zero generator). Equality of ideals is equality of
// generators.
class PrincipalIdeal {
 public:
  explicit PrincipalIdeal(const QuadInt& gen)
      : gen_(gen.is_zero() ? gen : canonical_associate(gen).canonical) {}

  const QuadInt& generator() const { return gen_; }
  RingKind kind() const { return gen_.kind; }
  bool is_zero() const { return gen_.is_zero(); }
  bool is_unit_ideal() const { return is_unit(gen_); }

  friend bool operator==(const PrincipalIdeal& x, const PrincipalIdeal& y) {
    return x.gen_ == y.gen_;
  }

 private:
  QuadInt gen_;
};

struct QuadPrimePower {
  QuadInt prime;  // canonical associate
  unsigned exponent = 0;
};

struct QuadFactorization {
  QuadInt unit;
  std::vector<QuadPrimePower> factors;  // sorted by (norm, a, b)

  QuadInt recompose() const {
    QuadInt v = unit;
    for (const auto& f : factors)
      for (unsigned i = 0; i < f.exponent; ++i) v = v * f.prime;
    return v;
  }
};

// True for elements generating a prime ideal: prime norm (split/ramified)
// or an associate of an inert rational prime (norm p^2).
inline bool is_quad_prime(const QuadInt& x) {
  Int n = norm(x);
  if (is_prime(n)) return true;
  Int p = isqrt(n);
  if (p * p != n || !is_prime(p)) return false;
  if (x.kind == RingKind::gaussian && floor_mod(p, Int(4)) != 3) return false;
  if (x.kind == RingKind::eisenstein && floor_mod(p, Int(3)) != 2) return false;
  return divides(QuadInt::from_int(x.kind, p), x);
}

// Canonical primes above the rational prime p, sorted by (norm, a, b).
inline std::vector<QuadInt> primes_above(RingKind k, const Int& p) {
  require(is_prime(p), "primes_above: input not prime");
  std::vector<QuadInt> out;
  if (k == RingKind::gaussian) {
    if (p == 2) {
      out.push_back({k, 1, 1});  // ramified: (1+i)^2 = 2i
    } else if (floor_mod(p, Int(4)) == 1) {
      Int r = sqrt_minus_one(p);
      QuadInt pi =
          canonical_associate(quad_gcd({k, p, 0}, {k, r, 1})).canonical;
      QuadInt pi2 = canonical_associate(conj(pi)).canonical;
      out = {pi, pi2};
    } else {
      out.push_back({k, p, 0});  // inert
    }
  } else {
    if (p == 3) {
      // ramified: canonical associate of 1 - zeta_3
      out.push_back(canonical_associate(QuadInt{k, 1, -1}).canonical);
    } else if (floor_mod(p, Int(3)) == 1) {
      Int t = cube_root_of_unity(p);
      QuadInt pi =
          canonical_associate(quad_gcd({k, p, 0}, {k, t, -1})).canonical;
      QuadInt pi2 = canonical_associate(conj(pi)).canonical;
      out = {pi, pi2};
    } else {
      out.push_back({k, p, 0});  // inert (including p = 2)
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadInt& x, const QuadInt& y) {
    Int nx = norm(x), ny = norm(y);
    if (nx != ny) return nx < ny;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Prime factorization via the norm: factor N(x) over Z, build the candidate
// primes above each rational prime, divide out exactly. Units come back with
// an empty factor list.
inline QuadFactorization factor(const QuadInt& x) {
  require(!x.is_zero(), "factor: zero input");
  QuadFactorization out{QuadInt::one(x.kind), {}};
  if (is_unit(x)) {
    out.unit = x;
    return out;
  }
  QuadInt rem = x;
  IntFactorization nf = factor_int(norm(x));
  for (const auto& f : nf.factors) {
    for (const QuadInt& pi : primes_above(x.kind, f.prime)) {
      unsigned e = 0;
      while (auto q = exact_div(rem, pi)) {
        rem = *q;
        ++e;
      }
      if (e > 0) out.factors.push_back({pi, e});
    }
  }
  if (!is_unit(rem)) internal_error("factor: non-unit remainder");
  out.unit = rem;
  std::sort(out.factors.begin(), out.factors.end(),
            [](const QuadPrimePower& x_, const QuadPrimePower& y_) {
              Int nx = norm(x_.prime), ny = norm(y_.prime);
              if (nx != ny) return nx < ny;
              if (x_.prime.a != y_.prime.a) return x_.prime.a < y_.prime.a;
              return x_.prime.b < y_.prime.b;
            });
  if (out.recompose() != x) internal_error("factor: recomposition failed");
  return out;
}

// Largest e with pi^e | x.
inline unsigned ord_prime(const QuadInt& x, const QuadInt& pi) {
  require(!x.is_zero(), "ord_prime: zero input");
  require(is_quad_prime(pi), "ord_prime: modulus not prime");
  unsigned e = 0;
  QuadInt rem = x;
  while (auto q = exact_div(rem, pi)) {
    rem = *q;
    ++e;
  }
  return e;
}

// ---------------------------------------------------------------------------
// Text grammar: `a`, `a+bi`, `a-bi` (and bare `bi`, `i`, `-i`) for Z[i];
// the same with `w` for Z[zeta_3]. Spaces optional.
// ---------------------------------------------------------------------------

inline std::string format_quad(const QuadInt& x) {
  const char w = omega_letter(x.kind);
  if (x.is_zero()) return "0";
  std::string out;
  if (sign_of(x.a) != 0) out += to_decimal(x.a);
  if (sign_of(x.b) != 0) {
    if (!out.empty() && sign_of(x.b) > 0) out += "+";
    if (x.b == -1)
      out += "-";
    else if (x.b != 1)
      out += to_decimal(x.b);
    out += w;
  }
  return out;
}

inline QuadInt parse_quad(RingKind kind, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  require(!s.empty(), "parse_quad: empty input");
  const char w = omega_letter(kind);
  Int a = 0, b = 0;
  bool saw_a = false, saw_b = false;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      require(i < s.size(), "parse_quad: dangling sign in '" + text + "'");
    } else {
      require(i == 0, "parse_quad: missing operator in '" + text + "'");
    }
    std::string digits;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') digits += s[i++];
    bool has_omega = i < s.size() && s[i] == w;
    if (has_omega) ++i;
    if (!has_omega && i < s.size() && s[i] != '+' && s[i] != '-')
      throw domain_error("parse_quad: unexpected character '" +
                         std::string(1, s[i]) + "' in '" + text + "'");
    if (has_omega) {
      require(!saw_b, "parse_quad: repeated omega term in '" + text + "'");
      saw_b = true;
      b = digits.empty() ? Int(sign) : Int(sign) * parse_int(digits);
    } else {
      require(!digits.empty(), "parse_quad: empty term in '" + text + "'");
      require(!saw_a, "parse_quad: repeated integer term in '" + text + "'");
      saw_a = true;
      a = Int(sign) * parse_int(digits);
    }
  }
  require(saw_a || saw_b, "parse_quad: no terms in '" + text + "'");
  return {kind, a, b};
}

}  // namespace umcert
