#pragma once

// Rational-integer number theory: deterministic primality, factorization
// (trial division + Pollard rho/Brent), modular exponentiation, square and
// cube roots of unity mod p, and CRT. Everything is pure and reentrant; the
// one shared table (the small-prime sieve) is built once and then read-only.

#include "umcert/int.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace umcert {

struct IntPrimePower {
  Int prime;
  unsigned exponent = 0;
};

struct IntFactorization {
  int sign = 1;  // +1 or -1
  std::vector<IntPrimePower> factors;  // primes strictly increasing

  Int recompose() const {
    Int v = sign;
    for (const auto& f : factors)
      for (unsigned i = 0; i < f.exponent; ++i) v *= f.prime;
    return v;
  }
};

inline Int modexp(const Int& base, const Int& exp, const Int& mod) {
  require(mod > 1, "modexp: modulus must exceed 1");
  require(sign_of(exp) >= 0, "modexp: negative exponent");
  Int b = floor_mod(base, mod);
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

namespace detail {

inline bool miller_rabin_witness(const Int& n, const Int& a, const Int& d,
                                 unsigned long s) {
  // returns true if a witnesses n composite
  Int x = modexp(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = floor_mod(x * x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace detail

// Deterministic Miller-Rabin: the witness set {2,...,37} decides primality
// for all n < 3.317e24, far beyond any value this library contracts for.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const int small[] = {2,  3,  5,  7,  11, 13, 17, 19,
                              23, 29, 31, 37, 41, 43, 47};
  for (int p : small) {
    if (n == p) return true;
    if (floor_mod(n, Int(p)) == 0) return false;
  }
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  static const int witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int a : witnesses)
    if (detail::miller_rabin_witness(n, Int(a), d, s)) return false;
  return true;
}

// Primes up to the trial-division ceiling, sieved once.
inline const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> table = [] {
    const uint32_t limit = 1000000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<uint32_t> primes;
    for (uint32_t i = 2; i <= limit; ++i) {
      if (!composite[i]) {
        primes.push_back(i);
        for (uint64_t j = uint64_t(i) * i; j <= limit; j += i)
          composite[j] = true;
      }
    }
    return primes;
  }();
  return table;
}

inline std::vector<uint32_t> primes_up_to(uint32_t limit) {
  const auto& all = small_primes();
  require(limit <= all.back(), "primes_up_to: beyond sieve range");
  auto it = std::upper_bound(all.begin(), all.end(), limit);
  return std::vector<uint32_t>(all.begin(), it);
}

namespace detail {

// Pollard rho with Brent cycling; n odd composite, not a small prime power
// of anything below the trial ceiling. Deterministic parameter sweep.
inline Int pollard_brent(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1, q = 1, ys = 0;
    const unsigned long m = 128;
    unsigned long r = 1;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = floor_mod(y * y + c, n);
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = floor_mod(y * y + c, n);
          q = floor_mod(q * int_abs(x - y), n);
        }
        d = int_gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack one step at a time
      d = 1;
      Int y2 = ys;
      while (d == 1) {
        y2 = floor_mod(y2 * y2 + c, n);
        d = int_gcd(int_abs(x - y2), n);
      }
    }
    if (d != n && d != 1) return d;
    // cycle degenerated; retry with the next increment
  }
}

inline void factor_into(Int m, std::vector<IntPrimePower>& out);

inline void split_composite(const Int& m, std::vector<IntPrimePower>& out) {
  Int d = pollard_brent(m);
  factor_into(d, out);
  factor_into(m / d, out);
}

inline void factor_into(Int m, std::vector<IntPrimePower>& out) {
  if (m == 1) return;
  if (is_prime(m)) {
    out.push_back({m, 1});
    return;
  }
  split_composite(m, out);
}

}  // namespace detail

inline IntFactorization factor_int(const Int& n) {
  require(sign_of(n) != 0, "factor_int: zero input");
  IntFactorization out;
  out.sign = sign_of(n);
  Int m = int_abs(n);
  std::vector<IntPrimePower> raw;
  const auto& primes = small_primes();
  for (uint32_t p : primes) {
    if (m == 1) break;
    if (Int(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      raw.push_back({Int(p), e});
      if (is_prime(m)) break;  // avoid scanning the rest of the sieve
    }
  }
  if (m != 1) detail::factor_into(m, raw);
  std::sort(raw.begin(), raw.end(),
            [](const IntPrimePower& x, const IntPrimePower& y) {
              return x.prime < y.prime;
            });
  // merge duplicates produced by the recursive split
  for (auto& f : raw) {
    if (!out.factors.empty() && out.factors.back().prime == f.prime)
      out.factors.back().exponent += f.exponent;
    else
      out.factors.push_back(f);
  }
  return out;
}

inline Int radical(const IntFactorization& f) {
  Int r = 1;
  for (const auto& q : f.factors) r *= q.prime;
  return r;
}

// The smaller square root of -1 mod p, for p prime with p = 1 mod 4.
// Non-residue search is incremental from 2, so the result is reproducible.
inline Int sqrt_minus_one(const Int& p) {
  require(is_prime(p), "sqrt_minus_one: input not prime");
  require(floor_mod(p, Int(4)) == 1, "prime does not split");
  Int half = (p - 1) / 2;
  Int quarter = (p - 1) / 4;
  for (Int b = 2;; ++b) {
    if (modexp(b, half, p) == p - 1) {
      Int r = modexp(b, quarter, p);
      if (floor_mod(r * r + 1, p) != 0)
        internal_error("sqrt_minus_one: candidate failed");
      Int other = p - r;
      return r < other ? r : other;
    }
  }
}

// A primitive cube root of unity mod p, for p prime with p = 1 mod 3.
// It satisfies t^2 + t + 1 = 0 mod p; the search base is incremental.
inline Int cube_root_of_unity(const Int& p) {
  require(is_prime(p), "cube_root_of_unity: input not prime");
  require(floor_mod(p, Int(3)) == 1, "prime does not split");
  Int third = (p - 1) / 3;
  for (Int b = 2;; ++b) {
    Int t = modexp(b, third, p);
    if (t != 1) {
      if (floor_mod(t * t + t + 1, p) != 0)
        internal_error("cube_root_of_unity: candidate failed");
      return t;
    }
  }
}

// Chinese remainder theorem for pairwise coprime moduli, each > 1.
// Result is the canonical residue mod the product.
inline Int crt(const std::vector<std::pair<Int, Int>>& congruences) {
  require(!congruences.empty(), "crt: empty input");
  Int value = 0, modulus = 1;
  for (const auto& [residue, n] : congruences) {
    require(n > 1, "crt: modulus must exceed 1");
    if (int_gcd(modulus, n) != 1)
      throw domain_error("crt: moduli not pairwise coprime");
    // value + modulus*t = residue (mod n)
    Int t = floor_mod((residue - value) * invmod(modulus, n), n);
    value += modulus * t;
    modulus *= n;
  }
  return floor_mod(value, modulus);
}

}  // namespace umcert
