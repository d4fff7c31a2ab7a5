#pragma once

// Brute-force laboratory over Z/nZ: unimodular row enumeration, stability,
// stable rank, SL_2 lifting to Z, elementary-word decompositions, and the
// exhaustive stable-row/SL_2-lifting equivalence check. Everything reports
// the size of the search space it exhausted.

#include "umcert/int.hpp"
#include "umcert/numtheory.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace umcert {

struct ZnRow {
  Int n;
  std::vector<Int> values;  // canonical residues in [0, n)

  ZnRow(Int modulus, std::vector<Int> v) : n(std::move(modulus)), values() {
    require(n >= 2, "ZnRow: modulus must be at least 2");
    values.reserve(v.size());
    for (Int& x : v) values.push_back(floor_mod(x, n));
  }

  bool unimodular() const {
    Int g = n;
    for (const Int& x : values) g = int_gcd(g, x);
    return g == 1;
  }
};

struct ZnMat2 {
  Int n;
  Int a, b, c, d;

  ZnMat2(Int modulus, const Int& a_, const Int& b_, const Int& c_,
         const Int& d_)
      : n(std::move(modulus)),
        a(floor_mod(a_, n)),
        b(floor_mod(b_, n)),
        c(floor_mod(c_, n)),
        d(floor_mod(d_, n)) {
    require(n >= 2, "ZnMat2: modulus must be at least 2");
  }

  Int det() const { return floor_mod(a * d - b * c, n); }

  friend bool operator==(const ZnMat2& x, const ZnMat2& y) {
    return x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

struct IntMat2 {
  Int a, b, c, d;

  Int det() const { return a * d - b * c; }

  friend IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend bool operator==(const IntMat2& x, const IntMat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  static IntMat2 identity() { return {1, 0, 0, 1}; }
};

// e_{ij}(amount): identity plus `amount` at off-diagonal position (i, j).
struct ElementaryMove {
  unsigned i, j;  // (1,2) or (2,1)
  Int amount;
};

struct ElementaryWord {
  std::vector<ElementaryMove> moves;
};

inline IntMat2 recompose(const ElementaryWord& word) {
  IntMat2 m = IntMat2::identity();
  for (const ElementaryMove& e : word.moves) {
    require((e.i == 1 && e.j == 2) || (e.i == 2 && e.j == 1),
            "ElementaryWord: bad index pair");
    IntMat2 el = e.i == 1 ? IntMat2{1, e.amount, 0, 1}
                          : IntMat2{1, 0, e.amount, 1};
    m = m * el;
  }
  return m;
}

inline ZnMat2 recompose_mod(const ElementaryWord& word, const Int& n) {
  IntMat2 m = recompose(word);
  return {n, m.a, m.b, m.c, m.d};
}

// All unimodular rows of length k over Z/n, lexicographic.
inline std::vector<ZnRow> um_rows(const Int& n, unsigned k) {
  require(n >= 2, "um_rows: modulus must be at least 2");
  require(k >= 1, "um_rows: length must be positive");
  double size = 1;
  for (unsigned i = 0; i < k; ++i) size *= mpz_get_d(n.get_mpz_t());
  require(size <= 4e6, "um_rows: enumeration too large");
  std::vector<ZnRow> out;
  std::vector<Int> v(k, Int(0));
  while (true) {
    ZnRow row(n, v);
    if (row.unimodular()) out.push_back(row);
    size_t i = k;
    while (i-- > 0) {
      ++v[i];
      if (v[i] < n) break;
      v[i] = 0;
      if (i == 0) return out;
    }
  }
}

struct StableCheck {
  bool stable;
  std::vector<Int> witness;  // s with (r_1 + s_1 c, ..., r_k + s_k c) unimodular
  unsigned long search_space;
};

// Brute force over all s in (Z/n)^k; witness is the lexicographically first.
inline StableCheck is_stable_row(const ZnRow& row) {
  require(row.values.size() >= 2, "is_stable_row: row too short");
  require(row.unimodular(), "is_stable_row: row not unimodular");
  const size_t k = row.values.size() - 1;
  const Int& c = row.values.back();
  std::vector<Int> s(k, Int(0));
  unsigned long space = 0;
  while (true) {
    ++space;
    Int g = row.n;
    for (size_t i = 0; i < k; ++i)
      g = int_gcd(g, floor_mod(row.values[i] + s[i] * c, row.n));
    if (g == 1) return {true, s, space};
    size_t i = k;
    while (i-- > 0) {
      ++s[i];
      if (s[i] < row.n) break;
      s[i] = 0;
      if (i == 0) return {false, {}, space};
    }
  }
}

// Least k with every row in Um_{k+1}(Z/n) stable; stability of k implies
// stability of every k' > k, so the first exhaustive success is the answer.
inline unsigned stable_rank(const Int& n, unsigned max_k = 4) {
  require(n >= 2, "stable_rank: modulus must be at least 2");
  for (unsigned k = 1; k <= max_k; ++k) {
    bool all = true;
    for (const ZnRow& row : um_rows(n, k + 1)) {
      if (!is_stable_row(row).stable) {
        all = false;
        break;
      }
    }
    if (all) return k;
  }
  throw domain_error("stable_rank: exceeded search cap");
}

// Lift M in SL_2(Z/n) to an integer matrix of determinant exactly 1. The
// first row is lifted to a coprime pair (CRT steers the lift of b away from
// primes dividing the lifted a but not n), completed by extended gcd, and
// the second row is shifted by t*(A, B) into the right congruence class.
inline IntMat2 sl2_lift(const ZnMat2& m) {
  require(m.det() == 1, "sl2_lift: determinant not 1 mod n");
  const Int& n = m.n;
  // fast path: already a determinant-1 integer matrix
  if (IntMat2{m.a, m.b, m.c, m.d}.det() == 1) return {m.a, m.b, m.c, m.d};
  Int A = sign_of(m.a) == 0 ? n : m.a;
  std::vector<std::pair<Int, Int>> congruences{{m.b, n}};
  for (const auto& f : factor_int(A).factors)
    if (floor_mod(n, f.prime) != 0) congruences.emplace_back(1, f.prime);
  Int B = crt(congruences);
  if (int_gcd(A, B) != 1) internal_error("sl2_lift: first row not coprime");
  IntExtGcd e = int_ext_gcd(A, B);  // u*A + v*B = 1
  Int C0 = -e.v, D0 = e.u;          // A*D0 - B*C0 = 1
  // t = u*(c - C0) + v*(d - D0) solves (C0 + t*A, D0 + t*B) = (c, d) mod n
  Int t = floor_mod(e.u * (m.c - C0) + e.v * (m.d - D0), n);
  IntMat2 out{A, B, C0 + t * A, D0 + t * B};
  if (out.det() != 1) internal_error("sl2_lift: determinant check failed");
  if (floor_mod(out.a, n) != m.a || floor_mod(out.b, n) != m.b ||
      floor_mod(out.c, n) != m.c || floor_mod(out.d, n) != m.d)
    internal_error("sl2_lift: reduction check failed");
  return out;
}

// Decompose an integer SL_2 matrix into elementary matrices: Euclidean
// reduction of the first column to (1, 0), the fixed word
// (e12(1) e21(-1) e12(1))^2 for -I, then one e12 for the remaining corner.
inline ElementaryWord e2_decompose(const IntMat2& m) {
  require(m.det() == 1, "e2_decompose: determinant not 1");
  IntMat2 cur = m;
  std::vector<ElementaryMove> applied;  // in application order
  auto apply_e12 = [&](const Int& t) {  // row1 += t * row2
    cur = IntMat2{1, t, 0, 1} * cur;
    applied.push_back({1, 2, t});
  };
  auto apply_e21 = [&](const Int& t) {  // row2 += t * row1
    cur = IntMat2{1, 0, t, 1} * cur;
    applied.push_back({2, 1, t});
  };
  while (sign_of(cur.c) != 0) {
    if (sign_of(cur.a) == 0) {
      apply_e12(1);
      continue;
    }
    auto [q, r] = euclid_divmod(cur.c, cur.a);
    apply_e21(-q);  // c -> r in [0, |a|)
    if (sign_of(cur.c) == 0) break;
    auto [q2, r2] = euclid_divmod(cur.a, cur.c);
    apply_e12(-q2);  // a -> r2 in [0, c)
  }
  // cur = [[\pm 1, *], [0, \pm 1]] with det 1
  if (cur.a == -1) {
    for (int rep = 0; rep < 2; ++rep) {
      apply_e12(1);
      apply_e21(-1);
      apply_e12(1);
    }
  }
  if (cur.a != 1 || cur.d != 1) internal_error("e2_decompose: bad diagonal");
  if (sign_of(cur.b) != 0) apply_e12(-cur.b);
  // cur is now the identity: m = applied[0]^-1 * applied[1]^-1 * ...
  ElementaryWord word;
  word.moves.reserve(applied.size());
  for (const ElementaryMove& e : applied)
    word.moves.push_back({e.i, e.j, -e.amount});
  if (!(recompose(word) == m)) internal_error("e2_decompose: recomposition failed");
  return word;
}

// Over Z/n: lift, decompose over Z, reduce amounts to canonical residues.
inline ElementaryWord e2_decompose_mod(const ZnMat2& m) {
  IntMat2 lift = sl2_lift(m);
  ElementaryWord word = e2_decompose(lift);
  ElementaryWord out;
  for (const ElementaryMove& e : word.moves) {
    Int amount = floor_mod(e.amount, m.n);
    if (sign_of(amount) != 0) out.moves.push_back({e.i, e.j, amount});
  }
  if (!(recompose_mod(out, m.n) == m))
    internal_error("e2_decompose_mod: recomposition failed");
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive equivalence check: a row (a, b, c) in Um_3(Z/n) is stable iff
// every matrix over (Z/n)/(c) with first row (a, b) lifts to SL_2(Z/n).
// The quotient by (c) is Z/g with g = gcd(c, n).
// ---------------------------------------------------------------------------

struct LemmaReport {
  Int n;
  unsigned long rows_checked = 0;
  unsigned long lifts_checked = 0;
  bool holds = true;
  std::optional<std::vector<Int>> counterexample;
};

namespace detail {

// Does [[a, b], [u, v]] over Z/g lift to SL_2(Z/n)? (g | n.) Enumerates all
// entrywise-congruent matrices mod n.
inline bool sl2_quotient_lift_exists(const Int& n, const Int& g, const Int& a,
                                     const Int& b, const Int& u, const Int& v,
                                     unsigned long& work) {
  Int step = n / g;
  for (Int da = 0; da < step; ++da)
    for (Int db = 0; db < step; ++db)
      for (Int du = 0; du < step; ++du)
        for (Int dv = 0; dv < step; ++dv) {
          ++work;
          Int A = a + da * g, B = b + db * g, U = u + du * g, V = v + dv * g;
          if (floor_mod(A * V - B * U, n) == 1) return true;
        }
  return false;
}

}  // namespace detail

inline LemmaReport check_stable_row_lemma(const Int& n, const Int& bound = 8) {
  require(n >= 2, "check_stable_row_lemma: modulus must be at least 2");
  require(n <= bound, "check_stable_row_lemma: exhaustion bound exceeded");
  LemmaReport report;
  report.n = n;
  for (const ZnRow& row : um_rows(n, 3)) {
    ++report.rows_checked;
    const Int& a = row.values[0];
    const Int& b = row.values[1];
    const Int& c = row.values[2];
    bool stable = is_stable_row(row).stable;
    Int g = int_gcd(c, n);
    bool all_lift = true;
    if (g > 1) {
      // enumerate second rows completing (a, b) mod g
      for (Int u = 0; u < g && all_lift; ++u)
        for (Int v = 0; v < g && all_lift; ++v) {
          if (floor_mod(a * v - b * u, g) != 1) continue;
          if (!detail::sl2_quotient_lift_exists(n, g, floor_mod(a, g),
                                                floor_mod(b, g), u, v,
                                                report.lifts_checked))
            all_lift = false;
        }
    }
    // g == 1: the quotient is the zero ring and every matrix lifts trivially
    if (stable != all_lift) {
      report.holds = false;
      report.counterexample = row.values;
      return report;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Unit lifting along Z -> Z/d and Z/n -> Z/d
// ---------------------------------------------------------------------------

struct UnitLift {
  Int unit;                 // unit of the target Z/d
  std::optional<Int> lift;  // a preimage unit, when one exists
};

struct UnitLiftReport {
  std::optional<Int> source_modulus;  // nullopt encodes source ring Z
  Int target_modulus;
  bool all_lift = true;
  std::vector<UnitLift> units;
};

inline UnitLiftReport unit_lift_check_from_z(const Int& d) {
  require(d >= 2, "unit_lift_check: target modulus must be at least 2");
  UnitLiftReport report{std::nullopt, d, true, {}};
  for (Int u = 0; u < d; ++u) {
    if (int_gcd(u, d) != 1) continue;
    // Z^x = {1, -1}
    std::optional<Int> lift;
    if (u == 1) lift = Int(1);
    else if (u == floor_mod(Int(-1), d)) lift = Int(-1);
    if (!lift) report.all_lift = false;
    report.units.push_back({u, lift});
  }
  return report;
}

inline UnitLiftReport unit_lift_check(const Int& n, const Int& d) {
  require(n >= 2, "unit_lift_check: source modulus must be at least 2");
  require(d >= 1, "unit_lift_check: target modulus must be positive");
  require(floor_mod(n, d) == 0, "unit_lift_check: target does not divide source");
  UnitLiftReport report{n, d, true, {}};
  if (d == 1) return report;  // trivial target ring
  for (Int u = 0; u < d; ++u) {
    if (int_gcd(u, d) != 1) continue;
    std::optional<Int> lift;
    for (Int w = u; w < n; w += d) {
      if (int_gcd(w, n) == 1) {
        lift = w;
        break;
      }
    }
    if (!lift) report.all_lift = false;  // cannot happen over Z/n; recorded anyway
    report.units.push_back({u, lift});
  }
  return report;
}

}  // namespace umcert
