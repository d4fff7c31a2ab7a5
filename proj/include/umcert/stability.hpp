#pragma once

// Non-stability obstruction pipeline for unimodular rows (a, b, c) over
// Z[x]: evaluate at a root theta of c inside Z[i] or Z[zeta_3], complete the
// evaluated pair to a matrix in SL_2(S, fS), take its BMS invariant, and
// report NotStable when the invariant is nontrivial. The machine-checked
// portion is exactly the membership and the symbol value; the verdict cites
// (but does not re-derive) the vanishing of SK_1 over Z[x].
//
// Also: a bounded exhaustive stabilizer search used as a consistency probe.
// NotFound is never a proof of non-stability.

#include "umcert/bms.hpp"
#include "umcert/int.hpp"
#include "umcert/intpoly.hpp"
#include "umcert/quad.hpp"
#include "umcert/residue.hpp"
#include "umcert/unimodular.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace umcert {

enum class Verdict { not_stable, inconclusive };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::not_stable ? "not_stable" : "inconclusive";
}

struct ObstructionReport {
  PolyRow row;  // (a, b, c)
  RingKind ring;
  QuadInt theta;
  Int conductor;  // f with I = fS and f | theta
  PrincipalIdeal ideal;
  BezoutCertificate row_certificate;
  Mat2 completion;
  BmsDivisor divisor;
  RootOfUnity value;
  Verdict verdict;  // not_stable iff value is nontrivial
};

inline ObstructionReport obstruction(const PolyRow& row, RingKind kind,
                                     const QuadInt& theta,
                                     const Int& conductor) {
  require(row.entries.size() == 3, "obstruction: row must have 3 entries");
  require(sign_of(conductor) > 0, "obstruction: conductor must be positive");
  require(theta.kind == kind, "obstruction: theta kind mismatch");
  BezoutCertificate cert = require_unimodular(row);

  const IntPoly& pa = row.entries[0];
  const IntPoly& pb = row.entries[1];
  const IntPoly& pc = row.entries[2];
  require(pc.eval_quad(theta).is_zero(), "eval(c, theta) != 0");
  require(floor_mod(theta.a, conductor) == 0 &&
              floor_mod(theta.b, conductor) == 0,
          "conductor does not divide theta");

  PrincipalIdeal ideal(QuadInt::from_int(kind, conductor));
  QuadInt a_val = pa.eval_quad(theta);
  QuadInt b_val = pb.eval_quad(theta);
  require(divides(ideal.generator(), a_val - QuadInt::one(kind)),
          "eval(a, theta) != 1 mod I");
  require(divides(ideal.generator(), b_val), "eval(b, theta) != 0 mod I");

  Mat2 completion = complete_sl2_rel(a_val, b_val, ideal);
  Sk1Certificate sk1 = sk1_invariant(completion, ideal);
  Verdict verdict =
      sk1.value.is_trivial() ? Verdict::inconclusive : Verdict::not_stable;
  return {row,  kind,        theta,       conductor, ideal,
          cert, completion,  sk1.divisor, sk1.value, verdict};
}

// Recompute every claim in a report from scratch; used by tests and by the
// CLI to double-check emitted certificates.
inline bool verify_obstruction_report(const ObstructionReport& rep) {
  if (rep.row.entries.size() != 3) return false;
  if (!verify_certificate(rep.row_certificate)) return false;
  if (!rep.row.entries[2].eval_quad(rep.theta).is_zero()) return false;
  if (floor_mod(rep.theta.a, rep.conductor) != 0 ||
      floor_mod(rep.theta.b, rep.conductor) != 0)
    return false;
  QuadInt a_val = rep.row.entries[0].eval_quad(rep.theta);
  QuadInt b_val = rep.row.entries[1].eval_quad(rep.theta);
  if (!(rep.completion.a == a_val) || !(rep.completion.b == b_val))
    return false;
  if (!in_sl2_rel(rep.completion, rep.ideal).ok) return false;
  Sk1Certificate again = sk1_invariant(rep.completion, rep.ideal);
  if (!(again.value == rep.value)) return false;
  return (rep.verdict == Verdict::not_stable) == !rep.value.is_trivial();
}

// ---------------------------------------------------------------------------
// Root search helper: roots theta of c in Z[i] and Z[zeta_3] with N(theta)
// within the Cauchy bound, each proposing f = gcd of theta's coordinates.
// ---------------------------------------------------------------------------

struct RootCandidate {
  RingKind ring;
  QuadInt theta;
  Int conductor;  // content of theta's coordinates
};

inline std::vector<RootCandidate> find_roots(const IntPoly& c) {
  require(!c.is_zero(), "find_roots: zero polynomial");
  std::vector<RootCandidate> out;
  if (c.degree() == 0) return out;
  Int maxc = 0;
  for (int i = 0; i < c.degree(); ++i)
    maxc = std::max(maxc, int_abs(c.coeff(i)));
  Int l = int_abs(c.lc());
  // |theta| <= 1 + maxc/l, so N(theta) <= ceil(((l + maxc)/l)^2)
  Int bound = ceil_div((l + maxc) * (l + maxc), l * l);
  require(bound <= 1000000,
          "find_roots: root norm bound exceeds 1e6; pass theta explicitly");
  Int span = isqrt(2 * bound) + 2;  // covers both lattice geometries
  for (RingKind kind : {RingKind::gaussian, RingKind::eisenstein}) {
    for (Int a = -span; a <= span; ++a) {
      for (Int b = -span; b <= span; ++b) {
        QuadInt theta{kind, a, b};
        if (theta.is_zero() || norm(theta) > bound) continue;
        if (!c.eval_quad(theta).is_zero()) continue;
        out.push_back({kind, theta, int_gcd(a, b)});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootCandidate& x, const RootCandidate& y) {
              if (x.ring != y.ring) return x.ring == RingKind::gaussian;
              Int nx = norm(x.theta), ny = norm(y.theta);
              if (nx != ny) return nx < ny;
              if (x.theta.a != y.theta.a) return x.theta.a < y.theta.a;
              return x.theta.b < y.theta.b;
            });
  return out;
}

// Automatic pipeline: try root candidates in order; prefer the first that
// yields a NotStable verdict, otherwise report the first that completes.
inline ObstructionReport obstruction_auto(const PolyRow& row) {
  require(row.entries.size() == 3, "obstruction: row must have 3 entries");
  std::vector<RootCandidate> roots = find_roots(row.entries[2]);
  if (roots.empty()) throw domain_error("no root in supported rings");
  std::optional<ObstructionReport> fallback;
  std::string last_error;
  for (const RootCandidate& cand : roots) {
    try {
      ObstructionReport rep =
          obstruction(row, cand.ring, cand.theta, cand.conductor);
      if (rep.verdict == Verdict::not_stable) return rep;
      if (!fallback) fallback = std::move(rep);
    } catch (const not_unimodular_error&) {
      throw;  // no other theta can help
    } catch (const domain_error& e) {
      last_error = e.what();
    }
  }
  if (fallback) return *fallback;
  throw domain_error("obstruction failed for every root candidate: " +
                     last_error);
}

// ---------------------------------------------------------------------------
// Bounded stabilizer search
// ---------------------------------------------------------------------------

struct StabilizerWitness {
  IntPoly s1, s2;
  BezoutCertificate certificate;  // for (a + s1*c, b + s2*c)
};

struct StabilizerNotFound {
  unsigned long search_space;
};

using StabilizerResult = std::variant<StabilizerWitness, StabilizerNotFound>;

namespace detail {

// Polynomials with deg <= deg_bound and coefficients in [-cb, cb], in scan
// order: by degree (zero polynomial first), then by coefficient tuple with
// the low-degree coefficient varying fastest, leading coefficient nonzero.
inline std::vector<IntPoly> scan_polys(int deg_bound, long cb) {
  std::vector<IntPoly> out;
  out.push_back(IntPoly{});
  for (int d = 0; d <= deg_bound; ++d) {
    std::vector<long> tuple(d + 1, -cb);
    while (true) {
      if (tuple[d] != 0) {
        std::vector<Int> coeffs;
        coeffs.reserve(d + 1);
        for (long v : tuple) coeffs.emplace_back(v);
        out.push_back(IntPoly(std::move(coeffs)));
      }
      int i = 0;
      while (i <= d && tuple[i] == cb) tuple[i++] = -cb;
      if (i > d) break;
      ++tuple[i];
    }
  }
  return out;
}

}  // namespace detail

// Exhaustive scan over pairs (s1, s2), lexicographic by (deg s1, deg s2,
// coefficient tuples); the first pair whose shortened row certifies
// unimodular wins. NotFound does not prove non-stability.
inline StabilizerResult search_stabilizer(const PolyRow& row, int deg_bound,
                                          long coeff_bound) {
  require(row.entries.size() == 3, "search_stabilizer: row must have 3 entries");
  require(deg_bound >= 0 && coeff_bound >= 0, "search_stabilizer: bad bounds");
  {
    double count = 1;
    for (int d = 0; d <= deg_bound; ++d) count *= 2 * coeff_bound + 1;
    require(count * count <= 4e6, "search_stabilizer: scan space exceeds 4e6");
  }
  require_unimodular(row);
  const IntPoly& a = row.entries[0];
  const IntPoly& b = row.entries[1];
  const IntPoly& c = row.entries[2];
  std::vector<IntPoly> candidates = detail::scan_polys(deg_bound, coeff_bound);
  unsigned long space = 0;
  for (const IntPoly& s1 : candidates) {
    for (const IntPoly& s2 : candidates) {
      ++space;
      PolyRow shortened(
          std::vector<IntPoly>{a + s1 * c, b + s2 * c});
      bool all_zero = shortened.entries[0].is_zero() &&
                      shortened.entries[1].is_zero();
      if (all_zero) continue;
      UnimodularResult res = unimodular_certificate(shortened);
      if (auto* cert = std::get_if<BezoutCertificate>(&res))
        return StabilizerWitness{s1, s2, std::move(*cert)};
    }
  }
  return StabilizerNotFound{space};
}

}  // namespace umcert
