#pragma once

// Unimodularity decisions for rows over Z[x] with machine-checkable output:
// either an exact Bezout certificate (Sum w_i * r_i = 1) or an obstruction
// (common rational-gcd factor, or a prime p where the row collapses mod p).
//
// Pipeline: a fraction-free cofactor fold produces some nonzero integer D in
// the row ideal. If the fold ends at positive degree the row has a common
// factor over Q. Otherwise only primes dividing D can obstruct; the row is
// checked mod each, and the witness is assembled from mod-p Bezout
// multipliers via CRT plus a geometric-series lift from rad(D) to D.

#include "umcert/int.hpp"
#include "umcert/intpoly.hpp"
#include "umcert/numtheory.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace umcert {

struct PolyRow {
  std::vector<IntPoly> entries;

  explicit PolyRow(std::vector<IntPoly> e) : entries(std::move(e)) {
    require(!entries.empty(), "PolyRow: empty row");
  }
};

struct BezoutCertificate {
  PolyRow row;
  std::vector<IntPoly> witnesses;  // Sum witnesses[i] * row[i] = 1 exactly
  Int d_stage;                     // the integer D produced by the fold
};

struct NonUnimodularObstruction {
  enum class Kind { common_complex_root, mod_p };
  Kind kind;
  IntPoly gcd;  // nonconstant rational gcd, or the common mod-p gcd
  Int p;        // the obstructing prime (mod_p only)
};

class not_unimodular_error : public domain_error {
 public:
  not_unimodular_error(const std::string& what, NonUnimodularObstruction obs)
      : domain_error(what), obstruction(std::move(obs)) {}
  NonUnimodularObstruction obstruction;
};

using UnimodularResult = std::variant<BezoutCertificate, NonUnimodularObstruction>;

inline bool verify_certificate(const BezoutCertificate& cert) {
  if (cert.witnesses.size() != cert.row.entries.size()) return false;
  IntPoly sum;
  for (size_t i = 0; i < cert.witnesses.size(); ++i)
    sum = sum + cert.witnesses[i] * cert.row.entries[i];
  return sum.is_one();
}

// ---------------------------------------------------------------------------
// Dense polynomials over the p-element field, coefficients canonical in
// [0, p). Only what the certificate pipeline needs.
// ---------------------------------------------------------------------------

class FpContext {
 public:
  explicit FpContext(Int p) : p_(std::move(p)) {
    require(p_ > 1, "FpContext: modulus must exceed 1");
  }

  const Int& p() const { return p_; }

  using Poly = std::vector<Int>;  // low degree first, normalized

  Poly reduce(const IntPoly& f) const {
    Poly out;
    out.reserve(f.coeffs().size());
    for (const Int& c : f.coeffs()) out.push_back(floor_mod(c, p_));
    normalize(out);
    return out;
  }

  static int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }
  static bool is_zero(const Poly& f) { return f.empty(); }

  Poly add(const Poly& f, const Poly& g) const {
    Poly out(std::max(f.size(), g.size()), Int(0));
    for (size_t i = 0; i < out.size(); ++i)
      out[i] = floor_mod(coeff(f, i) + coeff(g, i), p_);
    normalize(out);
    return out;
  }

  Poly sub(const Poly& f, const Poly& g) const {
    Poly out(std::max(f.size(), g.size()), Int(0));
    for (size_t i = 0; i < out.size(); ++i)
      out[i] = floor_mod(coeff(f, i) - coeff(g, i), p_);
    normalize(out);
    return out;
  }

  Poly mul(const Poly& f, const Poly& g) const {
    if (f.empty() || g.empty()) return {};
    Poly out(f.size() + g.size() - 1, Int(0));
    for (size_t i = 0; i < f.size(); ++i)
      for (size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    for (Int& c : out) c = floor_mod(c, p_);
    normalize(out);
    return out;
  }

  Poly scale(const Poly& f, const Int& s) const {
    Poly out = f;
    for (Int& c : out) c = floor_mod(c * s, p_);
    normalize(out);
    return out;
  }

  // f = q*g + r with deg r < deg g (g != 0); p prime so lc(g) inverts.
  std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) const {
    require(!g.empty(), "FpContext::divmod: division by zero");
    Poly r = f, q;
    Int linv = invmod(g.back(), p_);
    while (!r.empty() && degree(r) >= degree(g)) {
      size_t k = r.size() - g.size();
      Int c = floor_mod(r.back() * linv, p_);
      if (q.size() < k + 1) q.resize(k + 1, Int(0));
      q[k] = floor_mod(q[k] + c, p_);
      for (size_t i = 0; i < g.size(); ++i)
        r[i + k] = floor_mod(r[i + k] - c * g[i], p_);
      normalize(r);
    }
    normalize(q);
    return {q, r};
  }

  Poly gcd(Poly f, Poly g) const {
    while (!g.empty()) {
      Poly r = divmod(f, g).second;
      f = std::move(g);
      g = std::move(r);
    }
    if (!f.empty()) f = scale(f, invmod(f.back(), p_));  // monic
    return f;
  }

  // Bezout fold across a row: cofactors W with Sum W_i * row_i = g (monic
  // gcd of the images). Standard extended Euclid, folded pairwise.
  std::pair<Poly, std::vector<Poly>> bezout_fold(
      const std::vector<IntPoly>& row) const {
    Poly g;  // zero
    std::vector<Poly> w(row.size());
    for (size_t i = 0; i < row.size(); ++i) {
      Poly ri = reduce(row[i]);
      if (is_zero(ri)) continue;
      if (is_zero(g)) {
        Int linv = invmod(ri.back(), p_);
        g = scale(ri, linv);
        w.assign(row.size(), Poly{});
        w[i] = Poly{linv};
        continue;
      }
      auto [gg, u, v] = ext_gcd(g, ri);
      std::vector<Poly> nw(row.size());
      for (size_t j = 0; j < row.size(); ++j) nw[j] = mul(u, w[j]);
      nw[i] = add(nw[i], v);
      g = gg;
      w = std::move(nw);
    }
    return {g, w};
  }

 private:
  static Int coeff(const Poly& f, size_t i) {
    return i < f.size() ? f[i] : Int(0);
  }

  static void normalize(Poly& f) {
    while (!f.empty() && sign_of(f.back()) == 0) f.pop_back();
  }

  // monic g = u*f + v*h
  std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& f, const Poly& h) const {
    Poly r0 = f, r1 = h;
    Poly s0{Int(1)}, s1, t0, t1{Int(1)};
    normalize(s0);
    normalize(t1);
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      Poly s2 = sub(s0, mul(q, s1));
      Poly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (!r0.empty()) {
      Int linv = invmod(r0.back(), p_);
      return {scale(r0, linv), scale(s0, linv), scale(t0, linv)};
    }
    return {r0, s0, t0};
  }

  Int p_;
};

// ---------------------------------------------------------------------------
// Fraction-free cofactor fold over Z[x]
// ---------------------------------------------------------------------------

namespace detail {

struct FoldState {
  IntPoly g;                      // current combination
  std::vector<IntPoly> cofactors; // Sum cofactors[i] * row[i] = g exactly
};

// Divide (g, cofactors) by the gcd of every coefficient appearing in any of
// them; keeps the Bezout identity exact while controlling growth.
inline void reduce_content(IntPoly& g, std::vector<IntPoly>& cof) {
  Int gamma = g.content();
  for (const IntPoly& w : cof) gamma = int_gcd(gamma, w.content());
  if (gamma <= 1) return;
  auto divide = [&gamma](const IntPoly& f) {
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (const Int& v : f.coeffs()) c.push_back(v / gamma);
    return IntPoly(std::move(c));
  };
  g = divide(g);
  for (IntPoly& w : cof) w = divide(w);
}

// Euclid on (A, B) with cofactor tracking: returns (G, cof) with
// Sum cof_i * row_i = G, where G is a constant iff gcd_Q(A, B) is.
inline FoldState combine(FoldState a, FoldState b) {
  if (a.g.is_zero()) return b;
  if (b.g.is_zero()) return a;
  if (a.g.degree() == 0 && b.g.degree() == 0) {
    IntExtGcd e = int_ext_gcd(a.g.coeff(0), b.g.coeff(0));
    FoldState out;
    out.g = IntPoly::constant(e.g);
    out.cofactors.resize(a.cofactors.size());
    for (size_t i = 0; i < out.cofactors.size(); ++i)
      out.cofactors[i] =
          a.cofactors[i] * e.u + b.cofactors[i] * e.v;
    return out;
  }
  if (a.g.degree() == 0) return a;  // a constant already generates Z-content
  if (b.g.degree() == 0) return b;
  if (a.g.degree() < b.g.degree()) std::swap(a, b);
  while (true) {
    PseudoDiv pd = pseudo_divmod(a.g, b.g);
    Int scale = 1;
    for (unsigned i = 0; i < pd.power; ++i) scale *= b.g.lc();
    FoldState r;
    r.g = pd.r;
    r.cofactors.resize(a.cofactors.size());
    for (size_t i = 0; i < r.cofactors.size(); ++i)
      r.cofactors[i] = a.cofactors[i] * scale - pd.q * b.cofactors[i];
    if (r.g.is_zero()) return b;
    reduce_content(r.g, r.cofactors);
    a = std::move(b);
    b = std::move(r);
    if (b.g.degree() == 0) return b;
    if (a.g.degree() < b.g.degree()) std::swap(a, b);
  }
}

inline FoldState bezout_fold(const std::vector<IntPoly>& row) {
  FoldState acc;
  acc.g = IntPoly{};
  acc.cofactors.assign(row.size(), IntPoly{});
  for (size_t i = 0; i < row.size(); ++i) {
    FoldState e;
    e.g = row[i];
    e.cofactors.assign(row.size(), IntPoly{});
    e.cofactors[i] = IntPoly::one();
    acc = combine(std::move(acc), std::move(e));
  }
  return acc;
}

}  // namespace detail

// Decide unimodularity of a row over Z[x]; see the header comment for the
// pipeline. Every certificate is re-verified before being returned; failure
// of that check is a hard internal error, never a wrong answer.
inline UnimodularResult unimodular_certificate(const PolyRow& row) {
  bool all_zero = true;
  for (const IntPoly& f : row.entries)
    if (!f.is_zero()) all_zero = false;
  require(!all_zero, "unimodular_certificate: all-zero row");

  detail::FoldState fold = detail::bezout_fold(row.entries);
  {
    IntPoly check;
    for (size_t i = 0; i < row.entries.size(); ++i)
      check = check + fold.cofactors[i] * row.entries[i];
    if (!(check == fold.g)) internal_error("bezout_fold: identity failed");
  }

  if (fold.g.degree() >= 1) {
    IntPoly g = primitive_part(fold.g);
    if (sign_of(g.lc()) < 0) g = -g;
    // recheck: the reported gcd must divide every entry
    for (const IntPoly& f : row.entries)
      if (!f.is_zero() && !exact_div_poly(f, g))
        internal_error("common-root obstruction recheck failed");
    return NonUnimodularObstruction{
        NonUnimodularObstruction::Kind::common_complex_root, g, Int(0)};
  }

  Int d = fold.g.coeff(0);
  std::vector<IntPoly> u = fold.cofactors;
  if (sign_of(d) < 0) {
    d = -d;
    for (IntPoly& w : u) w = -w;
  }

  if (d == 1)
    return BezoutCertificate{row, std::move(u), d};

  IntFactorization df = factor_int(d);
  unsigned s = 0;
  for (const auto& f : df.factors) s = std::max(s, f.exponent);
  require(s <= 64,
          "unimodular_certificate: witness exponent blow-up (s > 64)");

  // mod-p obstruction scan + mod-p Bezout multipliers
  std::vector<std::vector<FpContext::Poly>> mod_witnesses;
  std::vector<Int> primes;
  for (const auto& f : df.factors) {
    FpContext fp(f.prime);
    auto [g, w] = fp.bezout_fold(row.entries);
    if (FpContext::degree(g) != 0) {
      IntPoly lifted(g.empty() ? std::vector<Int>{}
                               : std::vector<Int>(g.begin(), g.end()));
      return NonUnimodularObstruction{NonUnimodularObstruction::Kind::mod_p,
                                      lifted, f.prime};
    }
    mod_witnesses.push_back(std::move(w));
    primes.push_back(f.prime);
  }

  // CRT-combine the mod-p multipliers coefficient-wise; symmetric residues
  // keep the error polynomial e small.
  Int rad = radical(df);
  std::vector<IntPoly> v(row.entries.size());
  for (size_t i = 0; i < v.size(); ++i) {
    size_t deg = 0;
    for (const auto& w : mod_witnesses)
      deg = std::max(deg, w[i].size());
    std::vector<Int> c(deg, Int(0));
    for (size_t k = 0; k < deg; ++k) {
      std::vector<std::pair<Int, Int>> congruences;
      for (size_t pi = 0; pi < primes.size(); ++pi) {
        Int residue = k < mod_witnesses[pi][i].size() ? mod_witnesses[pi][i][k]
                                                      : Int(0);
        congruences.emplace_back(residue, primes[pi]);
      }
      Int r = crt(congruences);
      if (2 * r > rad) r -= rad;  // symmetric representative
      c[k] = r;
    }
    v[i] = IntPoly(std::move(c));
  }

  IntPoly e = IntPoly::one();
  for (size_t i = 0; i < v.size(); ++i) e = e - v[i] * row.entries[i];
  for (const Int& c : e.coeffs())
    if (floor_mod(c, rad) != 0)
      internal_error("unimodular_certificate: e not divisible by rad(D)");

  // (1 - e)(1 + e + ... + e^{s-1}) = 1 - e^s and D | rad^s divides e^s
  IntPoly series = IntPoly::one();
  IntPoly epow = e;
  for (unsigned i = 1; i < s; ++i) {
    series = series + epow;
    epow = epow * e;
  }
  // epow = e^s now
  std::vector<Int> hc;
  hc.reserve(epow.coeffs().size());
  for (const Int& c : epow.coeffs()) {
    auto [q, r] = euclid_divmod(c, d);
    if (sign_of(r) != 0)
      internal_error("unimodular_certificate: e^s not divisible by D");
    hc.push_back(q);
  }
  IntPoly h(std::move(hc));

  std::vector<IntPoly> witnesses(row.entries.size());
  for (size_t i = 0; i < witnesses.size(); ++i)
    witnesses[i] = v[i] * series + h * u[i];

  BezoutCertificate cert{row, std::move(witnesses), d};
  if (!verify_certificate(cert))
    internal_error("unimodular_certificate: witness verification failed");
  return cert;
}

// Convenience wrapper: certificate or a not_unimodular_error.
inline BezoutCertificate require_unimodular(const PolyRow& row) {
  UnimodularResult res = unimodular_certificate(row);
  if (auto* obs = std::get_if<NonUnimodularObstruction>(&res)) {
    std::string what = "row not unimodular: ";
    what += obs->kind == NonUnimodularObstruction::Kind::common_complex_root
                ? "common factor of positive degree over Q"
                : "row collapses mod " + to_decimal(obs->p);
    throw not_unimodular_error(what, *obs);
  }
  return std::get<BezoutCertificate>(std::move(res));
}

}  // namespace umcert
