#pragma once

// Exact univariate polynomials over Z: arithmetic, Horner evaluation into
// the quadratic rings, fraction-free pseudo-division, primitive-PRS gcd,
// and the subresultant resultant.

#include "umcert/int.hpp"
#include "umcert/quad.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace umcert {

class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }
  static IntPoly one() { return constant(1); }
  static IntPoly x() { return IntPoly({0, 1}); }

  static IntPoly monomial(Int coeff, size_t deg) {
    std::vector<Int> c(deg + 1, Int(0));
    c[deg] = std::move(coeff);
    return IntPoly(std::move(c));
  }

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  Int coeff(size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

  const Int& lc() const {
    require(!c_.empty(), "lc: zero polynomial");
    return c_.back();
  }

  const std::vector<Int>& coeffs() const { return c_; }

  Int content() const {
    Int g = 0;
    for (const Int& c : c_) g = int_gcd(g, c);
    return g;  // 0 for the zero polynomial
  }

  Int eval_int(const Int& t) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  QuadInt eval_quad(const QuadInt& theta) const {
    QuadInt acc = QuadInt::zero(theta.kind);
    for (size_t i = c_.size(); i-- > 0;)
      acc = acc * theta + QuadInt::from_int(theta.kind, c_[i]);
    return acc;
  }

  friend IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    std::vector<Int> c(std::max(f.c_.size(), g.c_.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    std::vector<Int> c(std::max(f.c_.size(), g.c_.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) - g.coeff(i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& f) {
    std::vector<Int> c = f.c_;
    for (Int& v : c) v = -v;
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Int> c(f.c_.size() + g.c_.size() - 1, Int(0));
    for (size_t i = 0; i < f.c_.size(); ++i)
      for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& f, const Int& s) {
    std::vector<Int> c = f.c_;
    for (Int& v : c) v *= s;
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const Int& s, const IntPoly& f) { return f * s; }

  friend bool operator==(const IntPoly& f, const IntPoly& g) {
    return f.c_ == g.c_;
  }

 private:
  void normalize() {
    while (!c_.empty() && sign_of(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Int> c_;  // low degree first, no trailing zeros
};

// Divide every coefficient by the content; zero stays zero, the sign of the
// leading coefficient is preserved.
inline IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Int g = f.content();
  std::vector<Int> c;
  c.reserve(f.coeffs().size());
  for (const Int& v : f.coeffs()) c.push_back(v / g);
  return IntPoly(std::move(c));
}

// Exact division in Z[x]; nullopt when d does not divide f.
inline std::optional<IntPoly> exact_div_poly(const IntPoly& f,
                                             const IntPoly& d) {
  require(!d.is_zero(), "exact_div_poly: division by zero");
  if (f.is_zero()) return IntPoly{};
  if (f.degree() < d.degree()) return std::nullopt;
  std::vector<Int> quo(f.degree() - d.degree() + 1, Int(0));
  IntPoly rem = f;
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.lc().get_mpz_t(),
                d.lc().get_mpz_t());
    if (sign_of(r) != 0) return std::nullopt;
    size_t k = rem.degree() - d.degree();
    quo[k] = q;
    rem = rem - IntPoly::monomial(q, k) * d;
  }
  if (!rem.is_zero()) return std::nullopt;
  return IntPoly(std::move(quo));
}

struct PseudoDiv {
  IntPoly q, r;
  unsigned power;  // lc(B)^power * A = q*B + r, power = deg A - deg B + 1
};

inline PseudoDiv pseudo_divmod(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero(), "pseudo_divmod: division by zero");
  int da = a.degree(), db = b.degree();
  if (da < db) return {IntPoly{}, a, 0};
  unsigned power = static_cast<unsigned>(da - db + 1);
  const Int& lb = b.lc();
  IntPoly q;
  IntPoly r = a;
  unsigned scaled = 0;
  while (!r.is_zero() && r.degree() >= db) {
    size_t k = r.degree() - db;
    Int lead = r.lc();
    q = q * lb + IntPoly::monomial(lead, k);
    r = r * lb - IntPoly::monomial(lead, k) * b;
    ++scaled;
  }
  // pad so exactly lc(B)^power scales A
  for (; scaled < power; ++scaled) {
    q = q * lb;
    r = r * lb;
  }
  return {q, r, power};
}

// Full gcd over Z (content included), leading coefficient normalized > 0.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
  require(!a.is_zero() || !b.is_zero(), "poly_gcd: both arguments zero");
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) {
    if (sign_of(a.lc()) < 0) return -a;
    return a;
  }
  Int cont = int_gcd(a.content(), b.content());
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_divmod(a, b).r);
    a = b;
    b = r;
  }
  IntPoly g = a * cont;
  if (sign_of(g.lc()) < 0) g = -g;
  return g;
}

// Resultant via the subresultant PRS (fraction-free), equal to the Sylvester
// determinant. Either argument zero gives 0.
inline Int resultant(IntPoly a, IntPoly b) {
  require(!a.is_zero() || !b.is_zero(), "resultant: both arguments zero");
  if (a.is_zero() || b.is_zero()) return 0;
  int s = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    Int r = 1;
    for (int i = 0; i < a.degree(); ++i) r *= b.lc();
    return s * r;
  }
  Int ca = a.content(), cb = b.content();
  a = primitive_part(a);
  b = primitive_part(b);
  Int t = 1;
  for (int i = 0; i < b.degree(); ++i) t *= ca;
  for (int i = 0; i < a.degree(); ++i) t *= cb;
  Int g = 1, h = 1;
  while (true) {
    int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_divmod(a, b).r;
    a = b;
    {
      Int div = g;
      for (int i = 0; i < delta; ++i) div *= h;
      std::vector<Int> c;
      c.reserve(r.coeffs().size());
      for (const Int& v : r.coeffs()) {
        Int q, rr;
        mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), v.get_mpz_t(),
                    div.get_mpz_t());
        if (sign_of(rr) != 0) internal_error("resultant: inexact division");
        c.push_back(q);
      }
      b = IntPoly(std::move(c));
    }
    g = a.lc();
    // h = g^delta / h^(delta - 1)
    if (delta == 0) {
      // h unchanged
    } else {
      Int num = 1;
      for (int i = 0; i < delta; ++i) num *= g;
      Int den = 1;
      for (int i = 0; i < delta - 1; ++i) den *= h;
      Int q, rr;
      mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(),
                  den.get_mpz_t());
      if (sign_of(rr) != 0) internal_error("resultant: inexact h update");
      h = q;
    }
    if (b.is_zero()) return 0;  // common factor of positive degree
    if (b.degree() == 0) break;
  }
  // final: resultant = s * t * lc(b)^deg(a) / h^(deg(a) - 1)
  Int num = 1;
  for (int i = 0; i < a.degree(); ++i) num *= b.lc();
  Int den = 1;
  for (int i = 0; i < a.degree() - 1; ++i) den *= h;
  Int q, rr;
  mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (sign_of(rr) != 0) internal_error("resultant: inexact final division");
  return s * t * q;
}

// ---------------------------------------------------------------------------
// Text grammar: integer-coefficient expressions in x, `^` powers, optional
// `*`: "x^2+16", "21+2*x", "1+x", "-3x^2". Output prints high degree first.
// ---------------------------------------------------------------------------

inline std::string format_poly(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    Int c = f.coeff(i);
    if (sign_of(c) == 0) continue;
    if (!out.empty()) out += sign_of(c) > 0 ? "+" : "-";
    else if (sign_of(c) < 0) out += "-";
    Int ab = int_abs(c);
    if (i == 0) {
      out += to_decimal(ab);
    } else {
      if (ab != 1) out += to_decimal(ab);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline IntPoly parse_poly(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  require(!s.empty(), "parse_poly: empty input");
  std::vector<Int> coeffs;
  auto add_term = [&coeffs](const Int& c, unsigned long e) {
    require(e <= 4096, "parse_poly: exponent too large");
    if (coeffs.size() <= e) coeffs.resize(e + 1, Int(0));
    coeffs[e] += c;
  };
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      require(i < s.size(), "parse_poly: dangling sign in '" + text + "'");
    } else {
      require(i == 0, "parse_poly: missing operator in '" + text + "'");
    }
    std::string digits;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') digits += s[i++];
    Int coeff = digits.empty() ? Int(1) : parse_int(digits);
    coeff *= sign;
    if (i < s.size() && s[i] == '*') {
      ++i;
      require(i < s.size() && s[i] == 'x',
              "parse_poly: expected x after '*' in '" + text + "'");
    }
    unsigned long expo = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      expo = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ed;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ed += s[i++];
        require(!ed.empty(), "parse_poly: missing exponent in '" + text + "'");
        expo = std::stoul(ed);
      }
    } else {
      require(!digits.empty(), "parse_poly: empty term in '" + text + "'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw domain_error("parse_poly: unexpected character '" +
                         std::string(1, s[i]) + "' in '" + text + "'");
    add_term(coeff, expo);
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace umcert
