#include "umcert/quad.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace umcert;

namespace {
constexpr RingKind G = RingKind::gaussian;
constexpr RingKind E = RingKind::eisenstein;

QuadInt gq(long a, long b) { return {G, Int(a), Int(b)}; }
QuadInt eq(long a, long b) { return {E, Int(a), Int(b)}; }
}  // namespace

TEST_CASE("norm examples") {
  CHECK(norm(gq(1, 4)) == 17);
  CHECK(norm(gq(0, 0)) == 0);
  CHECK(norm(eq(1, -1)) == 3);  // 1 - zeta_3
  CHECK(norm(eq(1, 1)) == 1);   // the order-6 unit
}

TEST_CASE("norm is multiplicative") {
  testutil::Rng rng(0x41142);
  for (int i = 0; i < 10000; ++i) {
    RingKind k = rng.range(0, 1) ? G : E;
    QuadInt x = testutil::random_quad(rng, k, 1000);
    QuadInt y = testutil::random_quad(rng, k, 1000);
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK(x * conj(x) == QuadInt::from_int(k, norm(x)));
  }
}

TEST_CASE("mixing kinds is rejected") {
  CHECK_THROWS_AS(gq(1, 0) + eq(1, 0), domain_error);
  CHECK_THROWS_AS(gq(1, 0) * eq(1, 0), domain_error);
}

TEST_CASE("divmod examples") {
  // (i - 4) = i * (1 + 4i) exactly
  auto [q1, r1] = divmod(gq(-4, 1), gq(1, 4));
  CHECK(q1 == gq(0, 1));
  CHECK(r1.is_zero());

  auto [q2, r2] = divmod(gq(7, -3), gq(1, 0));
  CHECK(q2 == gq(7, -3));
  CHECK(r2.is_zero());

  // divisor of norm 2: remainder norm must be <= 1; oracle enumerates the
  // four rounding candidates
  auto [q3, r3] = divmod(gq(5, 0), gq(1, 1));
  CHECK(norm(r3) <= 1);
  CHECK(gq(5, 0) == q3 * gq(1, 1) + r3);
  {
    Int best = norm(gq(5, 0));
    for (long qa = 1; qa <= 3; ++qa)
      for (long qb = -4; qb <= 0; ++qb) {
        Int n = norm(gq(5, 0) - gq(qa, qb) * gq(1, 1));
        if (n < best) best = n;
      }
    CHECK(norm(r3) == best);
  }

  CHECK_THROWS_AS(divmod(gq(1, 2), gq(0, 0)), domain_error);
}

TEST_CASE("divmod remainder bound and gcd step count") {
  testutil::Rng rng(0xd1f3);
  for (int i = 0; i < 10000; ++i) {
    RingKind k = rng.range(0, 1) ? G : E;
    QuadInt x = testutil::random_quad(rng, k, 10000);
    QuadInt y = testutil::random_quad(rng, k, 10000);
    if (y.is_zero()) continue;
    auto [q, r] = divmod(x, y);
    CHECK(x == q * y + r);
    if (k == G)
      CHECK(2 * norm(r) <= norm(y));
    else
      CHECK(3 * norm(r) <= norm(y));

    // Euclid terminates in O(log N) steps since the norm at least halves
    if (!x.is_zero()) {
      QuadInt a = x, b = y;
      int steps = 0;
      while (!b.is_zero()) {
        QuadInt rem = divmod(a, b).r;
        a = b;
        b = rem;
        ++steps;
      }
      CHECK(steps <= 2 + static_cast<int>(mpz_sizeinbase(norm(y).get_mpz_t(), 2)));
    }
  }
}

TEST_CASE("canonical associate examples") {
  auto [c1, u1] = canonical_associate(gq(1, -4));
  CHECK(c1 == gq(4, 1));
  CHECK(u1 == gq(0, -1));
  CHECK(u1 * c1 == gq(1, -4));

  auto [c2, u2] = canonical_associate(gq(1, 0));
  CHECK(c2 == gq(1, 0));
  CHECK(u2 == gq(1, 0));

  auto [c3, u3] = canonical_associate(gq(-3, 0));
  CHECK(c3 == gq(3, 0));
  CHECK(u3 == gq(-1, 0));

  CHECK_THROWS_AS(canonical_associate(gq(0, 0)), domain_error);

  // Eisenstein: canonical associate of 1 - zeta_3 is 2 + zeta_3
  auto [c4, u4] = canonical_associate(eq(1, -1));
  CHECK(c4 == eq(2, 1));
  CHECK(u4 * c4 == eq(1, -1));
}

TEST_CASE("exactly one associate lies in the canonical sector") {
  for (RingKind k : {G, E}) {
    for (long a = -8; a <= 8; ++a) {
      for (long b = -8; b <= 8; ++b) {
        QuadInt x{k, Int(a), Int(b)};
        if (x.is_zero()) continue;
        int hits = 0;
        for (const QuadInt& u : units(k))
          if (in_canonical_sector(u * x)) ++hits;
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("canonical associate is idempotent and constant on classes") {
  testutil::Rng rng(0xca7a);
  for (int i = 0; i < 4000; ++i) {
    RingKind k = rng.range(0, 1) ? G : E;
    QuadInt x = testutil::random_quad(rng, k, 500);
    if (x.is_zero()) continue;
    QuadInt c = canonical_associate(x).canonical;
    CHECK(canonical_associate(c).canonical == c);
    CHECK(canonical_associate(c).unit == QuadInt::one(k));
    for (const QuadInt& u : units(k))
      CHECK(canonical_associate(u * x).canonical == c);
  }
}

TEST_CASE("gcd and ext_gcd examples") {
  CHECK(quad_gcd(gq(12, 0), gq(1, 4)) == gq(1, 0));
  CHECK(quad_gcd(gq(7, -2), gq(0, 0)) ==
        canonical_associate(gq(7, -2)).canonical);
  CHECK(quad_gcd(gq(4, 0), gq(2, 2)) == gq(2, 2));
  CHECK_THROWS_AS(quad_gcd(gq(0, 0), gq(0, 0)), domain_error);

  QuadExtGcd e = quad_ext_gcd(gq(12, 0), gq(1, 4));
  CHECK(e.g == gq(1, 0));
  CHECK(e.u * gq(12, 0) + e.v * gq(1, 4) == e.g);
}

TEST_CASE("ext_gcd identity and divisibility on random pairs") {
  testutil::Rng rng(0xe67cd);
  for (int i = 0; i < 4000; ++i) {
    RingKind k = rng.range(0, 1) ? G : E;
    QuadInt x = testutil::random_quad(rng, k, 300);
    QuadInt y = testutil::random_quad(rng, k, 300);
    if (x.is_zero() && y.is_zero()) continue;
    QuadExtGcd e = quad_ext_gcd(x, y);
    CHECK(e.u * x + e.v * y == e.g);
    CHECK(in_canonical_sector(e.g));
    if (!x.is_zero()) CHECK(divides(e.g, x));
    if (!y.is_zero()) CHECK(divides(e.g, y));
  }
}

TEST_CASE("factor examples") {
  QuadFactorization f4 = factor(gq(4, 0));
  CHECK(f4.unit == gq(-1, 0));
  REQUIRE(f4.factors.size() == 1);
  CHECK(f4.factors[0].prime == gq(1, 1));
  CHECK(f4.factors[0].exponent == 4);

  QuadFactorization f17 = factor(gq(17, 0));
  CHECK(f17.unit == gq(0, -1));
  REQUIRE(f17.factors.size() == 2);
  CHECK(f17.factors[0].prime == gq(1, 4));
  CHECK(f17.factors[0].exponent == 1);
  CHECK(f17.factors[1].prime == gq(4, 1));
  CHECK(f17.factors[1].exponent == 1);

  QuadFactorization f3 = factor(gq(3, 0));  // inert
  CHECK(f3.unit == gq(1, 0));
  REQUIRE(f3.factors.size() == 1);
  CHECK(f3.factors[0].prime == gq(3, 0));
  CHECK(norm(f3.factors[0].prime) == 9);

  QuadFactorization fu = factor(gq(0, -1));  // unit input
  CHECK(fu.unit == gq(0, -1));
  CHECK(fu.factors.empty());

  CHECK_THROWS_AS(factor(gq(0, 0)), domain_error);

  // Eisenstein ramified: 3 = unit * (2 + zeta_3)^2
  QuadFactorization e3 = factor(eq(3, 0));
  REQUIRE(e3.factors.size() == 1);
  CHECK(e3.factors[0].prime == eq(2, 1));
  CHECK(e3.factors[0].exponent == 2);

  // Eisenstein split: 7 = 1 mod 3
  QuadFactorization e7 = factor(eq(7, 0));
  REQUIRE(e7.factors.size() == 2);
  CHECK(norm(e7.factors[0].prime) == 7);
  CHECK(norm(e7.factors[1].prime) == 7);

  // Eisenstein inert: 2
  QuadFactorization e2 = factor(eq(2, 0));
  REQUIRE(e2.factors.size() == 1);
  CHECK(e2.factors[0].prime == eq(2, 0));
}

TEST_CASE("factor roundtrip on random elements of norm up to 1e6") {
  testutil::Rng rng(0xfac2);
  int done = 0;
  while (done < 10000) {
    RingKind k = rng.range(0, 1) ? G : E;
    QuadInt x = testutil::random_quad(rng, k, 700);
    if (x.is_zero() || norm(x) > 1000000) continue;
    ++done;
    QuadFactorization f = factor(x);
    CHECK(f.recompose() == x);
    CHECK(is_unit(f.unit));
    for (const auto& pf : f.factors) {
      CHECK(in_canonical_sector(pf.prime));
      CHECK(is_quad_prime(pf.prime));
    }
    for (size_t i = 1; i < f.factors.size(); ++i) {
      Int n0 = norm(f.factors[i - 1].prime), n1 = norm(f.factors[i].prime);
      CHECK((n0 < n1 || (n0 == n1 && f.factors[i - 1].prime.a <= f.factors[i].prime.a)));
    }
  }
}

TEST_CASE("ord_prime examples") {
  CHECK(ord_prime(gq(4, 0), gq(1, 1)) == 4);
  CHECK(ord_prime(gq(12, 0), gq(1, 4)) == 0);
  CHECK(ord_prime(gq(1, 4), gq(1, 4)) == 1);
  CHECK(ord_prime(gq(2, 0), gq(1, 1)) == 2);
}

TEST_CASE("principal ideals normalize generators") {
  PrincipalIdeal i1(gq(1, -4));
  PrincipalIdeal i2(gq(4, 1));
  CHECK(i1 == i2);
  CHECK(i1.generator() == gq(4, 1));
  PrincipalIdeal zero(gq(0, 0));
  CHECK(zero.is_zero());
}

TEST_CASE("quad parse and format round trips") {
  CHECK(format_quad(gq(1, 4)) == "1+4i");
  CHECK(format_quad(gq(17, -68)) == "17-68i");
  CHECK(format_quad(gq(0, 1)) == "i");
  CHECK(format_quad(gq(0, -1)) == "-i");
  CHECK(format_quad(gq(0, 4)) == "4i");
  CHECK(format_quad(gq(-3, 0)) == "-3");
  CHECK(format_quad(gq(0, 0)) == "0");
  CHECK(format_quad(eq(2, 1)) == "2+w");

  CHECK(parse_quad(G, "1+4i") == gq(1, 4));
  CHECK(parse_quad(G, " 17 - 68 i ") == gq(17, -68));
  CHECK(parse_quad(G, "4i") == gq(0, 4));
  CHECK(parse_quad(G, "-i") == gq(0, -1));
  CHECK(parse_quad(G, "12") == gq(12, 0));
  CHECK(parse_quad(E, "2-w") == eq(2, -1));
  CHECK_THROWS_AS(parse_quad(G, "1+4w"), domain_error);
  CHECK_THROWS_AS(parse_quad(G, "1+"), domain_error);
  CHECK_THROWS_AS(parse_quad(G, "i+i"), domain_error);
  CHECK_THROWS_AS(parse_quad(G, ""), domain_error);

  testutil::Rng rng(0x9a25e);
  for (int i = 0; i < 2000; ++i) {
    RingKind k = rng.range(0, 1) ? G : E;
    QuadInt x = testutil::random_quad(rng, k, 100000);
    CHECK(parse_quad(k, format_quad(x)) == x);
  }
}
