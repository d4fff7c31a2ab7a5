#include "umcert/numtheory.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace umcert;

TEST_CASE("factor_int basics") {
  IntFactorization f = factor_int(Int(12));
  CHECK(f.sign == 1);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == 2);
  CHECK(f.factors[0].exponent == 2);
  CHECK(f.factors[1].prime == 3);
  CHECK(f.factors[1].exponent == 1);
  CHECK(f.recompose() == 12);

  IntFactorization unit = factor_int(Int(1));
  CHECK(unit.sign == 1);
  CHECK(unit.factors.empty());

  IntFactorization neg = factor_int(Int(-1));
  CHECK(neg.sign == -1);
  CHECK(neg.factors.empty());

  // 521 is prime: trial division up to isqrt(521) = 22 finds no divisor
  for (long d = 2; d * d <= 521; ++d) CHECK(521 % d != 0);
  IntFactorization p = factor_int(Int(521));
  REQUIRE(p.factors.size() == 1);
  CHECK(p.factors[0].prime == 521);
  CHECK(p.factors[0].exponent == 1);

  CHECK_THROWS_AS(factor_int(Int(0)), domain_error);
}

TEST_CASE("factor_int roundtrip on random values up to 1e12") {
  testutil::Rng rng(0xfac70121);
  for (int i = 0; i < 10000; ++i) {
    Int n = rng.bits(40) + 1;
    if (rng.range(0, 1)) n = -n;
    IntFactorization f = factor_int(n);
    CHECK(f.recompose() == n);
    Int prev = 1;
    for (const auto& pf : f.factors) {
      CHECK(is_prime(pf.prime));
      CHECK(pf.prime > prev);
      prev = pf.prime;
    }
  }
}

TEST_CASE("factor_int handles large semiprimes via rho") {
  Int a("1000003"), b("1000033");
  IntFactorization f = factor_int(a * b);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == a);
  CHECK(f.factors[1].prime == b);
}

TEST_CASE("modexp examples and exhaustive small oracle") {
  CHECK(modexp(Int(12), Int(8), Int(17)) == 16);
  CHECK(modexp(Int(7), Int(0), Int(10)) == 1);
  CHECK(modexp(Int(13), Int(8), Int(17)) == 1);
  CHECK_THROWS_AS(modexp(Int(2), Int(3), Int(1)), domain_error);

  // oracle: naive repeated multiplication, all b, e, n <= 200
  for (long n = 2; n <= 200; ++n) {
    for (long b = 0; b <= 200; ++b) {
      long acc = 1 % n;
      long bb = b % n;
      for (long e = 0; e <= 200; ++e) {
        CHECK(modexp(Int(b), Int(e), Int(n)) == acc);
        acc = (acc * bb) % n;
      }
    }
  }
}

TEST_CASE("sqrt_minus_one examples and property") {
  CHECK(sqrt_minus_one(Int(5)) == 2);
  CHECK(sqrt_minus_one(Int(17)) == 4);
  CHECK(sqrt_minus_one(Int(13)) == 5);
  CHECK_THROWS_AS(sqrt_minus_one(Int(7)), domain_error);
  CHECK_THROWS_AS(sqrt_minus_one(Int(2)), domain_error);
  CHECK_THROWS_AS(sqrt_minus_one(Int(15)), domain_error);

  for (uint32_t p : primes_up_to(10000)) {
    if (p % 4 != 1) continue;
    Int r = sqrt_minus_one(Int(p));
    CHECK(floor_mod(r * r + 1, Int(p)) == 0);
    CHECK(r > 0);
    CHECK(2 * r < p);  // the smaller root
  }
}

TEST_CASE("cube_root_of_unity property") {
  for (uint32_t p : primes_up_to(3000)) {
    if (p % 3 != 1) continue;
    Int t = cube_root_of_unity(Int(p));
    CHECK(floor_mod(t * t + t + 1, Int(p)) == 0);
    CHECK(modexp(t, Int(3), Int(p)) == 1);
  }
}

TEST_CASE("crt examples") {
  CHECK(crt({{Int(1), Int(2)}, {Int(2), Int(3)}}) == 5);
  CHECK(crt({{Int(0), Int(5)}}) == 0);
  // direct search oracle over 0..139
  long expected = -1;
  for (long x = 0; x < 140; ++x)
    if (x % 4 == 3 && x % 5 == 4 && x % 7 == 0) {
      expected = x;
      break;
    }
  CHECK(expected == 119);
  CHECK(crt({{Int(3), Int(4)}, {Int(4), Int(5)}, {Int(0), Int(7)}}) == expected);
  CHECK_THROWS_AS(crt({{Int(1), Int(4)}, {Int(1), Int(6)}}), domain_error);
  CHECK_THROWS_AS(crt({}), domain_error);
}

TEST_CASE("crt output is the unique solution in canonical range") {
  // brute scan over the full residue range for small moduli
  for (long r1 = 0; r1 < 4; ++r1)
    for (long r2 = 0; r2 < 9; ++r2)
      for (long r3 = 0; r3 < 5; ++r3) {
        Int x = crt({{Int(r1), Int(4)}, {Int(r2), Int(9)}, {Int(r3), Int(5)}});
        long hits = 0;
        for (long y = 0; y < 180; ++y)
          if (y % 4 == r1 && y % 9 == r2 && y % 5 == r3) {
            ++hits;
            CHECK(x == y);
          }
        CHECK(hits == 1);
      }
}

TEST_CASE("crt satisfies every congruence on random instances") {
  testutil::Rng rng(0xc27);
  const long moduli_pool[] = {4, 9, 5, 7, 11, 13};
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<std::pair<Int, Int>> cs;
    Int product = 1;
    for (long m : moduli_pool) {
      if (rng.range(0, 1)) continue;
      cs.emplace_back(rng.int_range(0, m - 1), Int(m));
      product *= m;
    }
    if (cs.empty()) continue;
    Int x = crt(cs);
    CHECK(x >= 0);
    CHECK(x < product);
    for (const auto& [r, m] : cs) CHECK(floor_mod(x, m) == r);
  }
}

TEST_CASE("is_prime agrees with the sieve") {
  auto primes = primes_up_to(2000);
  size_t idx = 0;
  for (long n = 0; n <= 2000; ++n) {
    bool in_sieve = idx < primes.size() && primes[idx] == n;
    if (in_sieve) ++idx;
    CHECK(is_prime(Int(n)) == in_sieve);
  }
  Int belphegor("1000000000000066600000000000001");
  CHECK(is_prime(belphegor));
  CHECK_FALSE(is_prime(belphegor * belphegor));
}
