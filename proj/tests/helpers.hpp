#pragma once

// Shared test utilities: a deterministic RNG (raw mt19937_64, no libstdc++
// distributions, so sequences are identical everywhere) and small exact
// linear-algebra oracles kept independent of the library's algorithms.

#include "umcert/int.hpp"
#include "umcert/intpoly.hpp"
#include "umcert/quad.hpp"

#include <random>
#include <vector>

namespace testutil {

using umcert::Int;

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  // uniform in [lo, hi] for small ranges
  long range(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<uint64_t>(hi - lo + 1));
  }

  Int int_range(long lo, long hi) { return Int(range(lo, hi)); }

  // uniform in [0, 2^bits)
  Int bits(unsigned bits) {
    Int out = 0;
    unsigned got = 0;
    while (got < bits) {
      unsigned take = std::min(32u, bits - got);
      out <<= take;
      out += Int(static_cast<unsigned long>(eng_() & ((1ull << take) - 1)));
      got += take;
    }
    return out;
  }

  uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// Fraction-free Bareiss determinant of a square Int matrix (destroys m).
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (umcert::sign_of(m[k][k]) == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && umcert::sign_of(m[swap_row][k]) == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num / prev;  // exact by Bareiss
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Sylvester-matrix resultant, the oracle for the subresultant implementation.
inline Int sylvester_resultant(const umcert::IntPoly& f,
                               const umcert::IntPoly& g) {
  int df = f.degree(), dg = g.degree();
  if (df < 0 || dg < 0) return 0;
  size_t n = static_cast<size_t>(df + dg);
  if (n == 0) return 1;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  for (int row = 0; row < dg; ++row)
    for (int k = 0; k <= df; ++k) m[row][row + df - k] = f.coeff(k);
  for (int row = 0; row < df; ++row)
    for (int k = 0; k <= dg; ++k) m[dg + row][row + dg - k] = g.coeff(k);
  return bareiss_det(std::move(m));
}

inline umcert::IntPoly random_poly(Rng& rng, int max_deg, long coeff_bound) {
  int d = static_cast<int>(rng.range(-1, max_deg));
  if (d < 0) return umcert::IntPoly{};
  std::vector<Int> c;
  for (int i = 0; i <= d; ++i) c.push_back(rng.int_range(-coeff_bound, coeff_bound));
  return umcert::IntPoly(std::move(c));
}

inline umcert::QuadInt random_quad(Rng& rng, umcert::RingKind kind, long bound) {
  return {kind, rng.int_range(-bound, bound), rng.int_range(-bound, bound)};
}

}  // namespace testutil
