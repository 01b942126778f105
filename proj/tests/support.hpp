#pragma once

// Generators and brute-force oracles shared by the test binaries. The oracles
// deliberately avoid the library's normal forms: they use cofactor
// expansion, direct enumeration and hand-written Gram matrices.

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "og10/cones.hpp"
#include "og10/error.hpp"
#include "og10/discriminant.hpp"
#include "og10/lattice.hpp"
#include "og10/linalg.hpp"
#include "og10/moduli.hpp"
#include "og10/walls.hpp"

namespace og10::test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }

  IntVec vec(std::size_t n, long lo, long hi) {
    IntVec v(n);
    for (auto& x : v) x = range(lo, hi);
    return v;
  }

  IntMatrix matrix(std::size_t r, std::size_t c, long lo, long hi) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = range(lo, hi);
    return m;
  }

  // Symmetric with even diagonal; may be degenerate.
  IntMatrix even_symmetric(std::size_t n, long bound) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = 2 * range(-bound, bound);
      for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = range(-bound, bound);
    }
    return g;
  }

 private:
  std::mt19937_64 rng_;
};

inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const Rational c = m[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? c : Rational(-c);
  }
  return total;
}

inline std::vector<std::vector<Rational>> to_rows(const IntMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

// x with a x = b by Cramer's rule; a square and invertible.
inline RatVector cramer_solve(const IntMatrix& a, const RatVector& b) {
  const auto rows = to_rows(a);
  const Rational d = cofactor_det(rows);
  RatVector x(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto m = rows;
    for (std::size_t i = 0; i < a.rows(); ++i) m[i][j] = b[i];
    x[j] = cofactor_det(m) / d;
  }
  return x;
}

// gcd of the pairings of v with every basis vector.
inline Integer gcd_of_pairings(const IntMatrix& g, const IntVec& v) {
  Integer d = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) s += g(i, j) * v[j];
    mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), s.get_mpz_t());
  }
  return d;
}

inline Integer form(const IntMatrix& g, const IntVec& u, const IntVec& v) {
  Integer s = 0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) s += u[i] * g(i, j) * v[j];
  return s;
}

inline bool primitive_vec(const IntVec& v) {
  Integer d = 0;
  for (const auto& x : v) mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t());
  return d == 1;
}

// U + U + U + E8(-1) + E8(-1) + A2(-1), written out entry by entry.
inline IntMatrix og10_gram_by_hand() {
  IntMatrix g(24, 24);
  for (int k = 0; k < 3; ++k) g(2 * k, 2 * k + 1) = g(2 * k + 1, 2 * k) = 1;
  const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (int block : {6, 14}) {
    for (int i = 0; i < 8; ++i) g(block + i, block + i) = -2;
    for (auto& e : edges) g(block + e[0] - 1, block + e[1] - 1) = g(block + e[1] - 1, block + e[0] - 1) = 1;
  }
  g(22, 22) = g(23, 23) = -2;
  g(22, 23) = g(23, 22) = 1;
  return g;
}

// Primitive (x, y), first nonzero coordinate positive, with q(x,y) = t.
inline std::vector<Pair> brute_norm(const IntMatrix& g, long t, long radius) {
  std::vector<Pair> out;
  for (long x = 0; x <= radius; ++x) {
    for (long y = -radius; y <= radius; ++y) {
      if (x == 0 && y <= 0) continue;
      if (std::gcd(x, y) != 1) continue;
      const Integer q = g(0, 0) * x * x + 2 * g(0, 1) * x * y + g(1, 1) * y * y;
      if (q == t) out.push_back({Integer(x), Integer(y)});
    }
  }
  return out;
}

// A primitive vector of og10 with square -2: (x, 1, u) in U + rest.
inline IntVec random_minus_two(Gen& g, const Lattice& l) {
  IntVec v(24, 0);
  for (std::size_t i = 2; i < 24; ++i) v[i] = g.range(0, 3) == 0 ? g.range(-1, 1) : 0;
  v[1] = 1;
  v[0] = 0;
  const Integer rest = l.square(v);
  v[0] = (-2 - rest) / 2;
  return v;
}

// Sparse small vector of og10.
inline IntVec random_og10_vector(Gen& g, long bound) {
  IntVec v(24, 0);
  for (auto& x : v) x = g.range(0, 2) == 0 ? g.range(-bound, bound) : 0;
  return v;
}

}  // namespace og10::test
