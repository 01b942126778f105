#pragma once

// Exact integer and rational linear algebra. Everything here is backed by
// GMP; there is no floating point anywhere in this header.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace og10 {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Integer>;

// Entries are kept in lowest terms with positive denominator; mpq_class
// arithmetic preserves that, and make_rational() canonicalizes on entry.
using RatVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Integer> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  IntVec row_vec(std::size_t i) const;
  IntVec col_vec(std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix with_row_appended(std::span<const Integer> r) const;

  // m * x for a column vector x.
  IntVec apply(std::span<const Integer> x) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);

  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// u * m * v == d, u and v unimodular, d diagonal with d1 | d2 | ... >= 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  // Diagonal of d, including trailing zeros.
  IntVec diagonal() const;
};
SmithForm smith_normal_form(const IntMatrix& m);

// t * m == h, t unimodular, h in row Hermite form: positive pivots, entries
// above a pivot reduced into [0, pivot), zero rows last.
struct HermiteForm {
  IntMatrix h;
  IntMatrix t;
  std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntMatrix& m);

// Saturated basis (as rows) of {x in Z^cols : m x = 0}, in Hermite form.
IntMatrix integer_kernel(const IntMatrix& m);

// Some exact solution of m x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& b);

// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

std::size_t matrix_rank(const IntMatrix& m);

Integer content(std::span<const Integer> v);
bool is_primitive(std::span<const Integer> v);
IntVec primitive_part(std::span<const Integer> v);
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& m);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
RatVector to_rational(std::span<const Integer> v);
bool is_integral(std::span<const Rational> v);
IntVec to_integer(std::span<const Rational> v);  // requires is_integral
// Smallest positive integer multiple of v that is integral and primitive,
// keeping the direction of v. v must be nonzero.
IntVec primitive_on_ray(std::span<const Rational> v);

// "p/q" or "p"; never a float.
std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace og10
