#include "og10/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "og10/error.hpp"

namespace og10 {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    }
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& x) { return sgn(x) == 0; });
}

IntVec IntMatrix::row_vec(std::size_t i) const {
  auto r = row(i);
  return IntVec(r.begin(), r.end());
}

IntVec IntMatrix::col_vec(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::with_row_appended(std::span<const Integer> r) const {
  if (rows_ != 0 && r.size() != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "appended row has wrong length");
  }
  IntMatrix m(rows_ + 1, r.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t j = 0; j < r.size(); ++j) m(rows_, j) = r[j];
  return m;
}

IntVec IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  IntVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(x[j]) != 0) acc += (*this)(i, j) * x[j];
    }
    y[i] = std::move(acc);
  }
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn((*this)(src, j)) != 0) (*this)(dst, j) += k * (*this)(src, j);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (sgn((*this)(i, src)) != 0) (*this)(i, dst) += k * (*this)(i, src);
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

IntVec SmithForm::diagonal() const {
  std::size_t k = std::min(d.rows(), d.cols());
  IntVec out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = d(i, i);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    bool finished = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = r, pj = c;
      Integer best;
      for (std::size_t i = t; i < r; ++i) {
        for (std::size_t j = t; j < c; ++j) {
          if (sgn(a(i, j)) == 0) continue;
          if (pi == r || mpz_cmpabs(a(i, j).get_mpz_t(), best.get_mpz_t()) < 0) {
            best = abs(a(i, j));
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == r) {
        finished = true;
        break;
      }
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      const Integer pivot = a(t, t);
      for (std::size_t i = t + 1; i < r; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Integer q = floor_div(a(i, t), pivot);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Integer q = floor_div(a(t, j), pivot);
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i) {
        for (std::size_t j = t + 1; j < c; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (finished) break;
    if (sgn(a(t, t)) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix a = m;
  IntMatrix t = IntMatrix::identity(r);
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = r;
      for (std::size_t i = row; i < r; ++i) {
        if (sgn(a(i, col)) == 0) continue;
        if (best == r || mpz_cmpabs(a(i, col).get_mpz_t(), a(best, col).get_mpz_t()) < 0) best = i;
      }
      if (best == r) break;
      have_pivot = true;
      a.swap_rows(row, best);
      t.swap_rows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < r; ++i) {
        if (sgn(a(i, col)) == 0) continue;
        Integer q = floor_div(a(i, col), a(row, col));
        a.add_row_multiple(i, row, -q);
        t.add_row_multiple(i, row, -q);
        if (sgn(a(i, col)) != 0) done = false;
      }
      if (done) break;
    }
    if (!have_pivot) continue;
    if (sgn(a(row, col)) < 0) {
      a.negate_row(row);
      t.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = floor_div(a(i, col), a(row, col));
      a.add_row_multiple(i, row, -q);
      t.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  return {std::move(a), std::move(t), row};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Rows of the transform that kill m^T span the kernel; the transform is
  // unimodular, so that span is already saturated.
  const std::size_t n = m.cols();
  HermiteForm hf = hermite_normal_form(m.transpose());
  std::vector<IntVec> rows;
  for (std::size_t i = hf.rank; i < n; ++i) rows.push_back(hf.t.row_vec(i));
  IntMatrix basis = IntMatrix::from_rows(rows, n);
  if (basis.rows() == 0) return basis;
  IntMatrix h = hermite_normal_form(basis).h;
  return h;
}

std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& b) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  if (b.size() != r) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  std::vector<RatVector> aug(r, RatVector(c + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug[i][j] = Rational(m(i, j));
    aug[i][c] = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t p = r;
    for (std::size_t i = row; i < r; ++i) {
      if (sgn(aug[i][col]) != 0) {
        p = i;
        break;
      }
    }
    if (p == r) continue;
    std::swap(aug[row], aug[p]);
    const Rational inv = 1 / aug[row][col];
    for (std::size_t j = col; j <= c; ++j) aug[row][j] *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || sgn(aug[i][col]) == 0) continue;
      const Rational f = aug[i][col];
      for (std::size_t j = col; j <= c; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < r; ++i) {
    if (sgn(aug[i][c]) != 0) return std::nullopt;
  }
  RatVector x(c);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug[i][c];
  return x;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t matrix_rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool is_primitive(std::span<const Integer> v) { return content(v) == 1; }

IntVec primitive_part(std::span<const Integer> v) {
  Integer g = content(v);
  IntVec out(v.begin(), v.end());
  if (sgn(g) == 0) return out;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product size mismatch");
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVector to_rational(std::span<const Integer> v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_integral(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

IntVec to_integer(std::span<const Rational> v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "vector is not integral");
    out.push_back(q.get_num());
  }
  return out;
}

IntVec primitive_on_ray(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  IntVec scaled;
  scaled.reserve(v.size());
  for (const auto& q : v) {
    Rational s = q * l;
    scaled.push_back(s.get_num());
  }
  if (sgn(content(scaled)) == 0) throw Error(ErrorCode::ZeroVector, "zero vector has no ray");
  return primitive_part(scaled);
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidArgument, "not a rational number: '" + text + "'");
  }
}

}  // namespace og10
