#include "og10/lattice.hpp"

#include <algorithm>

#include "og10/error.hpp"

namespace og10 {

Lattice Lattice::make(IntMatrix gram, std::string label) {
  if (!gram.is_square()) throw Error(ErrorCode::DimensionMismatch, "Gram matrix is not square");
  const std::size_t n = gram.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) {
        throw Error(ErrorCode::NotSymmetric, "Gram entry (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ") differs from its transpose");
      }
    }
    if (!mpz_even_p(gram(i, i).get_mpz_t())) {
      throw Error(ErrorCode::NotEven, "diagonal entry " + std::to_string(i) + " is odd");
    }
  }
  if (og10::determinant(gram) == 0) throw Error(ErrorCode::Degenerate, "Gram matrix is singular");
  Lattice l;
  l.gram_ = std::move(gram);
  l.label_ = std::move(label);
  return l;
}

Lattice Lattice::with_label(std::string label) const {
  Lattice l = *this;
  l.label_ = std::move(label);
  return l;
}

void Lattice::check_coords(std::span<const Integer> v) const {
  if (v.size() != rank()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(rank()) +
                                                  " coordinates, got " + std::to_string(v.size()));
  }
}

Integer Lattice::pair(std::span<const Integer> u, std::span<const Integer> v) const {
  check_coords(u);
  check_coords(v);
  Integer acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(u[i]) == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (sgn(v[j]) != 0 && sgn(gram_(i, j)) != 0) row += gram_(i, j) * v[j];
    }
    acc += u[i] * row;
  }
  return acc;
}

Rational Lattice::pair(std::span<const Rational> u, std::span<const Rational> v) const {
  if (u.size() != rank() || v.size() != rank()) {
    throw Error(ErrorCode::DimensionMismatch, "rational vector length differs from rank");
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (sgn(v[j]) != 0 && sgn(gram_(i, j)) != 0) acc += u[i] * gram_(i, j) * v[j];
    }
  }
  return acc;
}

Signature Lattice::signature() const {
  // Lagrange reduction: congruence transforms over Q until diagonal.
  const std::size_t n = rank();
  std::vector<RatVector> a(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram_(i, j));

  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && sgn(a[i][i]) != 0) {
        p = i;
        break;
      }
    }
    if (p == n) {
      // All remaining diagonal entries vanish; e_i += e_j makes one nonzero.
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!done[j] && j != i && sgn(a[i][j]) != 0) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi == n) break;
      for (std::size_t k = 0; k < n; ++k) a[bi][k] += a[bj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][bi] += a[k][bj];
      p = bi;
    }
    const Rational piv = a[p][p];
    if (sgn(piv) > 0) ++sig.positive; else ++sig.negative;
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a[i][p]) == 0) continue;
      const Rational f = a[i][p] / piv;
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
      for (std::size_t k = 0; k < n; ++k) a[k][i] -= f * a[k][p];
    }
  }
  return sig;
}

Integer Lattice::determinant() const { return og10::determinant(gram_); }

Integer Lattice::divisibility(std::span<const Integer> v) const {
  check_coords(v);
  if (sgn(content(v)) == 0) throw Error(ErrorCode::ZeroVector, "divisibility of the zero vector");
  // Early exit once the gcd reaches 1.
  Integer g = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (sgn(v[j]) != 0 && sgn(gram_(i, j)) != 0) row += gram_(i, j) * v[j];
    }
    if (sgn(row) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Lattice Lattice::with_u_planes(std::vector<HyperbolicPlane> planes) const {
  std::vector<bool> used(rank(), false);
  for (auto [e, f] : planes) {
    if (e >= rank() || f >= rank() || e == f || used[e] || used[f]) {
      throw Error(ErrorCode::InvalidArgument, "hyperbolic plane positions are invalid or overlap");
    }
    used[e] = used[f] = true;
    if (gram_(e, e) != 0 || gram_(f, f) != 0 || gram_(e, f) != 1) {
      throw Error(ErrorCode::InvalidArgument, "positions do not span a hyperbolic plane");
    }
    for (std::size_t k = 0; k < rank(); ++k) {
      if (k == e || k == f) continue;
      if (gram_(e, k) != 0 || gram_(f, k) != 0) {
        throw Error(ErrorCode::InvalidArgument, "hyperbolic plane is not an orthogonal summand");
      }
    }
  }
  Lattice l = *this;
  l.u_planes_ = std::move(planes);
  return l;
}

Lattice Lattice::with_og10_embedding(const IntMatrix& images) const {
  if (images.rows() != rank() || images.cols() != og10_layout::kRank) {
    throw Error(ErrorCode::DimensionMismatch, "embedding must have one og10 row per basis vector");
  }
  const Lattice L = og10_lattice();
  if (restricted_gram(L, images) != gram_) {
    throw Error(ErrorCode::InvalidArgument, "embedding does not preserve the Gram matrix");
  }
  if (!make_sublattice(L, images).saturated) {
    throw Error(ErrorCode::NotPrimitive, "embedding image is not a primitive sublattice");
  }
  Lattice l = *this;
  l.embedding_ = std::make_shared<const IntMatrix>(images);
  return l;
}

IntVec Lattice::to_og10(std::span<const Integer> v) const {
  check_coords(v);
  if (is_og10_) return IntVec(v.begin(), v.end());
  if (!embedding_) {
    throw Error(ErrorCode::NoAmbientEmbedding,
                "lattice '" + label_ + "' has no embedding into the OG10 lattice");
  }
  IntVec out(og10_layout::kRank);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * (*embedding_)(i, j);
  }
  return out;
}

Integer Lattice::ambient_divisibility(std::span<const Integer> v) const {
  if (is_og10_) return divisibility(v);
  IntVec image = to_og10(v);
  static const Lattice L = og10_lattice();
  return L.divisibility(image);
}

Sublattice make_sublattice(const Lattice& l, IntMatrix basis) {
  if (basis.rows() != 0 && basis.cols() != l.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "sublattice basis has wrong number of columns");
  }
  if (matrix_rank(basis) != basis.rows()) {
    throw Error(ErrorCode::InvalidArgument, "sublattice basis is linearly dependent");
  }
  bool saturated = true;
  if (basis.rows() > 0) {
    for (const auto& d : smith_normal_form(basis).diagonal()) {
      if (d != 1) saturated = false;
    }
  }
  return {std::move(basis), saturated};
}

IntMatrix restricted_gram(const Lattice& l, const IntMatrix& basis) {
  if (basis.rows() == 0) return IntMatrix(0, 0);
  return basis * l.gram() * basis.transpose();
}

Sublattice orthogonal_complement(const Lattice& l, const Sublattice& s) {
  if (s.rank() == 0) return {IntMatrix::identity(l.rank()), true};
  IntMatrix k = integer_kernel(s.basis * l.gram());
  if (k.rows() == 0) k = IntMatrix(0, l.rank());
  return {std::move(k), true};
}

Sublattice saturate(const Lattice& l, const Sublattice& s) {
  if (s.rank() == 0) return {IntMatrix(0, l.rank()), true};
  // Kernel of the kernel is the rational span intersected with Z^n.
  IntMatrix k = integer_kernel(s.basis);
  IntMatrix sat = k.rows() == 0 ? IntMatrix::identity(l.rank()) : integer_kernel(k);
  if (sat.rows() == 1) {
    // Keep the direction of a rank-one input.
    if (sgn(dot(sat.row(0), s.basis.row(0))) < 0) sat.negate_row(0);
  }
  return {std::move(sat), true};
}

Lattice compose(const std::vector<Summand>& parts, std::string label) {
  std::size_t n = 0;
  for (const auto& p : parts) {
    if (sgn(p.scale) == 0) throw Error(ErrorCode::InvalidArgument, "rescale factor must be nonzero");
    n += p.lattice.rank();
  }
  IntMatrix g(n, n);
  std::vector<HyperbolicPlane> planes;
  std::size_t off = 0;
  for (const auto& p : parts) {
    const auto& pg = p.lattice.gram();
    for (std::size_t i = 0; i < pg.rows(); ++i)
      for (std::size_t j = 0; j < pg.cols(); ++j) g(off + i, off + j) = pg(i, j) * p.scale;
    if (p.scale == 1) {
      for (auto [e, f] : p.lattice.u_planes()) planes.emplace_back(off + e, off + f);
    }
    off += pg.rows();
  }
  Lattice out = Lattice::make(std::move(g), std::move(label));
  return planes.empty() ? out : out.with_u_planes(std::move(planes));
}

Lattice u_lattice() {
  return Lattice::make(IntMatrix{{0, 1}, {1, 0}}, "U").with_u_planes({{0, 1}});
}

Lattice a2_negative() { return Lattice::make(IntMatrix{{-2, 1}, {1, -2}}, "A2(-1)"); }

Lattice e8_negative() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  // Bourbaki labels: 1-3, 3-4, 4-5, 5-6, 6-7, 7-8, 2-4.
  const std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (auto [a, b] : edges) {
    g(a - 1, b - 1) = 1;
    g(b - 1, a - 1) = 1;
  }
  return Lattice::make(std::move(g), "E8(-1)");
}

Lattice og10_lattice() {
  static const Lattice cached = [] {
    Lattice u = u_lattice();
    Lattice e8 = e8_negative();
    Lattice l = compose({{u}, {u}, {u}, {e8}, {e8}, {a2_negative()}}, "og10");
    l.is_og10_ = true;
    return l;
  }();
  return cached;
}

Lattice mukai_algebraic(const Lattice& pic) {
  const std::size_t p = pic.rank();
  IntMatrix g(p + 2, p + 2);
  g(0, p + 1) = -1;
  g(p + 1, 0) = -1;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) g(i + 1, j + 1) = pic.gram()(i, j);
  std::string label = pic.label().empty() ? "mukai" : "mukai(" + pic.label() + ")";
  return Lattice::make(std::move(g), std::move(label));
}

}  // namespace og10
