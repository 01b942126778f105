#include "og10/moduli.hpp"

#include <algorithm>
#include <functional>

#include "og10/error.hpp"

namespace og10 {

IntVec MukaiVector::coords() const {
  IntVec x;
  x.reserve(c.size() + 2);
  x.push_back(r);
  x.insert(x.end(), c.begin(), c.end());
  x.push_back(s);
  return x;
}

MukaiVector MukaiVector::from_coords(std::span<const Integer> x) {
  if (x.size() < 2) throw Error(ErrorCode::DimensionMismatch, "Mukai vector needs at least two coordinates");
  MukaiVector m;
  m.r = x.front();
  m.c.assign(x.begin() + 1, x.end() - 1);
  m.s = x.back();
  return m;
}

Integer MukaiVector::square(const Lattice& pic) const { return pic.square(c) - 2 * r * s; }

namespace {

// Enumerates integer vectors of length n with max-norm exactly `radius`
// (all of them for radius 0) until `visit` returns true.
bool for_each_in_shell(std::size_t n, long radius, const std::function<bool(const IntVec&)>& visit) {
  std::vector<long> digits(n, -radius);
  IntVec x(n);
  while (true) {
    long m = 0;
    for (long d : digits) m = std::max(m, d < 0 ? -d : d);
    if (m == radius) {
      for (std::size_t i = 0; i < n; ++i) x[i] = digits[i];
      if (visit(x)) return true;
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (digits[i] < radius) {
        ++digits[i];
        break;
      }
      digits[i] = -radius;
      if (i == 0) return false;
    }
    if (n == 0) return false;
  }
}

std::optional<IntVec> search_shells(std::size_t n, long max_radius,
                                    const std::function<bool(const IntVec&)>& pred) {
  std::optional<IntVec> found;
  for (long r = 1; r <= max_radius && !found; ++r) {
    for_each_in_shell(n, r, [&](const IntVec& x) {
      if (pred(x)) {
        found = x;
        return true;
      }
      return false;
    });
  }
  return found;
}

IntVec row_times(std::span<const Integer> y, const IntMatrix& m) {
  IntVec out(m.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(y[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += y[i] * m(i, j);
  }
  return out;
}

RatVector row_times(std::span<const Rational> y, const IntMatrix& m) {
  RatVector out(m.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(y[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += y[i] * m(i, j);
  }
  return out;
}

// The Mukai lattice part U_M + U^p that contains the algebraic classes.
// Pic(S) with Gram G goes to x_i = e_i + (G_ii/2) f_i + sum_{j<i} G_ij f_j.
struct MukaiModel {
  Lattice k;
  IntMatrix mukai_to_k;  // rows: images of the Mukai basis
};

MukaiModel mukai_model(const Lattice& pic) {
  const std::size_t p = pic.rank();
  std::vector<Summand> parts(p + 1, Summand{u_lattice()});
  MukaiModel m{compose(parts, "K"), IntMatrix(p + 2, 2 * (p + 1))};
  m.mukai_to_k(0, 0) = 1;           // rank part -> e0
  m.mukai_to_k(p + 1, 1) = -1;      // degree-4 part -> -f0
  for (std::size_t i = 0; i < p; ++i) {
    m.mukai_to_k(i + 1, 2 * (i + 1)) = 1;
    m.mukai_to_k(i + 1, 2 * (i + 1) + 1) = pic.gram()(i, i) / 2;
    for (std::size_t j = 0; j < i; ++j) m.mukai_to_k(i + 1, 2 * (j + 1) + 1) = pic.gram()(i, j);
  }
  return m;
}

struct Plane {
  IntVec e;
  IntVec f;
};

// Splits the unimodular lattice spanned by the rows of s (inside k) into
// hyperbolic planes.
std::vector<Plane> split_hyperbolic(const Lattice& k, IntMatrix s) {
  std::vector<Plane> planes;
  while (s.rows() > 0) {
    const IntMatrix gs = restricted_gram(k, s);
    const Lattice local = Lattice::make(gs);
    auto y = search_shells(s.rows(), 4, [&](const IntVec& c) {
      return is_primitive(c) && sgn(local.square(c)) == 0;
    });
    if (!y) throw Error(ErrorCode::EmbeddingNotFound, "no isotropic vector in the search box");
    IntMatrix g(s.rows(), 1);
    const IntVec gy = local.pairings(*y);
    for (std::size_t i = 0; i < s.rows(); ++i) g(i, 0) = gy[i];
    const HermiteForm hf = hermite_normal_form(g);
    if (hf.h(0, 0) != 1) {
      throw Error(ErrorCode::EmbeddingNotFound, "complement is not unimodular");
    }
    IntVec z = hf.t.row_vec(0);
    const Integer half = local.square(z) / 2;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= half * (*y)[i];
    Plane pl{row_times(*y, s), row_times(z, s)};
    IntMatrix m = IntMatrix::from_rows({pl.e, pl.f}, k.rank()) * k.gram() * s.transpose();
    IntMatrix ker = integer_kernel(m);
    s = ker.rows() == 0 ? IntMatrix(0, k.rank()) : ker * s;
    planes.push_back(std::move(pl));
  }
  return planes;
}

RatVector solve_in_rows(const IntMatrix& rows, std::span<const Rational> target) {
  auto x = solve_rational(rows.transpose(), RatVector(target.begin(), target.end()));
  if (!x) throw Error(ErrorCode::InvalidArgument, "vector is not in the span of the basis");
  return *x;
}

}  // namespace

RatVector ModuliPicard::to_frame(std::span<const Rational> pic_coords) const {
  if (pic_coords.size() != picard.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "picard vector length differs from rank");
  }
  RatVector out(frame.rank());
  for (std::size_t i = 0; i < pic_coords.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += pic_coords[i] * picard_basis_in_frame[i][j];
  }
  return out;
}

RatVector ModuliPicard::to_frame(std::span<const Integer> pic_coords) const {
  return to_frame(to_rational(pic_coords));
}

RatVector ModuliPicard::from_frame(std::span<const Rational> frame_coords) const {
  if (frame_coords.size() != frame.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "frame vector length differs from rank");
  }
  const RatVector image = row_times(frame_coords, frame_images);
  return solve_in_rows(*picard.og10_embedding(), image);
}

IntVec ModuliPicard::integral_from_frame(std::span<const Rational> frame_coords) const {
  RatVector p = from_frame(frame_coords);
  if (!is_integral(p)) throw Error(ErrorCode::InvalidArgument, "class is not integral in Pic");
  return to_integer(p);
}

IntVec ModuliPicard::mukai_to_picard(std::span<const Integer> mukai_coords) const {
  RatVector y = solve_in_rows(vperp, to_rational(mukai_coords));
  y.push_back(0);
  return integral_from_frame(y);
}

ModuliPicard moduli_picard(const Lattice& pic_s, const MukaiVector& v,
                           const std::optional<IntMatrix>& vperp_basis) {
  if (v.c.size() != pic_s.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "Mukai vector does not match Pic(S)");
  }
  if (pic_s.rank() > 3) {
    throw Error(ErrorCode::EmbeddingNotFound, "Pic(S) of rank above 3 is not supported");
  }
  const Lattice mukai = mukai_algebraic(pic_s);
  const IntVec vc = v.coords();
  if (mukai.square(vc) != 8) {
    throw Error(ErrorCode::NotOG10Vector, "v^2 = " + mukai.square(vc).get_str() + ", expected 8");
  }
  if (content(vc) != 2) {
    throw Error(ErrorCode::NotOG10Vector, "v is not twice a primitive class");
  }
  IntVec w = vc;
  for (auto& x : w) x /= 2;

  ModuliPicard m;
  m.pic_s = pic_s;
  m.v = v;
  const IntMatrix complement =
      orthogonal_complement(mukai, make_sublattice(mukai, IntMatrix::from_rows({vc}, mukai.rank()))).basis;
  if (vperp_basis) {
    if (vperp_basis->rows() != complement.rows() || vperp_basis->cols() != mukai.rank() ||
        hermite_normal_form(*vperp_basis).h != hermite_normal_form(complement).h) {
      throw Error(ErrorCode::InvalidArgument, "supplied basis does not span the algebraic v-perp");
    }
    m.vperp = *vperp_basis;
  } else {
    m.vperp = complement;
  }

  const std::size_t k = m.vperp.rows();
  IntMatrix fg(k + 1, k + 1);
  const IntMatrix vg = restricted_gram(mukai, m.vperp);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) fg(i, j) = vg(i, j);
  fg(k, k) = -6;
  m.frame = Lattice::make(std::move(fg), "frame");

  // Half classes: alpha in v-perp with alpha = w mod 2.
  for (unsigned long mask = 1; mask < (1ul << k) && !m.half_class; ++mask) {
    IntVec alpha(mukai.rank());
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1ul << i)) {
        for (std::size_t j = 0; j < alpha.size(); ++j) alpha[j] += m.vperp(i, j);
      }
    }
    bool congruent = true;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (!mpz_even_p(Integer(alpha[j] - w[j]).get_mpz_t())) congruent = false;
    }
    if (!congruent) continue;
    RatVector h(k + 1);
    for (std::size_t i = 0; i < k; ++i) h[i] = (mask & (1ul << i)) ? Rational(1, 2) : Rational(0);
    h[k] = Rational(1, 2);
    m.half_class = h;
  }

  // Split K = <e,f> + U^p with w = e + f, then send e - f and sigma into A2(-1).
  const MukaiModel model = mukai_model(pic_s);
  const Lattice& K = model.k;
  const IntVec wk = row_times(w, model.mukai_to_k);
  auto e = search_shells(K.rank(), 4, [&](const IntVec& x) {
    return sgn(K.square(x)) == 0 && K.pair(x, wk) == 1;
  });
  if (!e) throw Error(ErrorCode::EmbeddingNotFound, "no isotropic e with (e,w) = 1 in the search box");
  IntVec f = wk;
  for (std::size_t i = 0; i < f.size(); ++i) f[i] -= (*e)[i];
  IntMatrix rest = integer_kernel(IntMatrix::from_rows({*e, f}, K.rank()) * K.gram());
  const std::vector<Plane> planes = split_hyperbolic(K, rest);
  if (planes.size() > 3) throw Error(ErrorCode::EmbeddingNotFound, "too many hyperbolic planes");

  auto image = [&](const IntVec& mukai_vec) {
    const IntVec x = row_times(mukai_vec, model.mukai_to_k);
    IntVec out(og10_layout::kRank);
    const Integer a = K.pair(x, f);
    out[og10_layout::kA2] = a;
    out[og10_layout::kA2 + 1] = a;
    for (std::size_t p = 0; p < planes.size(); ++p) {
      out[2 * p] = K.pair(x, planes[p].f);
      out[2 * p + 1] = K.pair(x, planes[p].e);
    }
    return out;
  };
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(image(m.vperp.row_vec(i)));
  IntVec sigma_img(og10_layout::kRank);
  sigma_img[og10_layout::kA2] = 1;
  sigma_img[og10_layout::kA2 + 1] = -1;
  rows.push_back(sigma_img);
  m.frame_images = IntMatrix::from_rows(rows, og10_layout::kRank);

  const Lattice L = og10_lattice();
  if (restricted_gram(L, m.frame_images) != m.frame.gram()) {
    throw Error(ErrorCode::EmbeddingNotFound, "constructed map does not preserve the pairing");
  }

  // Pic is the saturation; its basis is read off in frame coordinates.
  const IntMatrix sat = saturate(L, make_sublattice(L, m.frame_images)).basis;
  std::vector<RatVector> in_frame;
  Integer denom = 1;
  for (std::size_t i = 0; i < sat.rows(); ++i) {
    in_frame.push_back(solve_in_rows(m.frame_images, to_rational(sat.row(i))));
    for (const auto& q : in_frame.back()) {
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den().get_mpz_t());
    }
  }
  std::vector<IntVec> scaled;
  for (std::size_t i = 0; i < k + 1; ++i) {
    IntVec gen(k + 1);
    gen[i] = denom;
    scaled.push_back(gen);
  }
  for (const auto& r : in_frame) {
    IntVec gen;
    for (const auto& q : r) gen.push_back(Rational(q * denom).get_num());
    scaled.push_back(gen);
  }
  const HermiteForm hf = hermite_normal_form(IntMatrix::from_rows(scaled, k + 1));
  std::vector<IntVec> pic_images;
  for (std::size_t i = 0; i < hf.rank; ++i) {
    RatVector r;
    for (std::size_t j = 0; j < k + 1; ++j) r.push_back(make_rational(hf.h(i, j), denom));
    RatVector img = row_times(r, m.frame_images);
    pic_images.push_back(to_integer(img));
    m.picard_basis_in_frame.push_back(std::move(r));
  }
  const IntMatrix pic_img = IntMatrix::from_rows(pic_images, og10_layout::kRank);
  m.picard = Lattice::make(restricted_gram(L, pic_img), "Pic(M~)").with_og10_embedding(pic_img);

  const Integer index_sq = abs(m.frame.determinant()) / abs(m.picard.determinant());
  if (index_sq != (m.half_class ? 4 : 1)) {
    throw Error(ErrorCode::Inconsistent, "saturation index disagrees with the half-class rule");
  }
  if (m.half_class) m.integral_from_frame(*m.half_class);
  RatVector sig(k + 1);
  sig[k] = 1;
  m.sigma = m.integral_from_frame(sig);
  return m;
}

const IntMatrix& og10_embedding_certificate(const ModuliPicard& m) {
  return *m.picard.og10_embedding();
}

RatVector curve_class(const ModuliPicard& m, std::span<const Integer> pairings) {
  if (pairings.size() != m.frame.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "need one pairing per frame basis class");
  }
  auto x = solve_rational(m.frame.gram(), to_rational(pairings));
  if (!x) throw Error(ErrorCode::Inconsistent, "no class has the requested pairings");
  return *x;
}

DualWall dual_wall_divisor(const ModuliPicard& m, std::span<const Rational> r) {
  const RatVector pic = m.from_frame(r);
  DualWall out;
  out.d = primitive_on_ray(pic);
  out.frame = m.to_frame(out.d);
  out.square = m.picard.square(out.d);
  if (sgn(out.square) >= 0) {
    throw Error(ErrorCode::NotProportionalToWall, "class on the ray has square " + out.square.get_str());
  }
  out.divisibility = m.picard.ambient_divisibility(out.d);
  auto t = wall_type_of(out.square, out.divisibility);
  if (!t) {
    throw Error(ErrorCode::NotProportionalToWall,
                "(" + out.square.get_str() + ", " + out.divisibility.get_str() + ") is not a wall type");
  }
  out.type = *t;
  out.is_dual = true;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (out.frame[i] / out.divisibility != r[i]) out.is_dual = false;
  }
  return out;
}

std::string_view contraction_kind_name(ContractionKind k) {
  switch (k) {
    case ContractionKind::Divisorial: return "Divisorial";
    case ContractionKind::SmallContraction: return "SmallContraction";
    case ContractionKind::NoWallFound: return "NoWallFound";
  }
  return "NoWallFound";
}

namespace {

// Linear forms (rank, c.h0, chi) on the algebraic Mukai lattice, as rows.
IntMatrix gieseker_forms(const Lattice& pic, std::span<const Integer> h0) {
  const std::size_t n = pic.rank() + 2;
  IntMatrix f(3, n);
  f(0, 0) = 1;
  const IntVec gh = pic.pairings(h0);
  for (std::size_t i = 0; i < pic.rank(); ++i) f(1, i + 1) = gh[i];
  f(2, 0) = 1;
  f(2, n - 1) = 1;
  return f;
}

// sqrt(a) <= b for rationals, b possibly negative.
bool sqrt_le(const Rational& a, const Rational& b) { return sgn(b) >= 0 && a <= b * b; }

}  // namespace

ContractionVerdict mz_contraction_type(const Lattice& pic_s, const MukaiVector& v,
                                       std::span<const Integer> h0, long bound) {
  if (bound <= 0) throw Error(ErrorCode::InvalidArgument, "bound must be positive");
  pic_s.check_coords(h0);
  if (sgn(pic_s.square(h0)) <= 0) throw Error(ErrorCode::InvalidArgument, "h0 must have positive square");
  if (v.c.size() != pic_s.rank()) throw Error(ErrorCode::DimensionMismatch, "Mukai vector does not match Pic(S)");

  const Lattice mukai = mukai_algebraic(pic_s);
  const std::size_t n = mukai.rank();
  const IntVec vc = v.coords();
  const IntMatrix forms = gieseker_forms(pic_s, h0);
  const IntVec pv = forms.apply(vc);

  // s lies on the wall iff forms(s) is proportional to forms(v).
  std::vector<IntVec> cross;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      IntVec row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = pv[i] * forms(j, c) - pv[j] * forms(i, c);
      if (sgn(content(row)) != 0) cross.push_back(row);
    }
  }
  const IntMatrix constraint = IntMatrix::from_rows(cross, n);
  const IntVec gv = mukai.pairings(vc);

  ContractionVerdict out;
  std::optional<IntVec> first_div, first_small;
  std::vector<long> seq{0};
  for (long b = 1; b <= bound; ++b) {
    seq.push_back(b);
    seq.push_back(-b);
  }
  std::vector<std::size_t> idx(n, 0);
  IntVec s(n);
  constexpr std::size_t kMaxRecorded = 256;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) s[i] = seq[idx[i]];
    if (mukai.square(s) == -2) {
      bool on_wall = true;
      for (std::size_t r = 0; r < constraint.rows() && on_wall; ++r) {
        if (sgn(dot(constraint.row(r), s)) != 0) on_wall = false;
      }
      if (on_wall) {
        const Integer sv = dot(gv, s);
        if (sgn(sv) == 0) {
          if (!first_div) first_div = s;
          if (out.divisorial_witnesses.size() < kMaxRecorded) out.divisorial_witnesses.push_back(s);
        } else if (sgn(sv) > 0 && sv <= 4) {
          if (!first_small) first_small = s;
          if (out.small_witnesses.size() < kMaxRecorded) out.small_witnesses.push_back(s);
        }
      }
    }
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (idx[i] + 1 < seq.size()) {
        ++idx[i];
        done = false;
        break;
      }
      idx[i] = 0;
    }
    if (done) break;
  }
  if (first_div) {
    out.kind = ContractionKind::Divisorial;
    out.witness = first_div;
  } else if (first_small) {
    out.kind = ContractionKind::SmallContraction;
    out.witness = first_small;
  }

  // Completeness: write s = (k/q(v)) v + u with u in the wall lattice
  // orthogonal to v. If that lattice is negative definite, -q(u) =
  // 2 + k^2/q(v) bounds every coordinate of s.
  const Integer qv = mukai.square(vc);
  if (sgn(qv) > 0) {
    IntMatrix sys = constraint.with_row_appended(gv);
    IntMatrix basis = integer_kernel(sys);
    if (basis.rows() == 0) {
      out.search_complete = true;
    } else {
      const IntMatrix gn = restricted_gram(mukai, basis);
      if (determinant(gn) != 0 && Lattice::make(gn).signature().positive == 0) {
        IntMatrix neg = gn;
        for (std::size_t a = 0; a < neg.rows(); ++a)
          for (std::size_t b = 0; b < neg.cols(); ++b) neg(a, b) = -neg(a, b);
        bool complete = true;
        for (std::size_t c = 0; c < n && complete; ++c) {
          RatVector ell = to_rational(basis.col_vec(c));
          auto sol = solve_rational(neg, ell);
          Rational ci = 0;
          for (std::size_t a = 0; a < ell.size(); ++a) ci += ell[a] * (*sol)[a];
          for (long kk = 0; kk <= 4 && complete; ++kk) {
            const Rational mk = Rational(2) + Rational(kk * kk) / qv;
            const Rational shift = abs(Rational(kk) * vc[c] / qv);
            if (!sqrt_le(mk * ci, Rational(bound) - shift)) complete = false;
          }
        }
        out.search_complete = complete;
      }
    }
  }
  return out;
}

}  // namespace og10
