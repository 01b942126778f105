#include "og10/discriminant.hpp"

#include "og10/error.hpp"

namespace og10 {

Integer DiscriminantGroup::order() const {
  Integer n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

bool DiscElement::is_zero() const {
  for (const auto& c : components) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

Rational mod2(const Rational& q) {
  Integer k = floor_div(q.get_num(), 2 * q.get_den());
  Rational r = q - Rational(2 * k);
  return r;
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  const SmithForm snf = smith_normal_form(l.gram());
  const std::size_t n = l.rank();
  DiscriminantGroup g;
  std::vector<IntVec> map_rows;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = snf.d(i, i);
    if (d == 1) continue;
    g.invariant_factors.push_back(d);
    RatVector lift(n);
    for (std::size_t k = 0; k < n; ++k) lift[k] = make_rational(snf.v(k, i), d);
    g.generator_values.push_back(mod2(l.square(lift)));
    g.generator_lifts.push_back(std::move(lift));
    map_rows.push_back(snf.u.row_vec(i));
  }
  g.component_map = IntMatrix::from_rows(map_rows, n);
  return g;
}

DiscElement disc_element(const DiscriminantGroup& g, const Lattice& l, std::span<const Rational> x) {
  if (x.size() != l.rank()) throw Error(ErrorCode::DimensionMismatch, "dual vector length differs from rank");
  RatVector gx(l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) {
    for (std::size_t j = 0; j < l.rank(); ++j) gx[i] += l.gram()(i, j) * x[j];
  }
  if (!is_integral(gx)) throw Error(ErrorCode::InvalidArgument, "vector is not in the dual lattice");
  IntVec y = to_integer(gx);
  DiscElement e;
  for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
    e.components.push_back(mod_floor(dot(g.component_map.row(i), y), g.invariant_factors[i]));
  }
  return e;
}

Rational disc_form_value(const DiscriminantGroup& g, const Lattice& l, const DiscElement& e) {
  RatVector x(l.rank());
  for (std::size_t i = 0; i < e.components.size(); ++i) {
    for (std::size_t k = 0; k < l.rank(); ++k) x[k] += e.components[i] * g.generator_lifts[i][k];
  }
  return mod2(l.square(x));
}

DiscElement residue(const DiscriminantGroup& g, const Lattice& l, std::span<const Integer> v) {
  const Integer d = l.divisibility(v);
  RatVector x;
  for (const auto& c : v) x.push_back(make_rational(c, d));
  return disc_element(g, l, x);
}

DiscElement residue(const Lattice& l, std::span<const Integer> v) {
  return residue(discriminant_group(l), l, v);
}

namespace {

void require_u2(const Lattice& l, std::size_t needed) {
  if (l.u_planes().size() < needed) {
    throw Error(ErrorCode::NoU2Witness, "lattice '" + l.label() + "' carries " +
                                            std::to_string(l.u_planes().size()) +
                                            " certified hyperbolic planes, need " +
                                            std::to_string(needed));
  }
}

void require_primitive(std::span<const Integer> v) {
  Integer c = content(v);
  if (sgn(c) == 0) throw Error(ErrorCode::ZeroVector, "zero vector");
  if (c != 1) throw Error(ErrorCode::NotPrimitive, "vector has content " + c.get_str());
}

}  // namespace

bool eichler_equivalent(const Lattice& l, std::span<const Integer> v, std::span<const Integer> w) {
  require_u2(l, 2);
  l.check_coords(v);
  l.check_coords(w);
  require_primitive(v);
  require_primitive(w);
  if (l.square(v) != l.square(w)) return false;
  const DiscriminantGroup g = discriminant_group(l);
  return residue(g, l, v) == residue(g, l, w);
}

bool eichler_sublattice_equivalent(const Lattice& l, const Sublattice& s, const Sublattice& t) {
  const std::size_t n = l.u_planes().size();
  require_u2(l, 2);
  if (s.rank() != t.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "sublattices have different ranks");
  }
  if (s.rank() + 1 > n) {
    throw Error(ErrorCode::RankTooLarge, "rank " + std::to_string(s.rank()) +
                                             " needs at least " + std::to_string(s.rank() + 1) +
                                             " hyperbolic planes, lattice has " + std::to_string(n));
  }
  if (restricted_gram(l, s.basis) != restricted_gram(l, t.basis)) return false;
  const DiscriminantGroup g = discriminant_group(l);
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (residue(g, l, s.basis.row(i)) != residue(g, l, t.basis.row(i))) return false;
  }
  return true;
}

bool div3_square_residue_check(const Lattice& l, std::span<const Integer> v) {
  require_primitive(v);
  const DiscriminantGroup g = discriminant_group(l);
  if (g.invariant_factors.size() != 1 || g.invariant_factors[0] != 3) {
    throw Error(ErrorCode::NotApplicable, "discriminant group is not Z/3");
  }
  const Integer d = l.divisibility(v);
  if (d == 1) return true;
  return mod_floor(l.square(v), 18) == 12;
}

}  // namespace og10
