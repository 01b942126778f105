#include "og10/walls.hpp"

#include "og10/error.hpp"

namespace og10 {

const std::vector<WallTypeInfo>& wall_type_table() {
  static const std::vector<WallTypeInfo> table = {
      {WallType::NegTwoDivOne, -2, 1, 1, "NegTwoDivOne"},
      {WallType::NegFourDivOne, -4, 1, 1, "NegFourDivOne"},
      {WallType::NegSixDivThree, -6, 3, 5, "NegSixDivThree"},
      {WallType::NegTwentyFourDivThree, -24, 3, 3, "NegTwentyFourDivThree"},
  };
  return table;
}

const WallTypeInfo& wall_type_info(WallType t) {
  return wall_type_table()[static_cast<std::size_t>(t)];
}

std::string_view pex_type_name(PexType t) {
  return t == PexType::NegTwoDivOne ? "NegTwoDivOne" : "NegSixDivThree";
}

long pex_square(PexType t) { return t == PexType::NegTwoDivOne ? -2 : -6; }
long pex_divisibility(PexType t) { return t == PexType::NegTwoDivOne ? 1 : 3; }

std::optional<WallType> wall_type_of(const Integer& square, const Integer& divisibility) {
  for (const auto& row : wall_type_table()) {
    if (square == row.square && divisibility == row.divisibility) return row.type;
  }
  return std::nullopt;
}

std::optional<PexType> pex_type_of(const Integer& square, const Integer& divisibility) {
  if (square == -2 && divisibility == 1) return PexType::NegTwoDivOne;
  if (square == -6 && divisibility == 3) return PexType::NegSixDivThree;
  return std::nullopt;
}

namespace {

std::pair<Integer, Integer> classify_input(const Lattice& l, std::span<const Integer> v) {
  l.check_coords(v);
  Integer c = content(v);
  if (sgn(c) == 0) throw Error(ErrorCode::ZeroVector, "zero vector");
  if (c != 1) throw Error(ErrorCode::NotPrimitive, "class has content " + c.get_str());
  Integer q = l.square(v);
  if (sgn(q) >= 0) throw Error(ErrorCode::NonNegativeSquare, "class has square " + q.get_str());
  return {q, l.ambient_divisibility(v)};
}

}  // namespace

std::optional<WallType> wall_type(const Lattice& l, std::span<const Integer> v) {
  auto [q, d] = classify_input(l, v);
  return wall_type_of(q, d);
}

std::optional<PexType> stably_prime_exceptional(const Lattice& l, std::span<const Integer> v) {
  auto [q, d] = classify_input(l, v);
  return pex_type_of(q, d);
}

std::variant<IntMatrix, NotIntegral> reflection(const Lattice& l, std::span<const Integer> d) {
  l.check_coords(d);
  const Integer q = l.square(d);
  if (sgn(q) == 0) throw Error(ErrorCode::InvalidArgument, "reflection in an isotropic class");
  const IntVec gd = l.pairings(d);
  const std::size_t n = l.rank();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // column j is the image of basis vector j
      Rational entry = make_rational(-2 * gd[j] * d[i], q);
      if (entry.get_den() != 1) return NotIntegral{entry, i, j};
      m(i, j) += entry.get_num();
    }
  }
  return m;
}

HalfSplit half_integral_split(const Lattice& pic, std::span<const Integer> d,
                              std::span<const Integer> sigma) {
  pic.check_coords(d);
  pic.check_coords(sigma);
  if (sgn(pic.pair(d, sigma)) != 0) {
    throw Error(ErrorCode::InvalidArgument, "class is not orthogonal to sigma");
  }
  HalfSplit out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer diff = d[i] - sigma[i];
    if (!mpz_even_p(diff.get_mpz_t())) {
      throw Error(ErrorCode::NotHalfIntegral, "(d - sigma)/2 is not a lattice class");
    }
    out.e.push_back(diff / 2);
  }
  out.square = pic.square(out.e);
  out.pairing_with_sigma = pic.pair(out.e, sigma);
  return out;
}

const std::vector<std::pair<long, long>>& admissible_projection_table() {
  static const std::vector<std::pair<long, long>> table = {{-2, 1}, {-2, 2}, {-4, 1}, {-10, 2}};
  return table;
}

ProjectionClass sigma_projection_class(const Lattice& pic, std::span<const Integer> d,
                                       std::span<const Integer> sigma) {
  pic.check_coords(d);
  pic.check_coords(sigma);
  const Integer qs = pic.square(sigma);
  if (qs != -6) throw Error(ErrorCode::InvalidArgument, "sigma must have square -6");
  const Rational t = make_rational(pic.pair(d, sigma), qs);
  ProjectionClass out;
  for (std::size_t i = 0; i < d.size(); ++i) out.projection.push_back(Rational(d[i]) - t * sigma[i]);
  out.primitive = primitive_on_ray(out.projection);
  out.square = pic.square(out.primitive);

  // Divisibility inside sigma-perp, taken in the OG10 lattice.
  const Lattice L = og10_lattice();
  const IntVec s_img = pic.to_og10(sigma);
  const IntVec p_img = pic.to_og10(out.primitive);
  const IntMatrix perp = orthogonal_complement(L, make_sublattice(L, IntMatrix::from_rows({s_img}, L.rank()))).basis;
  out.divisibility = content(perp.apply(L.pairings(p_img)));

  for (auto [sq, dv] : admissible_projection_table()) {
    if (out.square == sq && out.divisibility == dv) out.admissible = true;
  }
  return out;
}

}  // namespace og10
