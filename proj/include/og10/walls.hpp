#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "og10/lattice.hpp"

namespace og10 {

enum class WallType { NegTwoDivOne, NegFourDivOne, NegSixDivThree, NegTwentyFourDivThree };
enum class PexType { NegTwoDivOne, NegSixDivThree };

struct WallTypeInfo {
  WallType type;
  long square;
  long divisibility;
  // Codimension of the locus in moduli where the wall is realized. Recorded
  // only; nothing here checks it.
  int codimension;
  std::string_view name;
};

const std::vector<WallTypeInfo>& wall_type_table();
const WallTypeInfo& wall_type_info(WallType t);
std::string_view pex_type_name(PexType t);
long pex_square(PexType t);
long pex_divisibility(PexType t);

std::optional<WallType> wall_type_of(const Integer& square, const Integer& divisibility);
std::optional<PexType> pex_type_of(const Integer& square, const Integer& divisibility);

// v primitive with negative square; divisibility measured in the OG10
// lattice. Throws NotPrimitive, NonNegativeSquare, NoAmbientEmbedding.
std::optional<WallType> wall_type(const Lattice& l, std::span<const Integer> v);
std::optional<PexType> stably_prime_exceptional(const Lattice& l, std::span<const Integer> v);

struct NotIntegral {
  Rational entry;
  std::size_t row = 0;
  std::size_t col = 0;
};

// Matrix of F -> F - 2 (D,F)/q(D) D acting on column coordinates.
std::variant<IntMatrix, NotIntegral> reflection(const Lattice& l, std::span<const Integer> d);

struct HalfSplit {
  IntVec e;
  Integer square;
  Integer pairing_with_sigma;
};

// E = (d - sigma)/2. Throws NotHalfIntegral, InvalidArgument when d is not
// orthogonal to sigma.
HalfSplit half_integral_split(const Lattice& pic, std::span<const Integer> d,
                              std::span<const Integer> sigma);

struct ProjectionClass {
  RatVector projection;      // d - (d,sigma)/q(sigma) sigma
  IntVec primitive;          // primitive integral class on its ray
  Integer square;
  Integer divisibility;      // inside the sigma-orthogonal part of OG10
  bool admissible = false;
};

// Admissible (square, divisibility) pairs of the projection.
const std::vector<std::pair<long, long>>& admissible_projection_table();

ProjectionClass sigma_projection_class(const Lattice& pic, std::span<const Integer> d,
                                       std::span<const Integer> sigma);

}  // namespace og10
