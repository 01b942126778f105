#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "og10/linalg.hpp"

namespace og10 {

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  bool operator==(const Signature&) const = default;
};

// A pair of basis positions (i, j) spanning a hyperbolic plane that is
// orthogonal to every other basis vector.
using HyperbolicPlane = std::pair<std::size_t, std::size_t>;

class Lattice {
 public:
  // Rank zero.
  Lattice() = default;
  // Validates symmetry, evenness and nondegeneracy.
  static Lattice make(IntMatrix gram, std::string label = {});

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::string& label() const noexcept { return label_; }
  Lattice with_label(std::string label) const;

  Integer pair(std::span<const Integer> u, std::span<const Integer> v) const;
  Integer square(std::span<const Integer> v) const { return pair(v, v); }
  Rational pair(std::span<const Rational> u, std::span<const Rational> v) const;
  Rational square(std::span<const Rational> v) const { return pair(v, v); }
  // gram * v
  IntVec pairings(std::span<const Integer> v) const { return gram_.apply(v); }

  Signature signature() const;
  Integer determinant() const;

  // gcd of the pairings of v with the basis. Throws ZeroVector.
  Integer divisibility(std::span<const Integer> v) const;

  // U-split certificate. Planes are checked when attached.
  const std::vector<HyperbolicPlane>& u_planes() const noexcept { return u_planes_; }
  Lattice with_u_planes(std::vector<HyperbolicPlane> planes) const;

  // The OG10 lattice itself, or a lattice carrying a checked primitive
  // isometric embedding into it (rows are images of the basis).
  bool is_og10() const noexcept { return is_og10_; }
  bool has_og10_embedding() const noexcept { return is_og10_ || embedding_ != nullptr; }
  const IntMatrix* og10_embedding() const noexcept { return embedding_.get(); }
  Lattice with_og10_embedding(const IntMatrix& images) const;

  // Image of v in og10 coordinates. Throws NoAmbientEmbedding.
  IntVec to_og10(std::span<const Integer> v) const;
  // Divisibility of v measured in the OG10 lattice.
  Integer ambient_divisibility(std::span<const Integer> v) const;

  void check_coords(std::span<const Integer> v) const;

 private:
  friend Lattice og10_lattice();

  IntMatrix gram_;
  std::string label_;
  std::vector<HyperbolicPlane> u_planes_;
  bool is_og10_ = false;
  std::shared_ptr<const IntMatrix> embedding_;
};

// Rows of `basis` are coordinates in the ambient lattice.
struct Sublattice {
  IntMatrix basis;
  bool saturated = false;

  std::size_t rank() const noexcept { return basis.rows(); }
};

// Checks independence and records the saturation flag.
Sublattice make_sublattice(const Lattice& l, IntMatrix basis);

// basis * gram * basis^T
IntMatrix restricted_gram(const Lattice& l, const IntMatrix& basis);

Sublattice orthogonal_complement(const Lattice& l, const Sublattice& s);
Sublattice saturate(const Lattice& l, const Sublattice& s);

struct Summand {
  Lattice lattice;
  Integer scale = 1;
};
Lattice compose(const std::vector<Summand>& parts, std::string label = {});

Lattice u_lattice();
Lattice a2_negative();
Lattice e8_negative();
// U^3 + E8(-1)^2 + A2(-1) in that basis order.
Lattice og10_lattice();

// Z + Pic + Z with ((r,c,s),(r',c',s')) = c.c' - r s' - r' s.
Lattice mukai_algebraic(const Lattice& pic);

// Offsets of the summands of og10_lattice().
namespace og10_layout {
inline constexpr std::size_t kU1 = 0;
inline constexpr std::size_t kU2 = 2;
inline constexpr std::size_t kU3 = 4;
inline constexpr std::size_t kE8a = 6;
inline constexpr std::size_t kE8b = 14;
inline constexpr std::size_t kA2 = 22;
inline constexpr std::size_t kRank = 24;
}  // namespace og10_layout

}  // namespace og10
