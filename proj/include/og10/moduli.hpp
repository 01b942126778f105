#pragma once

#include <optional>
#include <vector>

#include "og10/lattice.hpp"
#include "og10/walls.hpp"

namespace og10 {

struct MukaiVector {
  Integer r;
  IntVec c;  // coordinates in Pic(S)
  Integer s;

  IntVec coords() const;  // (r, c..., s) in mukai_algebraic(pic)
  static MukaiVector from_coords(std::span<const Integer> x);
  Integer square(const Lattice& pic) const;
};

// Pic of the symplectic resolution of M_v(S,H) for an OG10 vector v = 2w.
//
// Two bases are kept. The frame basis is (v-perp basis..., sigma) with the
// block Gram diag(mukai pairing on v-perp, -6); it is not saturated when
// v-perp has classes of divisibility 2. The picard lattice is the saturation,
// carried with its embedding into og10_lattice().
struct ModuliPicard {
  Lattice pic_s;
  MukaiVector v;
  IntMatrix vperp;            // rows in Mukai coordinates
  Lattice frame;
  IntMatrix frame_images;     // rows in og10 coordinates
  Lattice picard;
  std::vector<RatVector> picard_basis_in_frame;
  IntVec sigma;               // picard coordinates
  std::optional<RatVector> half_class;  // (alpha + sigma)/2 in frame coordinates

  std::size_t frame_rank() const { return frame.rank(); }
  std::size_t sigma_index() const { return vperp.rows(); }

  RatVector to_frame(std::span<const Rational> pic_coords) const;
  RatVector to_frame(std::span<const Integer> pic_coords) const;
  RatVector from_frame(std::span<const Rational> frame_coords) const;
  // Throws InvalidArgument when the class is not integral in Pic.
  IntVec integral_from_frame(std::span<const Rational> frame_coords) const;
  IntVec mukai_to_picard(std::span<const Integer> mukai_coords) const;
};

// v must satisfy v^2 = 8 and v = 2w with w primitive. An explicit v-perp
// basis may be supplied; it is checked to span the algebraic v-perp.
ModuliPicard moduli_picard(const Lattice& pic_s, const MukaiVector& v,
                           const std::optional<IntMatrix>& vperp_basis = std::nullopt);

// Rows of the og10 images of the picard basis.
const IntMatrix& og10_embedding_certificate(const ModuliPicard& m);

// Class with the given pairings against the frame basis.
RatVector curve_class(const ModuliPicard& m, std::span<const Integer> pairings);

struct DualWall {
  IntVec d;             // picard coordinates
  RatVector frame;      // frame coordinates
  Integer square;
  Integer divisibility; // in og10
  WallType type;
  bool is_dual;         // d / div(d) == r
};

// Primitive class on the ray of r. Throws NotProportionalToWall.
DualWall dual_wall_divisor(const ModuliPicard& m, std::span<const Rational> r);

enum class ContractionKind { Divisorial, SmallContraction, NoWallFound };
std::string_view contraction_kind_name(ContractionKind k);

struct ContractionVerdict {
  ContractionKind kind = ContractionKind::NoWallFound;
  std::optional<IntVec> witness;  // Mukai coordinates
  std::vector<IntVec> divisorial_witnesses;
  std::vector<IntVec> small_witnesses;
  bool search_complete = false;
};

// Searches |coord| <= bound in the algebraic Mukai lattice for s with
// s^2 = -2 lying on the Gieseker wall of h0: (rank, c.h0, chi) of s
// proportional to that of v. (s,v) = 0 gives Divisorial, 0 < (s,v) <= 4
// gives SmallContraction. Witnesses are ordered lexicographically with
// coordinates compared in the order 0, 1, -1, 2, -2, ...
ContractionVerdict mz_contraction_type(const Lattice& pic_s, const MukaiVector& v,
                                       std::span<const Integer> h0, long bound);

}  // namespace og10
