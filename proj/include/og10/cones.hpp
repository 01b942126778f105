#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "og10/lattice.hpp"
#include "og10/walls.hpp"

namespace og10 {

// a + b sqrt(d). All surds compared together share the same d.
struct Surd {
  Rational a;
  Rational b;
  Integer d;

  static Surd rational(const Rational& q) { return {q, 0, 0}; }
  bool is_rational() const { return sgn(b) == 0; }
  int sign() const;

  Surd operator+(const Surd& o) const;
  Surd operator-(const Surd& o) const;
  Surd operator*(const Surd& o) const;
  Surd operator*(const Rational& q) const;
};

using Pair = std::array<Integer, 2>;

struct NormSolutions {
  std::vector<Pair> solutions;  // primitive, first nonzero coordinate positive
  bool complete = false;
};

// Primitive (x, y) with q(x, y) = t. Exhaustive when the form has an
// integral isotropic vector; otherwise a box search of the given radius.
NormSolutions solve_norm_equation(const Lattice& pic, const Integer& t, long box_radius = 60);

// Primitive solutions of q(x, y) = t with |x|, |y| <= radius, brute force.
std::vector<Pair> brute_force_norm(const Lattice& pic, const Integer& t, long radius);

struct ConeContext {
  std::string name;
  Lattice pic;  // rank 2, signature (1,1), with an og10 embedding
  IntVec positive_ray_hint;
  std::array<std::string, 2> basis_names;
};

ConeContext make_cone_context(std::string name, const Lattice& pic, IntVec hint,
                              std::array<std::string, 2> basis_names);

enum class RayKind { IsotropicBoundary, Wall, PexWall };
std::string_view ray_kind_name(RayKind k);

struct Ray {
  RayKind kind = RayKind::Wall;
  std::array<Surd, 2> direction;
  std::optional<Pair> primitive;  // when the direction is rational
  // Defining class D of a wall ray (D-perp), with its invariants.
  std::optional<Pair> wall_class;
  Integer square;
  Integer divisibility;
  std::optional<WallType> wall_type;
};

struct WallRays {
  std::vector<Ray> rays;  // angularly sorted, boundary excluded
  bool complete = true;
};

WallRays wall_rays(const ConeContext& ctx, const std::set<WallType>& types);

// The two isotropic boundary rays of the component containing the hint,
// ordered so that the cone is swept counterclockwise from the first.
std::array<Ray, 2> boundary_rays(const ConeContext& ctx);

struct ChamberStructure {
  std::vector<Ray> rays;  // boundary, walls..., boundary
  std::vector<std::pair<std::size_t, std::size_t>> chambers;
  std::optional<std::size_t> selected;
  bool complete = true;
};

ChamberStructure chambers(const ConeContext& ctx, const std::vector<Ray>& walls, bool complete = true);

// Throws OnWall when ample_side lies on a wall.
ChamberStructure movable_chamber(const ConeContext& ctx, std::span<const Integer> ample_side);
ChamberStructure kahler_chamber(const ConeContext& ctx, std::span<const Integer> ample_side);

// Position of v relative to a ray: sign of the 2x2 determinant (ray, v).
int side_of(const Ray& r, std::span<const Integer> v);
bool in_closed_chamber(const ChamberStructure& cs, std::size_t chamber, std::span<const Integer> v);

// Primitive, isotropic, and on the closed movable chamber selected by the
// context's hint.
bool lagrangian_candidate(const ConeContext& ctx, std::span<const Integer> v);

ConeContext ij_context();
ConeContext ij_twisted_context();
// U in the first hyperbolic summand; e - f is a -2 wall between e and f.
ConeContext u_context();

struct CompactificationTest {
  IntVec k_prime;          // coordinates in <h^2, K>
  Integer n;               // K'^2
  Integer obstruction_square;
  Integer obstruction_divisibility;
  bool congruence_consistent = true;  // mod 18 gate on divisibility 3
  std::optional<WallType> wall;
  bool unique = true;
  Integer hassett_discriminant;
};

// Gram of <h^2, K> on a cubic fourfold: (1,1) entry 3, positive definite.
CompactificationTest unique_compactification(const IntMatrix& hassett_gram);

}  // namespace og10
