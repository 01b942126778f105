#pragma once

#include <vector>

#include "og10/lattice.hpp"

namespace og10 {

struct DiscriminantGroup {
  IntVec invariant_factors;               // each > 1, d1 | d2 | ...
  std::vector<RatVector> generator_lifts; // in L (x) Q coordinates
  std::vector<Rational> generator_values; // q(lift) mod 2, in [0, 2)

  // Rows of the left SNF transform belonging to the nontrivial factors;
  // components of x in L^v are (row . gram . x) mod factor.
  IntMatrix component_map;

  Integer order() const;
};

struct DiscElement {
  IntVec components;  // reduced into [0, factor)
  bool operator==(const DiscElement&) const = default;
  bool is_zero() const;
};

DiscriminantGroup discriminant_group(const Lattice& l);

// Class of x in A_L. x must lie in the dual lattice.
DiscElement disc_element(const DiscriminantGroup& g, const Lattice& l, std::span<const Rational> x);

// q(x) mod 2Z of a representative, in [0, 2).
Rational disc_form_value(const DiscriminantGroup& g, const Lattice& l, const DiscElement& e);

Rational mod2(const Rational& q);

// [v / div(v)]. Throws ZeroVector.
DiscElement residue(const DiscriminantGroup& g, const Lattice& l, std::span<const Integer> v);
DiscElement residue(const Lattice& l, std::span<const Integer> v);

bool eichler_equivalent(const Lattice& l, std::span<const Integer> v, std::span<const Integer> w);
bool eichler_sublattice_equivalent(const Lattice& l, const Sublattice& s, const Sublattice& t);

// For div 3: q(v) = 12 mod 18. For div 1: true.
bool div3_square_residue_check(const Lattice& l, std::span<const Integer> v);

}  // namespace og10
