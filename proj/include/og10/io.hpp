#pragma once

// JSON forms of the core types. Rationals are always "p/q" strings and
// integers are JSON numbers when they fit in 53 bits, decimal strings
// otherwise.

#include <json.hpp>

#include "og10/cones.hpp"
#include "og10/discriminant.hpp"
#include "og10/moduli.hpp"

namespace og10 {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const Rational& q);
Json to_json(std::span<const Integer> v);
Json to_json(std::span<const Rational> v);
Json to_json(const IntMatrix& m);

Integer integer_from_json(const Json& j);
IntVec intvec_from_json(const Json& j);
RatVector ratvec_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);

// {label, gram} with optional "u_planes" and "og10_embedding".
Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

Json class_to_json(const Lattice& l, std::span<const Integer> coords);
Json signature_to_json(const Signature& s);
Json discriminant_to_json(const DiscriminantGroup& g, const Lattice& l);
Json disc_element_to_json(const DiscElement& e);

Json mukai_to_json(const MukaiVector& v);
MukaiVector mukai_from_json(const Json& j);

Json ray_to_json(const Ray& r);
Json chamber_structure_to_json(const ChamberStructure& cs);
Json surd_to_json(const Surd& s);

}  // namespace og10
