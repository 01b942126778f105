#include "doctest.h"
#include "og10/error.hpp"
#include "support.hpp"

using namespace og10;
using namespace og10::test;

namespace {

IntVec a2_class(long a, long b, long k) {
  IntVec v(24, 0);
  v[0] = 3;
  v[1] = 3 * k;
  v[22] = a;
  v[23] = b;
  return v;
}

}  // namespace

TEST_CASE("discriminant group of og10") {
  const Lattice l = og10_lattice();
  const DiscriminantGroup g = discriminant_group(l);
  CHECK(g.invariant_factors == IntVec{3});
  CHECK(g.order() == 3);
  CHECK(g.generator_values == std::vector<Rational>{Rational(4, 3)});
  REQUIRE(g.generator_lifts.size() == 1);
  // the lift lies in the dual lattice
  for (std::size_t i = 0; i < 24; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 24; ++j) s += l.gram()(i, j) * g.generator_lifts[0][j];
    CHECK(s.get_den() == 1);
  }
}

TEST_CASE("unimodular lattices have trivial groups") {
  CHECK(discriminant_group(u_lattice()).order() == 1);
  CHECK(discriminant_group(e8_negative()).order() == 1);
  CHECK(discriminant_group(a2_negative()).invariant_factors == IntVec{3});
}

TEST_CASE("residues") {
  const Lattice l = og10_lattice();
  IntVec v(24, 0);
  v[0] = 1;
  CHECK(residue(l, v).is_zero());
  const DiscElement r1 = residue(l, a2_class(1, 2, 0));
  const DiscElement r2 = residue(l, a2_class(2, 1, 0));
  CHECK_FALSE(r1.is_zero());
  CHECK_FALSE(r2.is_zero());
  CHECK_FALSE(r1 == r2);
  const DiscriminantGroup g = discriminant_group(l);
  CHECK(disc_form_value(g, l, r1) == Rational(4, 3));
  CHECK(mod2(Rational(-2, 3)) == Rational(4, 3));
}

TEST_CASE("eichler criterion for vectors") {
  const Lattice l = og10_lattice();
  const IntVec v = a2_class(1, 2, 1);
  const IntVec w = a2_class(1, 2, 1);
  CHECK(eichler_equivalent(l, v, w));
  // same square, opposite residues
  CHECK(l.square(a2_class(1, 2, 1)) == l.square(a2_class(2, 1, 1)));
  CHECK_FALSE(eichler_equivalent(l, a2_class(1, 2, 1), a2_class(2, 1, 1)));
  IntVec a(24, 0), b(24, 0);
  a[0] = 1;
  a[1] = -1;
  b[6] = 1;  // a root of E8(-1)
  CHECK(eichler_equivalent(l, a, b));
  IntVec two = a;
  two[0] = 2;
  two[1] = -2;
  CHECK_THROWS_AS(eichler_equivalent(l, two, b), Error);
  try {
    eichler_equivalent(u_lattice(), IntVec{1, 0}, IntVec{0, 1});
    FAIL("expected NoU2Witness");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoU2Witness);
  }
}

TEST_CASE("eichler criterion for sublattices") {
  const Lattice l = og10_lattice();
  IntMatrix s(2, 24), t(2, 24);
  s(0, 0) = 1;
  s(0, 1) = -1;  // e - f
  s(1, 6) = 1;
  t(0, 6) = 1;
  t(1, 14) = 1;
  const Sublattice ss = make_sublattice(l, s);
  const Sublattice tt = make_sublattice(l, t);
  CHECK(restricted_gram(l, s) == restricted_gram(l, t));
  CHECK(eichler_sublattice_equivalent(l, ss, tt));
  IntMatrix big(3, 24);
  big(0, 6) = big(1, 14) = big(2, 22) = 1;
  try {
    eichler_sublattice_equivalent(l, make_sublattice(l, big), make_sublattice(l, big));
    FAIL("expected RankTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankTooLarge);
  }
}

TEST_CASE("divisibility three residue check") {
  const Lattice l = og10_lattice();
  CHECK(div3_square_residue_check(l, a2_class(1, 2, 4)));
  CHECK_THROWS_AS(div3_square_residue_check(u_lattice(), IntVec{1, 0}), Error);
}
