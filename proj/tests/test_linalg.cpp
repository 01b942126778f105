#include "doctest.h"
#include "support.hpp"

using namespace og10;
using namespace og10::test;

TEST_CASE("smith form of a small matrix") {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithForm s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(s.diagonal() == IntVec{2, 6, 12});
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
}

TEST_CASE("smith form keeps trailing zeros for singular input") {
  const IntMatrix m{{1, 2}, {2, 4}};
  CHECK(smith_normal_form(m).diagonal() == IntVec{1, 0});
}

TEST_CASE("hermite form") {
  const IntMatrix m{{2, 3, 6}, {4, 1, 2}, {6, 4, 8}};
  const HermiteForm h = hermite_normal_form(m);
  CHECK(h.t * m == h.h);
  CHECK(h.rank == 2);
  CHECK(abs(determinant(h.t)) == 1);
  // pivots positive, entries above a pivot reduced
  CHECK(h.h(0, 0) > 0);
  CHECK(h.h(1, 1) > 0);
  CHECK(h.h(0, 1) >= 0);
  CHECK(h.h(0, 1) < h.h(1, 1));
  for (std::size_t j = 0; j < 3; ++j) CHECK(h.h(2, j) == 0);
}

TEST_CASE("integer kernel is saturated") {
  const IntMatrix m{{2, 4, 6}};
  const IntMatrix k = integer_kernel(m);
  REQUIRE(k.rows() == 2);
  for (std::size_t i = 0; i < k.rows(); ++i) CHECK(m.apply(k.row(i)) == IntVec{0});
  CHECK(smith_normal_form(k).diagonal() == IntVec{1, 1});
  CHECK(integer_kernel(IntMatrix{{1, 0}, {0, 1}}).rows() == 0);
}

TEST_CASE("rational solve agrees with cramer") {
  const IntMatrix a{{2, 1, 0}, {1, 0, 0}, {0, 0, -6}};
  const RatVector b{1, 0, 4};
  auto x = solve_rational(a, b);
  REQUIRE(x);
  CHECK(*x == cramer_solve(a, b));
  CHECK((*x)[2] == Rational(-2, 3));
  CHECK_FALSE(solve_rational(IntMatrix{{1, 1}, {1, 1}}, RatVector{0, 1}));
}

TEST_CASE("determinant and rank") {
  CHECK(determinant(og10_gram_by_hand()) == -3);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(matrix_rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("vector helpers") {
  CHECK(content(IntVec{4, -6, 0}) == 2);
  CHECK(primitive_part(IntVec{4, -6, 0}) == IntVec{2, -3, 0});
  CHECK(primitive_on_ray(RatVector{Rational(-3, 2), Rational(-9, 2), Rational(-1, 2)}) == IntVec{-3, -9, -1});
  CHECK(floor_div(-7, 2) == -4);
  CHECK(mod_floor(-7, 3) == 2);
}

TEST_CASE("rational text round trip") {
  CHECK(format_rational(Rational(-2, 3)) == "-2/3");
  CHECK(format_rational(make_rational(4, 2)) == "2");
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
}
