#include <algorithm>

#include "doctest.h"
#include "og10/error.hpp"
#include "support.hpp"

using namespace og10;
using namespace og10::test;

namespace {

std::vector<Pair> bounded(const std::vector<Pair>& xs, long r) {
  std::vector<Pair> out;
  for (const auto& p : xs)
    if (abs(p[0]) <= r && abs(p[1]) <= r) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("surd signs") {
  CHECK(Surd{1, 1, 2}.sign() == 1);
  CHECK(Surd{-2, 1, 2}.sign() == -1);   // -2 + sqrt 2
  CHECK(Surd{3, -2, 2}.sign() == 1);    // 3 - 2 sqrt 2
  CHECK(Surd{-3, 2, 2}.sign() == -1);
  CHECK((Surd{1, 1, 2} * Surd{1, -1, 2}).sign() == -1);  // 1 - 2
  CHECK(Surd::rational(0).sign() == 0);
}

TEST_CASE("context gram matrices") {
  CHECK(ij_context().pic.gram() == IntMatrix{{-2, 1}, {1, 0}});
  CHECK(ij_twisted_context().pic.gram() == IntMatrix{{-18, 3}, {3, 0}});
  CHECK(u_context().pic.gram() == IntMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("IJ chambers") {
  const ConeContext ctx = ij_context();
  const ChamberStructure k = kahler_chamber(ctx, ctx.positive_ray_hint);
  REQUIRE(k.selected);
  auto [l, r] = k.chambers[*k.selected];
  REQUIRE(k.rays[l].wall_class);
  CHECK(*k.rays[l].wall_class == Pair{1, -1});
  CHECK(k.rays[l].square == -4);
  CHECK(k.rays[r].kind == RayKind::IsotropicBoundary);
  CHECK(*k.rays[r].primitive == Pair{0, 1});
  const ChamberStructure m = movable_chamber(ctx, ctx.positive_ray_hint);
  auto [ml, mr] = m.chambers[*m.selected];
  CHECK(*m.rays[ml].wall_class == Pair{1, 0});
  CHECK(*m.rays[mr].primitive == Pair{0, 1});
  CHECK(k.rays.size() == 5);
  CHECK(k.complete);
}

TEST_CASE("twisted IJ chambers") {
  const ConeContext ctx = ij_twisted_context();
  const ChamberStructure k = kahler_chamber(ctx, ctx.positive_ray_hint);
  auto [l, r] = k.chambers[*k.selected];
  CHECK(*k.rays[l].wall_class == Pair{1, -1});
  CHECK(k.rays[l].square == -24);
  CHECK(k.rays[l].divisibility == 3);
  const ChamberStructure m = movable_chamber(ctx, ctx.positive_ray_hint);
  auto [ml, mr] = m.chambers[*m.selected];
  CHECK(*m.rays[ml].wall_class == Pair{1, 2});
  CHECK(m.rays[ml].kind == RayKind::PexWall);
  CHECK(m.rays[ml].square == -6);
  CHECK(m.rays[ml].divisibility == 3);
  (void)r;
  (void)mr;
}

TEST_CASE("on wall and outside the cone") {
  const ConeContext ctx = ij_context();
  try {
    kahler_chamber(ctx, IntVec{1, 3});
    FAIL("expected OnWall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OnWall);
  }
  CHECK_THROWS_AS(kahler_chamber(ctx, IntVec{1, 0}), Error);
}

TEST_CASE("lagrangian candidates") {
  const ConeContext ctx = ij_context();
  CHECK(lagrangian_candidate(ctx, IntVec{0, 1}));
  CHECK_FALSE(lagrangian_candidate(ctx, IntVec{1, 1}));
  CHECK_FALSE(lagrangian_candidate(ctx, IntVec{0, 2}));
}

TEST_CASE("norm equation against brute force") {
  for (const ConeContext& ctx : {ij_context(), ij_twisted_context(), u_context()}) {
    for (long t = -30; t <= 30; ++t) {
      if (t == 0) continue;
      const NormSolutions s = solve_norm_equation(ctx.pic, t);
      REQUIRE(s.complete);
      CHECK(bounded(s.solutions, 25) == bounded(brute_norm(ctx.pic.gram(), t, 25), 25));
    }
  }
}

TEST_CASE("unique compactification") {
  const CompactificationTest p = unique_compactification(IntMatrix{{3, 4}, {4, 10}});
  CHECK(p.n == 42);
  CHECK(p.obstruction_square == -42);
  CHECK(p.obstruction_divisibility == 3);
  CHECK_FALSE(p.wall);
  CHECK(p.unique);
  CHECK(p.hassett_discriminant == 14);
  const CompactificationTest c8 = unique_compactification(IntMatrix{{3, 1}, {1, 3}});
  CHECK(c8.obstruction_square == -24);
  CHECK_FALSE(c8.unique);
  const CompactificationTest c12 = unique_compactification(IntMatrix{{3, 3}, {3, 7}});
  CHECK(c12.obstruction_square == -4);
  CHECK_FALSE(c12.unique);
  CHECK_THROWS_AS(unique_compactification(IntMatrix{{2, 1}, {1, 2}}), Error);
}
