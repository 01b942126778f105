#include "og10/cones.hpp"

#include <algorithm>

#include "og10/error.hpp"

namespace og10 {

int Surd::sign() const {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0 || sgn(d) == 0) return sa;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  const int c = cmp(a * a, b * b * d);
  return sa > 0 ? c : -c;
}

Surd Surd::operator+(const Surd& o) const {
  return {a + o.a, b + o.b, sgn(d) != 0 ? d : o.d};
}

Surd Surd::operator-(const Surd& o) const {
  return {a - o.a, b - o.b, sgn(d) != 0 ? d : o.d};
}

Surd Surd::operator*(const Surd& o) const {
  const Integer dd = sgn(d) != 0 ? d : o.d;
  return {a * o.a + b * o.b * dd, a * o.b + b * o.a, dd};
}

Surd Surd::operator*(const Rational& q) const { return {a * q, b * q, d}; }

namespace {

void canonical_sign(Pair& p) {
  if (sgn(p[0]) < 0 || (sgn(p[0]) == 0 && sgn(p[1]) < 0)) {
    p[0] = -p[0];
    p[1] = -p[1];
  }
}

bool primitive_pair(const Pair& p) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), p[0].get_mpz_t(), p[1].get_mpz_t());
  return g == 1;
}

Integer form(const Lattice& l, const Integer& x, const Integer& y) {
  const IntMatrix& g = l.gram();
  return g(0, 0) * x * x + 2 * g(0, 1) * x * y + g(1, 1) * y * y;
}

void require_rank2(const Lattice& l) {
  if (l.rank() != 2) throw Error(ErrorCode::DimensionMismatch, "cone computations need a rank-2 lattice");
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return std::nullopt;
  return r;
}

std::array<Surd, 2> to_surds(std::span<const Integer> v) {
  return {Surd::rational(Rational(v[0])), Surd::rational(Rational(v[1]))};
}

Surd surd_pair(const Lattice& l, const std::array<Surd, 2>& u, std::span<const Integer> v) {
  const IntMatrix& g = l.gram();
  const Rational gv0 = Rational(g(0, 0) * v[0] + g(0, 1) * v[1]);
  const Rational gv1 = Rational(g(1, 0) * v[0] + g(1, 1) * v[1]);
  return u[0] * gv0 + u[1] * gv1;
}

int cross_sign(const std::array<Surd, 2>& u, const std::array<Surd, 2>& w) {
  return (u[0] * w[1] - u[1] * w[0]).sign();
}

Ray rational_ray(RayKind kind, Pair p) {
  Ray r;
  r.kind = kind;
  r.direction = to_surds(p);
  r.primitive = p;
  return r;
}

}  // namespace

NormSolutions solve_norm_equation(const Lattice& pic, const Integer& t, long box_radius) {
  require_rank2(pic);
  if (sgn(t) == 0) throw Error(ErrorCode::InvalidArgument, "norm equation needs t != 0");
  const IntMatrix& g = pic.gram();
  const Integer A = g(0, 0), B = g(0, 1), C = g(1, 1);
  const Integer disc = B * B - A * C;
  NormSolutions out;
  auto root = exact_sqrt(disc);
  if (!root) {
    out.solutions = brute_force_norm(pic, t, box_radius);
    out.complete = false;
    return out;
  }

  // q factors: with a basis (w, u), u isotropic, q = x'(q(w) x' + 2 (w,u) y').
  Pair u;
  if (sgn(A) == 0) {
    u = {1, 0};
  } else {
    Integer x = -B + *root;
    Integer y = A;
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    u = {x / gg, y / gg};
  }
  Integer gg, s, r;
  mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), r.get_mpz_t(), u[1].get_mpz_t(), u[0].get_mpz_t());
  const Pair w = {s, -r};
  const IntVec wv{w[0], w[1]}, uv{u[0], u[1]};
  const Integer qw = pic.square(wv);
  const Integer wu = pic.pair(wv, uv);

  std::vector<Pair> found;
  const Integer at = abs(t);
  for (Integer d = 1; d * d <= at; ++d) {
    if (!mpz_divisible_p(at.get_mpz_t(), d.get_mpz_t())) continue;
    for (const Integer& base : {Integer(d), Integer(at / d)}) {
      for (int sign : {1, -1}) {
        const Integer xp = base * sign;
        const Integer num = t / xp - qw * xp;
        const Integer den = 2 * wu;
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
        const Integer yp = num / den;
        Pair p = {xp * w[0] + yp * u[0], xp * w[1] + yp * u[1]};
        if (!primitive_pair(p)) continue;
        canonical_sign(p);
        found.push_back(p);
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  out.solutions = std::move(found);
  out.complete = true;
  return out;
}

std::vector<Pair> brute_force_norm(const Lattice& pic, const Integer& t, long radius) {
  require_rank2(pic);
  std::vector<Pair> out;
  for (long x = 0; x <= radius; ++x) {
    for (long y = -radius; y <= radius; ++y) {
      if (x == 0 && y <= 0) continue;
      Pair p = {x, y};
      if (!primitive_pair(p)) continue;
      if (form(pic, p[0], p[1]) == t) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConeContext make_cone_context(std::string name, const Lattice& pic, IntVec hint,
                              std::array<std::string, 2> basis_names) {
  require_rank2(pic);
  if (pic.signature() != Signature{1, 1}) {
    throw Error(ErrorCode::InvalidArgument, "cone context needs signature (1,1)");
  }
  if (!pic.has_og10_embedding()) {
    throw Error(ErrorCode::NoAmbientEmbedding, "cone context needs an embedding into the OG10 lattice");
  }
  pic.check_coords(hint);
  if (sgn(pic.square(hint)) <= 0) throw Error(ErrorCode::InvalidArgument, "hint must have positive square");
  return {std::move(name), pic, std::move(hint), std::move(basis_names)};
}

std::string_view ray_kind_name(RayKind k) {
  switch (k) {
    case RayKind::IsotropicBoundary: return "IsotropicBoundary";
    case RayKind::Wall: return "Wall";
    case RayKind::PexWall: return "PexWall";
  }
  return "Wall";
}

std::array<Ray, 2> boundary_rays(const ConeContext& ctx) {
  const Lattice& pic = ctx.pic;
  const IntMatrix& g = pic.gram();
  const Integer A = g(0, 0), B = g(0, 1), C = g(1, 1);
  const Integer disc = B * B - A * C;
  std::vector<Ray> rays;
  auto root = exact_sqrt(disc);
  if (sgn(A) == 0 || root) {
    std::vector<Pair> lines;
    if (sgn(A) == 0) {
      lines.push_back({1, 0});
      lines.push_back({C, -2 * B});
    } else {
      lines.push_back({-B + *root, A});
      lines.push_back({-B - *root, A});
    }
    for (Pair p : lines) {
      Integer gg;
      mpz_gcd(gg.get_mpz_t(), p[0].get_mpz_t(), p[1].get_mpz_t());
      p = {p[0] / gg, p[1] / gg};
      const IntVec pv{p[0], p[1]};
      if (sgn(pic.pair(pv, ctx.positive_ray_hint)) < 0) p = {-p[0], -p[1]};
      rays.push_back(rational_ray(RayKind::IsotropicBoundary, p));
    }
  } else {
    for (int s : {1, -1}) {
      Ray r;
      r.kind = RayKind::IsotropicBoundary;
      r.direction = {Surd{Rational(-B), Rational(s), disc}, Surd{Rational(A), 0, disc}};
      if (surd_pair(pic, r.direction, ctx.positive_ray_hint).sign() < 0) {
        r.direction = {r.direction[0] * Rational(-1), r.direction[1] * Rational(-1)};
      }
      rays.push_back(r);
    }
  }
  for (auto& r : rays) r.square = 0;
  if (cross_sign(rays[0].direction, rays[1].direction) < 0) std::swap(rays[0], rays[1]);
  return {rays[0], rays[1]};
}

WallRays wall_rays(const ConeContext& ctx, const std::set<WallType>& types) {
  const Lattice& pic = ctx.pic;
  WallRays out;
  for (WallType t : types) {
    const WallTypeInfo& info = wall_type_info(t);
    NormSolutions ns = solve_norm_equation(pic, info.square);
    if (!ns.complete) out.complete = false;
    for (const Pair& d : ns.solutions) {
      const IntVec dv{d[0], d[1]};
      const Integer div = pic.ambient_divisibility(dv);
      if (div != info.divisibility) continue;
      const IntVec gd = pic.pairings(dv);
      Pair p = {gd[1], -gd[0]};
      Integer gg;
      mpz_gcd(gg.get_mpz_t(), p[0].get_mpz_t(), p[1].get_mpz_t());
      p = {p[0] / gg, p[1] / gg};
      if (sgn(pic.pair(IntVec{p[0], p[1]}, ctx.positive_ray_hint)) < 0) p = {-p[0], -p[1]};
      Ray r = rational_ray(pex_type_of(info.square, div) ? RayKind::PexWall : RayKind::Wall, p);
      r.wall_class = d;
      r.square = info.square;
      r.divisibility = div;
      r.wall_type = t;
      out.rays.push_back(std::move(r));
    }
  }
  std::sort(out.rays.begin(), out.rays.end(), [](const Ray& x, const Ray& y) {
    return cross_sign(x.direction, y.direction) > 0;
  });
  return out;
}

ChamberStructure chambers(const ConeContext& ctx, const std::vector<Ray>& walls, bool complete) {
  auto bounds = boundary_rays(ctx);
  ChamberStructure cs;
  cs.complete = complete;
  cs.rays.push_back(bounds[0]);
  std::vector<Ray> sorted = walls;
  std::sort(sorted.begin(), sorted.end(), [](const Ray& x, const Ray& y) {
    return cross_sign(x.direction, y.direction) > 0;
  });
  for (auto& r : sorted) cs.rays.push_back(r);
  cs.rays.push_back(bounds[1]);
  for (std::size_t i = 0; i + 1 < cs.rays.size(); ++i) cs.chambers.emplace_back(i, i + 1);
  return cs;
}

int side_of(const Ray& r, std::span<const Integer> v) {
  return cross_sign(r.direction, to_surds(v));
}

bool in_closed_chamber(const ChamberStructure& cs, std::size_t chamber, std::span<const Integer> v) {
  const auto [l, r] = cs.chambers.at(chamber);
  if (sgn(v[0]) == 0 && sgn(v[1]) == 0) return false;
  return side_of(cs.rays[l], v) >= 0 && side_of(cs.rays[r], v) <= 0;
}

namespace {

ChamberStructure select_chamber(const ConeContext& ctx, const WallRays& wr,
                                std::span<const Integer> ample) {
  ctx.pic.check_coords(ample);
  if (sgn(ctx.pic.square(ample)) <= 0 || sgn(ctx.pic.pair(ample, ctx.positive_ray_hint)) <= 0) {
    throw Error(ErrorCode::InvalidArgument, "ample side must lie in the positive cone component");
  }
  ChamberStructure cs = chambers(ctx, wr.rays, wr.complete);
  for (const auto& r : wr.rays) {
    if (side_of(r, ample) == 0) {
      throw Error(ErrorCode::OnWall, "class lies on the wall of (" + r.wall_class->at(0).get_str() +
                                         "," + r.wall_class->at(1).get_str() + ")");
    }
  }
  for (std::size_t c = 0; c < cs.chambers.size(); ++c) {
    if (in_closed_chamber(cs, c, ample)) {
      cs.selected = c;
      break;
    }
  }
  return cs;
}

}  // namespace

ChamberStructure movable_chamber(const ConeContext& ctx, std::span<const Integer> ample_side) {
  return select_chamber(ctx, wall_rays(ctx, {WallType::NegTwoDivOne, WallType::NegSixDivThree}),
                        ample_side);
}

ChamberStructure kahler_chamber(const ConeContext& ctx, std::span<const Integer> ample_side) {
  return select_chamber(ctx,
                        wall_rays(ctx, {WallType::NegTwoDivOne, WallType::NegFourDivOne,
                                        WallType::NegSixDivThree, WallType::NegTwentyFourDivThree}),
                        ample_side);
}

bool lagrangian_candidate(const ConeContext& ctx, std::span<const Integer> v) {
  ctx.pic.check_coords(v);
  if (!is_primitive(v) || sgn(ctx.pic.square(v)) != 0) return false;
  const ChamberStructure cs = movable_chamber(ctx, ctx.positive_ray_hint);
  return cs.selected && in_closed_chamber(cs, *cs.selected, v);
}

ConeContext ij_context() {
  using namespace og10_layout;
  IntMatrix emb(2, kRank);
  emb(0, kU1) = 1;       // T = e - f
  emb(0, kU1 + 1) = -1;
  emb(1, kU1 + 1) = 1;   // b = f
  Lattice pic = Lattice::make(IntMatrix{{-2, 1}, {1, 0}}, "P_V").with_og10_embedding(emb);
  return make_cone_context("ij", pic, {1, 4}, {"T", "b"});
}

ConeContext ij_twisted_context() {
  using namespace og10_layout;
  // With u = e - f and s0 = e1 + 2 e2 in A2(-1): T - b = 3u + s0, b = -e.
  IntMatrix emb(2, kRank);
  emb(0, kU1) = 2;
  emb(0, kU1 + 1) = -3;
  emb(0, kA2) = 1;
  emb(0, kA2 + 1) = 2;
  emb(1, kU1) = -1;
  Lattice pic = Lattice::make(IntMatrix{{-18, 3}, {3, 0}}, "P_V^t").with_og10_embedding(emb);
  return make_cone_context("ij-twisted", pic, {1, 10}, {"T", "b"});
}

ConeContext u_context() {
  using namespace og10_layout;
  IntMatrix emb(2, kRank);
  emb(0, kU1) = 1;
  emb(1, kU1 + 1) = 1;
  Lattice pic = Lattice::make(IntMatrix{{0, 1}, {1, 0}}, "U").with_og10_embedding(emb);
  return make_cone_context("u", pic, {1, 3}, {"e", "f"});
}

CompactificationTest unique_compactification(const IntMatrix& g) {
  if (g.rows() != 2 || g.cols() != 2 || g(0, 1) != g(1, 0) || g(0, 0) != 3 ||
      sgn(g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1)) <= 0) {
    throw Error(ErrorCode::NotCubicGram, "expected a positive definite 2x2 Gram with (1,1) entry 3");
  }
  const Integer c = g(0, 1);
  Integer gc;
  mpz_gcd(gc.get_mpz_t(), c.get_mpz_t(), Integer(3).get_mpz_t());
  CompactificationTest out;
  out.k_prime = {-c / gc, Integer(3) / gc};
  const Integer &x = out.k_prime[0], &y = out.k_prime[1];
  out.n = g(0, 0) * x * x + 2 * c * x * y + g(1, 1) * y * y;
  out.obstruction_square = -out.n;
  out.obstruction_divisibility = Integer(3) / gc;
  if (out.obstruction_divisibility == 3) {
    out.congruence_consistent = mod_floor(out.obstruction_square, 18) == 12;
  }
  out.wall = wall_type_of(out.obstruction_square, out.obstruction_divisibility);
  out.unique = !out.wall.has_value();
  out.hassett_discriminant = g(0, 0) * g(1, 1) - c * c;
  return out;
}

}  // namespace og10
