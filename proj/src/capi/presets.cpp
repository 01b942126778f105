#include <functional>
#include <map>

#include "internal.hpp"
#include "og10/error.hpp"

namespace og10::capi {

namespace {

Json result(const std::string& name, const std::string& description, Json computed, Json expected) {
  Json j;
  j["preset"] = name;
  j["description"] = description;
  const bool match = computed == expected;
  j["computed"] = std::move(computed);
  j["expected"] = std::move(expected);
  j["match"] = match;
  return j;
}

Lattice degree_two() { return Lattice::make(IntMatrix{{2}}, "H"); }

std::string wall_name(const std::optional<WallType>& t) {
  return t ? std::string(wall_type_info(*t).name) : "NotAWall";
}

Json invariants(const Lattice& l, const IntVec& v) {
  return {{"square", to_json(l.square(v))}, {"divisibility", to_json(l.ambient_divisibility(v))}};
}

std::string selected_bounds(const ConeContext& ctx, const ChamberStructure& cs) {
  auto [l, r] = cs.chambers.at(*cs.selected);
  return ray_label(ctx, cs.rays[l]) + " | " + ray_label(ctx, cs.rays[r]);
}

Json wall_ray_json(const ConeContext& ctx, const Ray& r) {
  return {{"class", class_label(ctx, *r.wall_class)},
          {"square", to_json(r.square)},
          {"divisibility", to_json(r.divisibility)},
          {"kind", std::string(ray_kind_name(r.kind))}};
}

PresetResult fig1() {
  const ConeContext ctx = ij_context();
  const ChamberStructure k = kahler_chamber(ctx, ctx.positive_ray_hint);
  const ChamberStructure m = movable_chamber(ctx, ctx.positive_ray_hint);
  Json walls = Json::array();
  for (const Ray& r : k.rays) {
    if (r.wall_class) walls.push_back(wall_ray_json(ctx, r));
  }
  Json computed = {{"gram", to_json(ctx.pic.gram())},
                   {"kahler_chamber", selected_bounds(ctx, k)},
                   {"movable_chamber", selected_bounds(ctx, m)},
                   {"walls", walls}};
  Json expected = {{"gram", {{-2, 1}, {1, 0}}},
                   {"kahler_chamber", "(T-b)⊥ | b"},
                   {"movable_chamber", "T⊥ | b"},
                   {"walls",
                    {{{"class", "2T+b"}, {"square", -4}, {"divisibility", 1}, {"kind", "Wall"}},
                     {{"class", "T"}, {"square", -2}, {"divisibility", 1}, {"kind", "PexWall"}},
                     {{"class", "T-b"}, {"square", -4}, {"divisibility", 1}, {"kind", "Wall"}}}}};
  return {result("fig1", "Kähler and movable chambers of the IJ context", computed, expected), ctx, k};
}

PresetResult ij_twisted() {
  const ConeContext ctx = ij_twisted_context();
  const ChamberStructure k = kahler_chamber(ctx, ctx.positive_ray_hint);
  const ChamberStructure m = movable_chamber(ctx, ctx.positive_ray_hint);
  auto [l, r] = k.chambers.at(*k.selected);
  (void)r;
  auto [ml, mr] = m.chambers.at(*m.selected);
  (void)mr;
  Json computed = {{"gram", to_json(ctx.pic.gram())},
                   {"kahler_chamber", selected_bounds(ctx, k)},
                   {"kahler_wall", wall_ray_json(ctx, k.rays[l])},
                   {"movable_chamber", selected_bounds(ctx, m)},
                   {"pex_wall", wall_ray_json(ctx, m.rays[ml])}};
  Json expected = {
      {"gram", {{-18, 3}, {3, 0}}},
      {"kahler_chamber", "(T-b)⊥ | b"},
      {"kahler_wall", {{"class", "T-b"}, {"square", -24}, {"divisibility", 3}, {"kind", "Wall"}}},
      {"movable_chamber", "(T+2b)⊥ | b"},
      {"pex_wall", {{"class", "T+2b"}, {"square", -6}, {"divisibility", 3}, {"kind", "PexWall"}}}};
  return {result("ij-twisted", "Kähler and movable chambers of the twisted IJ context", computed, expected),
          ctx, k};
}

Json dual_wall_preset(const std::string& name, const std::string& description, const MukaiVector& v,
                      const IntMatrix& vperp, const IntVec& pairings, const Json& expected) {
  const ModuliPicard m = moduli_picard(degree_two(), v, vperp);
  const RatVector r = curve_class(m, pairings);
  const DualWall d = dual_wall_divisor(m, r);
  Json computed = {{"frame_gram", to_json(m.frame.gram())},
                   {"curve_class", to_json(r)},
                   {"wall_divisor", to_json(d.frame)},
                   {"square", to_json(d.square)},
                   {"divisibility", to_json(d.divisibility)},
                   {"wall_type", wall_name(d.type)},
                   {"is_dual", d.is_dual}};
  if (name == "p3-bundle") {
    // x = -(a + 3b + sigma)/2 is integral.
    const IntVec x = m.integral_from_frame(RatVector{Rational(-1, 2), Rational(-3, 2), Rational(-1, 2)});
    computed["x_square"] = to_json(m.picard.square(x));
  }
  return result(name, description, computed, expected);
}

PresetResult zero_section() {
  Json expected = {{"frame_gram", {{2, 1, 0}, {1, 0, 0}, {0, 0, -6}}},
                   {"curve_class", {"1", "-3", "0"}},
                   {"wall_divisor", {"1", "-3", "0"}},
                   {"square", -4},
                   {"divisibility", 1},
                   {"wall_type", "NegFourDivOne"},
                   {"is_dual", true}};
  return {dual_wall_preset("zero-section", "wall dual to the curve a-3b for v = (0,2H,-4)", {0, {2}, -4},
                           IntMatrix{{-1, 1, 0}, {0, 0, 1}}, IntVec{-1, 1, 0}, expected),
          std::nullopt, std::nullopt};
}

PresetResult p3_bundle() {
  Json expected = {{"frame_gram", {{2, -2, 0}, {-2, 0, 0}, {0, 0, -6}}},
                   {"curve_class", {"-1/2", "-3/2", "-1/6"}},
                   {"wall_divisor", {"-3/2", "-9/2", "-1/2"}},
                   {"square", -24},
                   {"divisibility", 3},
                   {"wall_type", "NegTwentyFourDivThree"},
                   {"is_dual", true},
                   {"x_square", -4}};
  return {dual_wall_preset("p3-bundle", "wall 3x+sigma for v = (0,2H,2)", {0, {2}, 2},
                           IntMatrix{{2, 1, 0}, {0, 0, 1}}, IntVec{2, 1, 1}, expected),
          std::nullopt, std::nullopt};
}

PresetResult nonreduced() {
  Json expected = {{"frame_gram", {{2, 1, 0}, {1, 0, 0}, {0, 0, -6}}},
                   {"curve_class", {"0", "1", "-2/3"}},
                   {"wall_divisor", {"0", "3", "-2"}},
                   {"square", -24},
                   {"divisibility", 3},
                   {"wall_type", "NegTwentyFourDivThree"},
                   {"is_dual", true}};
  return {dual_wall_preset("nonreduced", "wall 3b-2sigma for v = (0,2H,-4)", {0, {2}, -4},
                           IntMatrix{{-1, 1, 0}, {0, 0, 1}}, IntVec{1, 0, 4}, expected),
          std::nullopt, std::nullopt};
}

PresetResult mz_elliptic() {
  const Lattice u = u_lattice().with_label("U");
  const MukaiVector v{2, {0, 0}, -2};
  const IntVec h0{1, 2};
  const ContractionVerdict cv = mz_contraction_type(u, v, h0, 10);
  Json computed = {{"kind", std::string(contraction_kind_name(cv.kind))},
                   {"search_complete", cv.search_complete}};
  if (cv.witness) {
    const Lattice muk = mukai_algebraic(u);
    const MukaiVector s = MukaiVector::from_coords(*cv.witness);
    IntVec h{0, h0[0], h0[1], 0};
    computed["witness"] = mukai_to_json(s);
    computed["witness_square"] = to_json(muk.square(*cv.witness));
    computed["pair_with_h0"] = to_json(muk.pair(*cv.witness, h));
    computed["pair_with_v"] = to_json(muk.pair(*cv.witness, v.coords()));
  }
  Json expected = {{"kind", "SmallContraction"},
                   {"search_complete", true},
                   {"witness", {{"r", 1}, {"c", {1, -2}}, {"s", -1}}},
                   {"witness_square", -2},
                   {"pair_with_h0", 0},
                   {"pair_with_v", 4}};
  return {result("mz-elliptic", "contraction type for v = (2,0,-2) on an elliptic K3 with H0 = e+2f",
                 computed, expected),
          std::nullopt, std::nullopt};
}

PresetResult pfaffian() {
  const CompactificationTest t = unique_compactification(IntMatrix{{3, 4}, {4, 10}});
  Json computed = {{"k_prime", to_json(t.k_prime)},
                   {"k_prime_square", to_json(t.n)},
                   {"obstruction_square", to_json(t.obstruction_square)},
                   {"obstruction_divisibility", to_json(t.obstruction_divisibility)},
                   {"wall_type", wall_name(t.wall)},
                   {"hassett_discriminant", to_json(t.hassett_discriminant)},
                   {"unique", t.unique}};
  Json expected = {{"k_prime", {-4, 3}},
                   {"k_prime_square", 42},
                   {"obstruction_square", -42},
                   {"obstruction_divisibility", 3},
                   {"wall_type", "NotAWall"},
                   {"hassett_discriminant", 14},
                   {"unique", true}};
  return {result("pfaffian", "compactification test on a Pfaffian cubic fourfold", computed, expected),
          std::nullopt, std::nullopt};
}

PresetResult prop63_split() {
  const ModuliPicard m = moduli_picard(degree_two(), {2, {0}, -2});
  const IntVec d = m.mukai_to_picard(IntVec{3, 2, 3});
  const HalfSplit split = half_integral_split(m.picard, d, m.sigma);
  IntVec d3(split.e.size());
  for (std::size_t i = 0; i < d3.size(); ++i) d3[i] = 3 * split.e[i] + m.sigma[i];
  const ProjectionClass proj = sigma_projection_class(m.picard, d3, m.sigma);
  Json computed = {{"d_square", to_json(m.picard.square(d))},
                   {"e_square", to_json(split.square)},
                   {"e_pair_sigma", to_json(split.pairing_with_sigma)},
                   {"e_wall_type", wall_name(wall_type(m.picard, split.e))},
                   {"d3", invariants(m.picard, d3)},
                   {"d3_wall_type", wall_name(wall_type(m.picard, d3))},
                   {"d3_projection",
                    {{"square", to_json(proj.square)},
                     {"divisibility", to_json(proj.divisibility)},
                     {"admissible", proj.admissible}}}};
  Json expected = {{"d_square", -10},
                   {"e_square", -4},
                   {"e_pair_sigma", 3},
                   {"e_wall_type", "NegFourDivOne"},
                   {"d3", {{"square", -24}, {"divisibility", 3}}},
                   {"d3_wall_type", "NegTwentyFourDivThree"},
                   {"d3_projection", {{"square", -10}, {"divisibility", 2}, {"admissible", true}}}};
  return {result("prop63-split", "half-integral split of D = (3,2H,3) for v = (2,0,-2)", computed, expected),
          std::nullopt, std::nullopt};
}

PresetResult prop53_exclusion() {
  const ModuliPicard m = moduli_picard(degree_two(), {0, {2}, -2});
  const IntVec w = m.mukai_to_picard(IntVec{-18, 9, -5});  // 4(-2,H,0) + 5(-2,H,-1)
  RatVector wf = m.to_frame(std::span<const Integer>(w));
  for (auto& x : wf) x *= Rational(3, 2);
  wf[m.sigma_index()] -= Rational(1, 2);
  const IntVec wp = m.integral_from_frame(wf);
  const ProjectionClass w_proj = sigma_projection_class(m.picard, w, m.sigma);
  const ProjectionClass proj = sigma_projection_class(m.picard, wp, m.sigma);
  Json computed = {{"w_square", to_json(m.picard.square(w))},
                   {"w_divisibility", to_json(w_proj.divisibility)},
                   {"w_prime", invariants(m.picard, wp)},
                   {"projection_proportional_to_w", proj.primitive == primitive_part(w)},
                   {"projection",
                    {{"square", to_json(proj.square)},
                     {"divisibility", to_json(proj.divisibility)},
                     {"admissible", proj.admissible}}},
                   {"w_prime_wall_type", wall_name(wall_type(m.picard, wp))}};
  Json expected = {{"w_square", -18},
                   {"w_divisibility", 2},
                   {"w_prime", {{"square", -42}, {"divisibility", 3}}},
                   {"projection_proportional_to_w", true},
                   {"projection", {{"square", -18}, {"divisibility", 2}, {"admissible", false}}},
                   {"w_prime_wall_type", "NotAWall"}};
  return {result("prop53-exclusion", "the class W' = 3(W-sigma)/2 + sigma is not a wall", computed, expected),
          std::nullopt, std::nullopt};
}

using Runner = std::function<PresetResult()>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"fig1", fig1},
      {"ij-twisted", ij_twisted},
      {"zero-section", zero_section},
      {"p3-bundle", p3_bundle},
      {"nonreduced", nonreduced},
      {"mz-elliptic", mz_elliptic},
      {"pfaffian", pfaffian},
      {"prop63-split", prop63_split},
      {"prop53-exclusion", prop53_exclusion},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig1",        "ij-twisted", "zero-section",
                                                 "p3-bundle",   "nonreduced", "mz-elliptic",
                                                 "pfaffian",    "prop63-split", "prop53-exclusion"};
  return names;
}

PresetResult run_preset(const std::string& name) {
  auto it = runners().find(name);
  if (it == runners().end()) {
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw FrontEndError(OG10_ERR_UNKNOWN_PRESET, "unknown preset '" + name + "' (available: " + known + ")");
  }
  return it->second();
}

}  // namespace og10::capi
