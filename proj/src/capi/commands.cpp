#include <map>

#include "internal.hpp"
#include "og10/error.hpp"

namespace og10::capi {

og10_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return OG10_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return OG10_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotSymmetric: return OG10_ERR_NOT_SYMMETRIC;
    case ErrorCode::NotEven: return OG10_ERR_NOT_EVEN;
    case ErrorCode::Degenerate: return OG10_ERR_DEGENERATE;
    case ErrorCode::ZeroVector: return OG10_ERR_ZERO_VECTOR;
    case ErrorCode::NotPrimitive: return OG10_ERR_NOT_PRIMITIVE;
    case ErrorCode::NonNegativeSquare: return OG10_ERR_NON_NEGATIVE_SQUARE;
    case ErrorCode::NoU2Witness: return OG10_ERR_NO_U2_WITNESS;
    case ErrorCode::RankTooLarge: return OG10_ERR_RANK_TOO_LARGE;
    case ErrorCode::NotApplicable: return OG10_ERR_NOT_APPLICABLE;
    case ErrorCode::NoAmbientEmbedding: return OG10_ERR_NO_AMBIENT_EMBEDDING;
    case ErrorCode::NotHalfIntegral: return OG10_ERR_NOT_HALF_INTEGRAL;
    case ErrorCode::NotOG10Vector: return OG10_ERR_NOT_OG10_VECTOR;
    case ErrorCode::Inconsistent: return OG10_ERR_INCONSISTENT;
    case ErrorCode::NotProportionalToWall: return OG10_ERR_NOT_PROPORTIONAL_TO_WALL;
    case ErrorCode::EmbeddingNotFound: return OG10_ERR_EMBEDDING_NOT_FOUND;
    case ErrorCode::OnWall: return OG10_ERR_ON_WALL;
    case ErrorCode::NotCubicGram: return OG10_ERR_NOT_CUBIC_GRAM;
  }
  return OG10_ERR_INTERNAL;
}

Lattice named_lattice(const std::string& name) {
  if (name == "og10") return og10_lattice();
  if (name == "U") return u_lattice();
  if (name == "A2" || name == "A2(-1)") return a2_negative();
  if (name == "E8" || name == "E8(-1)") return e8_negative();
  if (name == "P_V" || name == "ij") return ij_context().pic;
  if (name == "P_V^t" || name == "ij-twisted") return ij_twisted_context().pic;
  throw FrontEndError(OG10_ERR_INVALID_ARGUMENT,
                      "unknown lattice '" + name + "' (known: og10, U, A2, E8, P_V, P_V^t)");
}

Lattice resolve_lattice(const Json& spec) {
  if (spec.is_string()) return named_lattice(spec.get<std::string>());
  if (spec.is_object()) return lattice_from_json(spec);
  throw FrontEndError(OG10_ERR_INVALID_ARGUMENT, "lattice must be a name or a JSON object");
}

ConeContext named_context(const std::string& name) {
  if (name == "ij") return ij_context();
  if (name == "ij-twisted") return ij_twisted_context();
  if (name == "u") return u_context();
  throw FrontEndError(OG10_ERR_INVALID_ARGUMENT,
                      "unknown cone context '" + name + "' (known: ij, ij-twisted, u)");
}

ConeContext resolve_context(const Json& request) {
  const Json& c = request.contains("context") ? request["context"] : Json("ij");
  if (c.is_string()) return named_context(c.get<std::string>());
  if (!c.is_object() || !c.contains("lattice") || !c.contains("hint")) {
    throw FrontEndError(OG10_ERR_INVALID_ARGUMENT, "context object needs lattice and hint");
  }
  std::array<std::string, 2> names{"x", "y"};
  if (c.contains("names")) names = {c["names"].at(0).get<std::string>(), c["names"].at(1).get<std::string>()};
  return make_cone_context(c.value("name", std::string("custom")), resolve_lattice(c["lattice"]),
                           intvec_from_json(c["hint"]), names);
}

namespace {

const Json& require(const Json& req, const char* key) {
  if (!req.contains(key)) {
    throw FrontEndError(OG10_ERR_INVALID_ARGUMENT, std::string("missing required field \"") + key + "\"");
  }
  return req[key];
}

IntVec class_of(const Json& req, const Lattice& l, const char* key = "class") {
  IntVec v = intvec_from_json(require(req, key));
  l.check_coords(v);
  return v;
}

Json classification(const Lattice& l, const IntVec& v, const std::string& verdict) {
  Json j;
  j["class"] = class_to_json(l, v);
  j["square"] = to_json(l.square(v));
  j["divisibility"] = to_json(l.has_og10_embedding() ? l.ambient_divisibility(v) : l.divisibility(v));
  j["verdict"] = verdict;
  return j;
}

Json lattice_info(const Json& req) {
  const Lattice l = resolve_lattice(require(req, "lattice"));
  const DiscriminantGroup g = discriminant_group(l);
  Json j;
  j["lattice"] = lattice_to_json(l);
  j["rank"] = l.rank();
  j["signature"] = signature_to_json(l.signature());
  j["determinant"] = to_json(l.determinant());
  j["discriminant"] = discriminant_to_json(g, l);
  j["u_planes"] = l.u_planes().size();
  return j;
}

Json div_command(const Json& req) {
  const Lattice l = resolve_lattice(require(req, "lattice"));
  const IntVec v = class_of(req, l);
  Json j;
  j["class"] = class_to_json(l, v);
  j["square"] = to_json(l.square(v));
  j["divisibility"] = to_json(l.divisibility(v));
  if (l.has_og10_embedding() && !l.is_og10()) j["ambient_divisibility"] = to_json(l.ambient_divisibility(v));
  j["residue"] = disc_element_to_json(residue(l, v));
  j["primitive"] = is_primitive(v);
  return j;
}

Json orbit_equiv(const Json& req) {
  const Lattice l = resolve_lattice(require(req, "lattice"));
  Json j;
  if (req.contains("sublattice")) {
    const Sublattice s = make_sublattice(l, matrix_from_json(req["sublattice"]));
    const Sublattice t = make_sublattice(l, matrix_from_json(require(req, "other_sublattice")));
    j["kind"] = "sublattice";
    j["gram"] = to_json(restricted_gram(l, s.basis));
    j["other_gram"] = to_json(restricted_gram(l, t.basis));
    j["equivalent"] = eichler_sublattice_equivalent(l, s, t);
    return j;
  }
  const IntVec v = class_of(req, l);
  const IntVec w = class_of(req, l, "other");
  const bool eq = eichler_equivalent(l, v, w);
  const DiscriminantGroup g = discriminant_group(l);
  auto inv = [&](const IntVec& x) {
    Json k;
    k["class"] = class_to_json(l, x);
    k["square"] = to_json(l.square(x));
    k["divisibility"] = to_json(l.divisibility(x));
    k["residue"] = disc_element_to_json(residue(g, l, x));
    return k;
  };
  j["kind"] = "vector";
  j["first"] = inv(v);
  j["second"] = inv(w);
  j["equivalent"] = eq;
  return j;
}

Json wall_check(const Json& req) {
  const Lattice l = resolve_lattice(require(req, "lattice"));
  const IntVec v = class_of(req, l);
  auto t = wall_type(l, v);
  Json j = classification(l, v, t ? std::string(wall_type_info(*t).name) : "NotAWall");
  if (t) j["codimension"] = wall_type_info(*t).codimension;
  return j;
}

Json pex_check(const Json& req) {
  const Lattice l = resolve_lattice(require(req, "lattice"));
  const IntVec v = class_of(req, l);
  auto t = stably_prime_exceptional(l, v);
  return classification(l, v, t ? std::string(pex_type_name(*t)) : "NotPex");
}

Json reflection_command(const Json& req) {
  const Lattice l = resolve_lattice(require(req, "lattice"));
  const IntVec d = class_of(req, l);
  auto r = reflection(l, d);
  Json j;
  j["class"] = class_to_json(l, d);
  j["square"] = to_json(l.square(d));
  j["divisibility"] = to_json(l.divisibility(d));
  if (auto* m = std::get_if<IntMatrix>(&r)) {
    j["integral"] = true;
    j["matrix"] = to_json(*m);
  } else {
    const auto& ni = std::get<NotIntegral>(r);
    j["integral"] = false;
    j["entry"] = to_json(ni.entry);
    j["row"] = ni.row;
    j["col"] = ni.col;
  }
  return j;
}

ModuliPicard moduli_from(const Json& req) {
  const Lattice pic = resolve_lattice(require(req, "lattice"));
  const MukaiVector v = mukai_from_json(require(req, "v"));
  std::optional<IntMatrix> vperp;
  if (req.contains("vperp")) vperp = matrix_from_json(req["vperp"]);
  return moduli_picard(pic, v, vperp);
}

Json moduli_json(const ModuliPicard& m) {
  Json j;
  j["pic_s"] = lattice_to_json(m.pic_s);
  j["v"] = mukai_to_json(m.v);
  j["v_square"] = to_json(m.v.square(m.pic_s));
  j["vperp"] = to_json(m.vperp);
  j["frame_gram"] = to_json(m.frame.gram());
  j["picard_gram"] = to_json(m.picard.gram());
  Json basis = Json::array();
  for (const auto& r : m.picard_basis_in_frame) basis.push_back(to_json(r));
  j["picard_basis_in_frame"] = basis;
  j["half_class"] = m.half_class ? to_json(*m.half_class) : Json(nullptr);
  Json s;
  s["coords"] = to_json(m.sigma);
  s["square"] = to_json(m.picard.square(m.sigma));
  s["divisibility"] = to_json(m.picard.ambient_divisibility(m.sigma));
  j["sigma"] = s;
  j["og10_embedding"] = to_json(og10_embedding_certificate(m));
  return j;
}

Json moduli_command(const Json& req) { return moduli_json(moduli_from(req)); }

Json dual_json(const DualWall& d) {
  Json j;
  j["picard_coords"] = to_json(d.d);
  j["frame_coords"] = to_json(d.frame);
  j["square"] = to_json(d.square);
  j["divisibility"] = to_json(d.divisibility);
  j["wall_type"] = std::string(wall_type_info(d.type).name);
  j["is_dual"] = d.is_dual;
  return j;
}

Json curve_class_command(const Json& req) {
  const ModuliPicard m = moduli_from(req);
  const IntVec pairings = intvec_from_json(require(req, "pairings"));
  const RatVector r = curve_class(m, pairings);
  Json j;
  j["pairings"] = to_json(pairings);
  j["curve_class"] = to_json(r);
  j["curve_square"] = to_json(m.frame.square(r));
  try {
    j["dual_wall"] = dual_json(dual_wall_divisor(m, r));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotProportionalToWall) throw;
    j["dual_wall"] = {{"error", std::string(error_code_name(e.code()))}, {"detail", e.what()}};
  }
  return j;
}

Json mz_command(const Json& req) {
  const Lattice pic = resolve_lattice(require(req, "lattice"));
  const MukaiVector v = mukai_from_json(require(req, "v"));
  const IntVec h0 = intvec_from_json(require(req, "h0"));
  const long bound = req.value("bound", 10L);
  const ContractionVerdict cv = mz_contraction_type(pic, v, h0, bound);
  Json j;
  j["v"] = mukai_to_json(v);
  j["h0"] = to_json(h0);
  j["bound"] = bound;
  j["kind"] = std::string(contraction_kind_name(cv.kind));
  j["witness"] = cv.witness ? mukai_to_json(MukaiVector::from_coords(*cv.witness)) : Json(nullptr);
  Json dw = Json::array(), sw = Json::array();
  for (const auto& w : cv.divisorial_witnesses) dw.push_back(to_json(w));
  for (const auto& w : cv.small_witnesses) sw.push_back(to_json(w));
  j["divisorial_witnesses"] = dw;
  j["small_witnesses"] = sw;
  j["search_complete"] = cv.search_complete;
  return j;
}

struct ConeOutput {
  ConeContext ctx;
  ChamberStructure cs;
  Json json;
};

ConeOutput cone_command(const Json& req) {
  ConeContext ctx = resolve_context(req);
  const std::string which = req.value("chamber", std::string("kahler"));
  IntVec ample = req.contains("ample") ? intvec_from_json(req["ample"]) : ctx.positive_ray_hint;
  ChamberStructure cs;
  if (which == "kahler") cs = kahler_chamber(ctx, ample);
  else if (which == "movable") cs = movable_chamber(ctx, ample);
  else throw FrontEndError(OG10_ERR_INVALID_ARGUMENT, "chamber must be kahler or movable");
  Json j;
  j["context"] = ctx.name;
  j["lattice"] = lattice_to_json(ctx.pic);
  j["basis"] = {ctx.basis_names[0], ctx.basis_names[1]};
  j["chamber"] = which;
  j["ample_side"] = to_json(ample);
  j["structure"] = chamber_structure_to_json(cs);
  if (cs.selected) {
    auto [l, r] = cs.chambers[*cs.selected];
    Json b = Json::array();
    for (std::size_t i : {l, r}) b.push_back(ray_label(ctx, cs.rays[i]));
    j["selected_bounds"] = b;
  }
  return {std::move(ctx), std::move(cs), std::move(j)};
}

Json unique_command(const Json& req) {
  const IntMatrix g = matrix_from_json(require(req, "gram"));
  const CompactificationTest t = unique_compactification(g);
  Json j;
  j["gram"] = to_json(g);
  j["k_prime"] = to_json(t.k_prime);
  j["k_prime_square"] = to_json(t.n);
  j["obstruction"] = {{"square", to_json(t.obstruction_square)},
                      {"divisibility", to_json(t.obstruction_divisibility)},
                      {"wall_type", t.wall ? Json(std::string(wall_type_info(*t.wall).name)) : Json(nullptr)}};
  j["congruence_consistent"] = t.congruence_consistent;
  j["hassett_discriminant"] = to_json(t.hassett_discriminant);
  j["unique"] = t.unique;
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

void require_json(const std::string& format, const std::string& name) {
  if (format != "json") {
    throw FrontEndError(OG10_ERR_INVALID_ARGUMENT, "format '" + format + "' is not available for " + name);
  }
}

}  // namespace

std::string run_command(const std::string& name, const Json& request, const std::string& format) {
  if (format != "json" && format != "svg" && format != "csv") {
    throw FrontEndError(OG10_ERR_INVALID_ARGUMENT, "format must be json, svg or csv");
  }
  if (!request.is_object()) throw FrontEndError(OG10_ERR_PARSE, "request must be a JSON object");
  using Handler = Json (*)(const Json&);
  static const std::map<std::string, Handler> simple = {
      {"lattice-info", lattice_info},     {"div", div_command},
      {"orbit-equiv", orbit_equiv},       {"wall-check", wall_check},
      {"pex-check", pex_check},           {"reflection", reflection_command},
      {"moduli-picard", moduli_command},  {"curve-class", curve_class_command},
      {"mz-classify", mz_command},        {"unique-compactification", unique_command},
  };
  if (auto it = simple.find(name); it != simple.end()) {
    require_json(format, name);
    return render_json(it->second(request));
  }
  if (name == "cone") {
    ConeOutput out = cone_command(request);
    if (format == "svg") return render_svg(out.ctx, out.cs, out.ctx.name + " " + out.json["chamber"].get<std::string>());
    if (format == "csv") return render_csv(out.ctx, out.cs);
    return render_json(out.json);
  }
  if (name == "preset") {
    const std::string pname = require(request, "name").get<std::string>();
    PresetResult pr = run_preset(pname);
    if (format == "json") return render_json(pr.json);
    if (!pr.chambers) {
      throw FrontEndError(OG10_ERR_INVALID_ARGUMENT, "preset '" + pname + "' has no diagram output");
    }
    if (format == "svg") return render_svg(*pr.context, *pr.chambers, pname);
    return render_csv(*pr.context, *pr.chambers);
  }
  throw FrontEndError(OG10_ERR_UNKNOWN_COMMAND, "unknown command '" + name + "'");
}

}  // namespace og10::capi
