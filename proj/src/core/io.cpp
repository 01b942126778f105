#include "og10/io.hpp"

#include "og10/error.hpp"

namespace og10 {

namespace {

constexpr long long kSafeInteger = 9007199254740991LL;  // 2^53 - 1

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p() && abs(x) <= Integer(std::to_string(kSafeInteger))) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Rational& q) { return Json(format_rational(q)); }

Json to_json(std::span<const Integer> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + j.dump());
}

IntVec intvec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "expected an integer array, got " + j.dump());
  IntVec v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

RatVector ratvec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "expected a rational array, got " + j.dump());
  RatVector v;
  for (const auto& x : j) {
    if (x.is_string()) v.push_back(parse_rational(x.get<std::string>()));
    else v.emplace_back(integer_from_json(x));
  }
  return v;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "expected a matrix (array of rows)");
  std::vector<IntVec> rows;
  for (const auto& r : j) rows.push_back(intvec_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return IntMatrix::from_rows(rows, cols);
}

Json lattice_to_json(const Lattice& l) {
  Json j;
  j["label"] = l.label();
  j["gram"] = to_json(l.gram());
  if (!l.u_planes().empty()) {
    Json planes = Json::array();
    for (auto [e, f] : l.u_planes()) planes.push_back({e, f});
    j["u_planes"] = planes;
  }
  if (l.og10_embedding()) j["og10_embedding"] = to_json(*l.og10_embedding());
  return j;
}

Lattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram")) {
    throw Error(ErrorCode::InvalidArgument, "lattice JSON needs a \"gram\" field");
  }
  Lattice l = Lattice::make(matrix_from_json(j["gram"]), j.value("label", std::string{}));
  if (j.contains("u_planes")) {
    std::vector<HyperbolicPlane> planes;
    for (const auto& p : j["u_planes"]) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::InvalidArgument, "u_planes entries are pairs");
      planes.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    l = l.with_u_planes(std::move(planes));
  }
  if (j.contains("og10_embedding")) l = l.with_og10_embedding(matrix_from_json(j["og10_embedding"]));
  return l;
}

Json class_to_json(const Lattice& l, std::span<const Integer> coords) {
  Json j;
  j["lattice"] = l.label();
  j["coords"] = to_json(coords);
  return j;
}

Json signature_to_json(const Signature& s) { return Json::array({s.positive, s.negative}); }

Json discriminant_to_json(const DiscriminantGroup& g, const Lattice& l) {
  Json j;
  j["invariant_factors"] = to_json(g.invariant_factors);
  j["order"] = to_json(g.order());
  Json lifts = Json::array();
  for (const auto& lift : g.generator_lifts) lifts.push_back(to_json(lift));
  j["generator_lifts"] = lifts;
  j["generator_values"] = to_json(g.generator_values);
  (void)l;
  return j;
}

Json disc_element_to_json(const DiscElement& e) { return to_json(e.components); }

Json mukai_to_json(const MukaiVector& v) {
  Json j;
  j["r"] = to_json(v.r);
  j["c"] = to_json(v.c);
  j["s"] = to_json(v.s);
  return j;
}

MukaiVector mukai_from_json(const Json& j) {
  if (j.is_array()) return MukaiVector::from_coords(intvec_from_json(j));
  if (!j.is_object() || !j.contains("r") || !j.contains("c") || !j.contains("s")) {
    throw Error(ErrorCode::InvalidArgument, "Mukai vector needs r, c, s");
  }
  return {integer_from_json(j["r"]), intvec_from_json(j["c"]), integer_from_json(j["s"])};
}

Json surd_to_json(const Surd& s) {
  if (s.is_rational()) return to_json(s.a);
  Json j;
  j["a"] = to_json(s.a);
  j["b"] = to_json(s.b);
  j["sqrt"] = to_json(s.d);
  return j;
}

Json ray_to_json(const Ray& r) {
  Json j;
  j["kind"] = std::string(ray_kind_name(r.kind));
  if (r.primitive) {
    j["direction"] = to_json(std::span<const Integer>(r.primitive->data(), 2));
  } else {
    j["direction"] = Json::array({surd_to_json(r.direction[0]), surd_to_json(r.direction[1])});
  }
  if (r.wall_class) {
    j["class"] = to_json(std::span<const Integer>(r.wall_class->data(), 2));
    j["square"] = to_json(r.square);
    j["divisibility"] = to_json(r.divisibility);
    j["wall_type"] = std::string(wall_type_info(*r.wall_type).name);
  }
  return j;
}

Json chamber_structure_to_json(const ChamberStructure& cs) {
  Json j;
  Json rays = Json::array();
  for (const auto& r : cs.rays) rays.push_back(ray_to_json(r));
  j["rays"] = rays;
  Json ch = Json::array();
  for (auto [a, b] : cs.chambers) ch.push_back({a, b});
  j["chambers"] = ch;
  j["selected"] = cs.selected ? Json(*cs.selected) : Json(nullptr);
  j["complete"] = cs.complete;
  return j;
}

}  // namespace og10
