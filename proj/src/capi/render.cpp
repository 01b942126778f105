#include <cmath>
#include <cstdio>
#include <sstream>

#include "internal.hpp"

namespace og10::capi {

namespace {

std::string surd_text(const Surd& s) {
  if (s.is_rational()) return format_rational(s.a);
  std::string out = sgn(s.a) == 0 ? "" : format_rational(s.a);
  const Rational b = s.b;
  if (!out.empty() && sgn(b) > 0) out += "+";
  out += format_rational(b) + "*sqrt(" + s.d.get_str() + ")";
  return out;
}

double to_double(const Surd& s) {
  double v = s.a.get_d();
  if (!s.is_rational()) v += s.b.get_d() * std::sqrt(s.d.get_d());
  return v;
}

Surd cross(const std::array<Surd, 2>& u, const std::array<Surd, 2>& v) {
  return u[0] * v[1] - u[1] * v[0];
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Point {
  double x;
  double y;
};

constexpr double kOrigin = 60.0;
constexpr double kSize = 480.0;
constexpr double kLength = 380.0;

// Position on the slice x + y = 1 in the basis (end boundary, start boundary).
Point slice_point(const ChamberStructure& cs, const Ray& r) {
  const auto& start = cs.rays.front().direction;
  const auto& end = cs.rays.back().direction;
  const Surd x = cross(start, r.direction);
  const Surd y = cross(r.direction, end);
  const Surd total = x + y;
  const double t = to_double(total);
  const double px = to_double(x) / t;
  const double py = to_double(y) / t;
  return {kOrigin + kLength * px, kSize - kOrigin - kLength * py};
}

}  // namespace

std::string class_label(const ConeContext& ctx, const Pair& c) {
  std::string out;
  for (int i = 0; i < 2; ++i) {
    if (sgn(c[i]) == 0) continue;
    const Integer mag = abs(c[i]);
    if (sgn(c[i]) < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (mag != 1) out += mag.get_str();
    out += ctx.basis_names[i];
  }
  return out.empty() ? "0" : out;
}

std::string ray_label(const ConeContext& ctx, const Ray& r) {
  if (r.wall_class) {
    const std::string c = class_label(ctx, *r.wall_class);
    const bool compound = c.find_first_of("+-", 1) != std::string::npos;
    return compound ? "(" + c + ")⊥" : c + "⊥";
  }
  if (r.primitive) return class_label(ctx, *r.primitive);
  return "(" + surd_text(r.direction[0]) + ", " + surd_text(r.direction[1]) + ")";
}

std::string render_svg(const ConeContext& ctx, const ChamberStructure& cs, const std::string& title) {
  std::ostringstream o;
  const std::string size = num(kSize);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
    << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  o << "<title>" << escape(title) << "</title>\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const Point origin{kOrigin, kSize - kOrigin};
  if (cs.selected) {
    auto [l, r] = cs.chambers[*cs.selected];
    const Point a = slice_point(cs, cs.rays[l]);
    const Point b = slice_point(cs, cs.rays[r]);
    o << "<polygon class=\"selected\" points=\"" << num(origin.x) << "," << num(origin.y) << " " << num(a.x)
      << "," << num(a.y) << " " << num(b.x) << "," << num(b.y) << "\" fill=\"#cfe3f7\" stroke=\"none\"/>\n";
  }
  for (std::size_t i = 0; i < cs.rays.size(); ++i) {
    const Ray& r = cs.rays[i];
    const Point p = slice_point(cs, r);
    const bool axis = r.kind == RayKind::IsotropicBoundary;
    const char* style = axis ? "stroke=\"black\" stroke-width=\"2\""
                        : r.kind == RayKind::PexWall ? "stroke=\"#b03030\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\""
                                                     : "stroke=\"#b03030\" stroke-width=\"1.5\"";
    o << "<line class=\"" << (axis ? "axis" : "wall") << "\" x1=\"" << num(origin.x) << "\" y1=\""
      << num(origin.y) << "\" x2=\"" << num(p.x) << "\" y2=\"" << num(p.y) << "\" " << style << "/>\n";
    std::string label = ray_label(ctx, r);
    if (r.wall_class) label += " q=" + r.square.get_str() + " div " + r.divisibility.get_str();
    o << "<text x=\"" << num(p.x + 6) << "\" y=\"" << num(p.y - 6)
      << "\" font-family=\"sans-serif\" font-size=\"13\">" << escape(label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string render_csv(const ConeContext& ctx, const ChamberStructure& cs) {
  (void)ctx;
  std::ostringstream o;
  o << "index,kind,x,y,class_x,class_y,square,divisibility\n";
  for (std::size_t i = 0; i < cs.rays.size(); ++i) {
    const Ray& r = cs.rays[i];
    o << i << "," << ray_kind_name(r.kind) << ",";
    if (r.primitive) o << (*r.primitive)[0].get_str() << "," << (*r.primitive)[1].get_str();
    else o << surd_text(r.direction[0]) << "," << surd_text(r.direction[1]);
    if (r.wall_class) {
      o << "," << (*r.wall_class)[0].get_str() << "," << (*r.wall_class)[1].get_str() << ","
        << r.square.get_str() << "," << r.divisibility.get_str() << "\n";
    } else {
      o << ",,,,\n";
    }
  }
  return o.str();
}

}  // namespace og10::capi
