#include "toricfil/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "toricfil/error.hpp"

namespace toricfil::io {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json to_json(const IntVec& v) {
  Json j = Json::array();
  for (long long x : v) j.push_back(x);
  return j;
}

Json to_json(const Cone& c) {
  Json rays = Json::array();
  for (const auto& r : c.rays()) rays.push_back(to_json(r));
  return Json{{"rank", c.rank()}, {"rays", rays}};
}

Json to_json(const CoboundedRegion& p) {
  Json hs = Json::array();
  for (const auto& h : p.halfspaces()) hs.push_back(Json{{"normal", to_json(to_vec(h.normal))}, {"bound", to_json(h.bound)}});
  return Json{{"cone", to_json(p.cone())}, {"halfspaces", hs}};
}

Json to_json(const MonomialIdeal& a) {
  Json gens = Json::array();
  for (const auto& g : a.generators()) gens.push_back(to_json(g));
  return Json{{"cone", to_json(a.cone())}, {"generators", gens}};
}

Json to_json(const Filtration& f) {
  if (const auto* s = std::get_if<SaturatedFiltration>(&f)) return Json{{"type", "saturated"}, {"region", to_json(s->region)}};
  const auto& a = std::get<AdicFiltration>(f);
  return Json{{"type", "adic"}, {"ideal", to_json(a.ideal)}, {"speed", to_json(a.speed)}};
}

Json to_json(const ToricSingularity& s) { return Json{{"cone", to_json(s.cone())}, {"k", to_json(s.k())}}; }

Json to_json(const std::vector<ReesValuation>& rees) {
  Json j = Json::array();
  for (const auto& r : rees) j.push_back(Json{{"u", to_json(r.u)}, {"value", to_json(r.value)}});
  return j;
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("object expected around \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

// Rejects fields outside the allowed set so typos do not pass silently.
void only_fields(const Json& j, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : keys) ok = ok || it.key() == k;
    if (!ok) fail("unexpected field \"" + it.key() + "\"");
  }
}

IntVec intvec_from_json(const Json& j) {
  if (!j.is_array()) fail("integer array expected");
  IntVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail("integer expected, got " + x.dump());
    v.push_back(x.get<long long>());
  }
  return v;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) fail("rational array expected");
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return rat(j.get<long long>());
  fail("rational \"p/q\" expected, got " + j.dump());
}

Cone cone_from_json(const Json& j) {
  only_fields(j, {"rank", "rays"});
  const Json& r = field(j, "rank");
  if (!r.is_number_integer()) fail("rank must be an integer");
  const long long rank = r.get<long long>();
  std::vector<IntVec> rays;
  const Json& arr = field(j, "rays");
  if (!arr.is_array()) fail("rays must be an array");
  for (const auto& x : arr) {
    rays.push_back(intvec_from_json(x));
    if (static_cast<long long>(rays.back().size()) != rank)
      throw Error(ErrorKind::DimensionMismatch, "ray length differs from rank");
  }
  return Cone::make(rays);
}

CoboundedRegion region_from_json(const Json& j) {
  only_fields(j, {"cone", "halfspaces"});
  Cone cone = cone_from_json(field(j, "cone"));
  std::vector<Halfspace> hs;
  const Json& arr = field(j, "halfspaces");
  if (!arr.is_array()) fail("halfspaces must be an array");
  for (const auto& h : arr) {
    only_fields(h, {"normal", "bound"});
    Vec normal = vec_from_json(field(h, "normal"));
    if (static_cast<int>(normal.size()) != cone.rank()) throw Error(ErrorKind::DimensionMismatch, "normal length");
    hs.push_back(Halfspace::make(normal, rational_from_json(field(h, "bound"))));
  }
  return CoboundedRegion::make(cone, hs);
}

MonomialIdeal ideal_from_json(const Json& j) {
  only_fields(j, {"cone", "generators"});
  Cone cone = cone_from_json(field(j, "cone"));
  std::vector<IntVec> gens;
  const Json& arr = field(j, "generators");
  if (!arr.is_array()) fail("generators must be an array");
  for (const auto& g : arr) gens.push_back(intvec_from_json(g));
  return MonomialIdeal::make(cone, gens);
}

Filtration filtration_from_json(const Json& j) {
  const Json& t = field(j, "type");
  if (t == "saturated") {
    only_fields(j, {"type", "region"});
    return SaturatedFiltration{region_from_json(field(j, "region"))};
  }
  if (t == "adic") {
    only_fields(j, {"type", "ideal", "speed"});
    return AdicFiltration::make(ideal_from_json(field(j, "ideal")), rational_from_json(field(j, "speed")));
  }
  fail("filtration type must be \"saturated\" or \"adic\"");
}

ToricSingularity singularity_from_json(const Json& j) {
  only_fields(j, {"cone", "k"});
  auto s = ToricSingularity::make(cone_from_json(field(j, "cone")));
  // k is derived from the cone; a supplied value must agree with it.
  if (j.contains("k") && vec_from_json(j["k"]) != s.k())
    throw Error(ErrorKind::ValidationError, "k does not match the Gorenstein vector of the cone");
  return s;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json(const std::string& path_or_inline) {
  if (!path_or_inline.empty() && path_or_inline.front() == '{') return parse_json(path_or_inline);
  std::ifstream in(path_or_inline);
  if (!in) fail("cannot open " + path_or_inline);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json schemas() {
  const Json rational = {{"type", "string"}, {"pattern", "^-?[0-9]+(/[0-9]+)?$"}};
  const Json intvec = {{"type", "array"}, {"items", {{"type", "integer"}}}};
  const Json cone = {{"type", "object"},
                     {"required", {"rank", "rays"}},
                     {"additionalProperties", false},
                     {"properties", {{"rank", {{"type", "integer"}, {"minimum", 1}}},
                                     {"rays", {{"type", "array"}, {"items", intvec}}}}}};
  const Json region = {
      {"type", "object"},
      {"required", {"cone", "halfspaces"}},
      {"additionalProperties", false},
      {"properties",
       {{"cone", {{"$ref", "#/cone"}}},
        {"halfspaces",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required", {"normal", "bound"}},
            {"additionalProperties", false},
            {"properties", {{"normal", {{"type", "array"}, {"items", rational}}}, {"bound", rational}}}}}}}}}};
  const Json ideal = {{"type", "object"},
                      {"required", {"cone", "generators"}},
                      {"additionalProperties", false},
                      {"properties", {{"cone", {{"$ref", "#/cone"}}}, {"generators", {{"type", "array"}, {"items", intvec}}}}}};
  const Json filtration = {
      {"oneOf",
       {{{"type", "object"},
         {"required", {"type", "region"}},
         {"properties", {{"type", {{"const", "saturated"}}}, {"region", {{"$ref", "#/region"}}}}}},
        {{"type", "object"},
         {"required", {"type", "ideal", "speed"}},
         {"properties", {{"type", {{"const", "adic"}}}, {"ideal", {{"$ref", "#/ideal"}}}, {"speed", rational}}}}}}};
  const Json singularity = {{"type", "object"},
                            {"required", {"cone"}},
                            {"properties", {{"cone", {{"$ref", "#/cone"}}}, {"k", {{"type", "array"}, {"items", rational}}}}}};
  return Json{{"rational", rational}, {"cone", cone},         {"region", region},
              {"ideal", ideal},       {"filtration", filtration}, {"singularity", singularity}};
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

// Maps dual coordinates in [lo, hi]^2 to the canvas, y pointing up.
struct Frame {
  SvgCanvas c;
  double lo, hi;
  std::string x(double v) const { return fmt(c.margin + (v - lo) / (hi - lo) * (c.width - 2 * c.margin)); }
  std::string y(double v) const { return fmt(c.height - c.margin - (v - lo) / (hi - lo) * (c.height - 2 * c.margin)); }
};

void require_rank2(const Cone& cone) {
  if (cone.rank() != 2) throw Error(ErrorKind::UnsupportedRank, "SVG output needs rank 2; use CSV for higher ranks");
}

long long default_window(const CoboundedRegion& p) {
  Rational m = 1;
  for (const auto& v : p.vertices())
    for (const auto& x : v) m = std::max(m, Rational(abs(x)));
  return ceil_ll(m * Rational(3, 2)) + 1;
}

// Clips the polygon to [-w, w]^2 (Sutherland-Hodgman on the four sides).
std::vector<Vec> clip(std::vector<Vec> poly, const Rational& w) {
  for (int side = 0; side < 4; ++side) {
    const int axis = side / 2;
    const Rational bound = side % 2 ? -w : w;
    auto inside = [&](const Vec& p) { return side % 2 ? p[axis] >= bound : p[axis] <= bound; };
    std::vector<Vec> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Vec& a = poly[i];
      const Vec& b = poly[(i + 1) % poly.size()];
      if (inside(a)) out.push_back(a);
      if (inside(a) != inside(b)) {
        Rational s = (bound - a[axis]) / (b[axis] - a[axis]);
        out.push_back(add(a, scale(sub(b, a), s)));
      }
    }
    poly = std::move(out);
  }
  return poly;
}

std::string polygon(const Frame& f, const std::vector<Vec>& pts, const char* style) {
  std::string s = "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += f.x(to_double(pts[i][0])) + "," + f.y(to_double(pts[i][1]));
  }
  return s + "\" " + style + "/>\n";
}

Rational cross(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Dual rays ordered counterclockwise.
std::pair<Vec, Vec> oriented_rays(const Cone& cone) {
  Vec r0 = to_vec(cone.dual_rays()[0]), r1 = to_vec(cone.dual_rays()[1]);
  if (cross(r0, r1) < 0) std::swap(r0, r1);
  return {r0, r1};
}

// P clipped to the window: the vertex chain closed far out along both rays.
std::vector<Vec> region_polygon(const CoboundedRegion& p, const Rational& w) {
  auto [r0, r1] = oriented_rays(p.cone());
  auto verts = p.vertices();
  std::sort(verts.begin(), verts.end(), [](const Vec& a, const Vec& b) { return cross(a, b) > 0; });
  const Rational far = 4 * w;
  std::vector<Vec> poly{add(verts.front(), scale(r0, far))};
  poly.insert(poly.end(), verts.begin(), verts.end());
  poly.push_back(add(verts.back(), scale(r1, far)));
  poly.push_back(add(scale(r0, far), scale(r1, far)));
  return clip(poly, w);
}

std::string svg_body(const CoboundedRegion& p, const SvgCanvas& canvas, long long window, Frame& frame) {
  frame = Frame{canvas, 0, static_cast<double>(window)};
  bool negative = false;
  for (const auto& r : p.cone().dual_rays())
    for (long long x : r) negative = negative || x < 0;
  if (negative) frame.lo = -static_cast<double>(window);
  const Rational w = rat(window);
  auto [r0, r1] = oriented_rays(p.cone());
  std::vector<Vec> cone_poly{Vec{0, 0}, scale(r0, 4 * w), add(scale(r0, 4 * w), scale(r1, 4 * w)), scale(r1, 4 * w)};
  std::string s;
  s += polygon(frame, clip(cone_poly, w), "fill=\"none\" stroke=\"black\" stroke-width=\"1\"");
  s += polygon(frame, region_polygon(p, w), "fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#08519c\" stroke-width=\"1.5\"");
  return s;
}

std::string header(const SvgCanvas& c) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(c.width) + "\" height=\"" +
         std::to_string(c.height) + "\" viewBox=\"0 0 " + std::to_string(c.width) + " " + std::to_string(c.height) +
         "\">\n";
}

}  // namespace

std::string emit_svg(const CoboundedRegion& p, const SvgCanvas& canvas) {
  require_rank2(p.cone());
  const long long window = canvas.window > 0 ? canvas.window : default_window(p);
  Frame frame;
  std::string s = header(canvas) + svg_body(p, canvas, window, frame);
  return s + "</svg>\n";
}

std::string emit_svg(const MonomialIdeal& a, const SvgCanvas& canvas) {
  require_rank2(a.cone());
  const auto newt = newton_polyhedron(a);
  const long long window = canvas.window > 0 ? canvas.window : default_window(newt);
  Frame frame;
  std::string s = header(canvas) + svg_body(newt, canvas, window, frame);
  const long long lo = frame.lo < 0 ? -window : 0;
  for (long long i = lo; i <= window; ++i)
    for (long long j = lo; j <= window; ++j) {
      IntVec m{i, j};
      if (!in_dual(a.cone(), m)) continue;
      const bool outside = !a.contains(m);
      s += "<circle cx=\"" + frame.x(static_cast<double>(i)) + "\" cy=\"" + frame.y(static_cast<double>(j)) +
           "\" r=\"2.0000\" fill=\"" + (outside ? "#d62728" : "#bbbbbb") + "\"/>\n";
    }
  return s + "</svg>\n";
}

std::string dh_grid_csv(const DHGrid& grid) {
  std::string s = "x,y,U\n";
  for (std::size_t i = 0; i <= grid.count; ++i)
    for (std::size_t j = 0; j <= grid.count; ++j)
      s += to_string(grid.step * rat(static_cast<long long>(i))) + "," + to_string(grid.step * rat(static_cast<long long>(j))) +
           "," + to_string(grid.values[i][j]) + "\n";
  return s;
}

std::string geodesic_profile_csv(const std::vector<GeodesicProfileRow>& rows) {
  std::string s = "t,e_lower,e_upper\n";
  for (const auto& r : rows) s += to_string(r.t) + "," + to_string(r.e.lo) + "," + to_string(r.e.hi) + "\n";
  return s;
}

}  // namespace toricfil::io
