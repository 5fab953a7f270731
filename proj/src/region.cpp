#include "toricfil/region.hpp"

#include <algorithm>
#include <map>

#include "toricfil/error.hpp"
#include "toricfil/linalg.hpp"

namespace toricfil {

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Halfspace Halfspace::make(const Vec& normal, const Rational& bound) {
  if (is_zero(normal)) throw Error(ErrorKind::ValidationError, "zero halfspace normal");
  Rational f = primitive_factor(normal);
  return {to_intvec(scale(normal, f)), bound * f};
}

namespace {

std::vector<LinearConstraint> all_constraints(const Cone& cone, const std::vector<Halfspace>& hs) {
  std::vector<LinearConstraint> out;
  for (const auto& r : cone.rays()) out.push_back({to_vec(r), Rational(0)});
  for (const auto& h : hs) out.push_back({to_vec(h.normal), h.bound});
  return out;
}

}  // namespace

CoboundedRegion CoboundedRegion::make(const Cone& cone, std::vector<Halfspace> hs) {
  const int n = cone.rank();
  if (hs.empty()) throw Error(ErrorKind::ValidationError, "region needs at least one halfspace");
  for (const auto& h : hs) {
    if (static_cast<int>(h.normal.size()) != n)
      throw Error(ErrorKind::DimensionMismatch, "halfspace normal has wrong length");
    if (h.bound <= 0) throw Error(ErrorKind::ValidationError, "halfspace bound must be positive");
    const Membership where = membership(cone, h.normal);
    if (where == Membership::Outside)
      throw Error(ErrorKind::NormalOutsideCone, "halfspace normal " + to_string(h.normal) + " not in sigma");
    // A boundary normal pairs to zero with some dual ray, which then never enters P.
    if (where == Membership::Boundary)
      throw Error(ErrorKind::NotCobounded, "normal " + to_string(h.normal) + " on the boundary of sigma");
  }
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  // Same primitive normal: only the largest bound matters.
  std::vector<Halfspace> strongest;
  for (const auto& h : hs) {
    if (!strongest.empty() && strongest.back().normal == h.normal)
      strongest.back() = h;
    else
      strongest.push_back(h);
  }
  hs = std::move(strongest);

  auto cons = all_constraints(cone, hs);
  Matrix a;
  Vec b;
  for (const auto& c : cons) a.push_back(c.normal), b.push_back(c.bound);
  auto vr = vertex_enumeration(a, b);

  std::vector<Halfspace> kept;
  for (const auto& h : hs) {
    std::vector<Vec> tight;
    for (const auto& v : vr.vertices)
      if (dot(v, h.normal) == h.bound) tight.push_back(v);
    if (affine_dimension(tight) == n - 1) kept.push_back(h);
  }

  CoboundedRegion p;
  p.cone_ = cone;
  p.halfspaces_ = std::move(kept);
  p.vertices_ = std::move(vr.vertices);
  p.max_degree_ = 0;
  for (const auto& v : p.vertices_) p.max_degree_ = std::max(p.max_degree_, dot(v, cone.interior_weight()));
  return p;
}

CoboundedRegion CoboundedRegion::from_points(const Cone& cone, const std::vector<Vec>& points) {
  if (points.empty()) throw Error(ErrorKind::ValidationError, "no points");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != cone.rank()) throw Error(ErrorKind::DimensionMismatch, "point length");
    if (!in_dual(cone, p) || is_zero(p))
      throw Error(ErrorKind::PointOutsideDualCone, "point " + to_string(p) + " not in the dual cone minus 0");
  }
  std::vector<Vec> rays;
  for (const auto& r : cone.dual_rays()) rays.push_back(to_vec(r));
  std::vector<Halfspace> hs;
  for (const auto& f : facets_of_hull(points, rays))
    if (f.bound > 0) hs.push_back(Halfspace::make(f.normal, f.bound));
  return make(cone, hs);
}

bool CoboundedRegion::contains(const Vec& m) const {
  if (!in_dual(cone_, m)) return false;
  for (const auto& h : halfspaces_)
    if (dot(m, h.normal) < h.bound) return false;
  return true;
}

bool CoboundedRegion::contains(const IntVec& m) const { return contains(to_vec(m)); }

const std::vector<Vec>& vrep(const CoboundedRegion& p) { return p.vertices(); }

Rational support_value(const CoboundedRegion& p, const Vec& u) {
  if (static_cast<int>(u.size()) != p.cone().rank()) throw Error(ErrorKind::DimensionMismatch, "u length");
  if (is_zero(u) || membership(p.cone(), u) == Membership::Outside)
    throw Error(ErrorKind::NormalOutsideCone, "u = " + to_string(u) + " not in sigma minus 0");
  Rational best = dot(p.vertices().front(), u);
  for (const auto& v : p.vertices()) best = std::min(best, dot(v, u));
  return best;
}

Rational support_value(const CoboundedRegion& p, const IntVec& u) { return support_value(p, to_vec(u)); }

Rational cogauge(const CoboundedRegion& p, const Vec& m) {
  if (static_cast<int>(m.size()) != p.cone().rank()) throw Error(ErrorKind::DimensionMismatch, "m length");
  if (is_zero(m) || !in_dual(p.cone(), m))
    throw Error(ErrorKind::PointOutsideDualCone, "m = " + to_string(m) + " not in the dual cone minus 0");
  const auto& hs = p.halfspaces();
  Rational best = dot(m, hs.front().normal) / hs.front().bound;
  for (const auto& h : hs) best = std::min(best, Rational(dot(m, h.normal) / h.bound));
  return best;
}

Rational cogauge(const CoboundedRegion& p, const IntVec& m) { return cogauge(p, to_vec(m)); }

std::vector<Vec> cogauge_forms(const CoboundedRegion& p) {
  std::vector<Vec> out;
  for (const auto& h : p.halfspaces()) out.push_back(scale(to_vec(h.normal), 1 / h.bound));
  return out;
}

CoboundedRegion meet(const CoboundedRegion& p, const CoboundedRegion& q) {
  require_same_cone(p.cone(), q.cone());
  auto hs = p.halfspaces();
  hs.insert(hs.end(), q.halfspaces().begin(), q.halfspaces().end());
  return CoboundedRegion::make(p.cone(), hs);
}

CoboundedRegion hull_join(const CoboundedRegion& p, const CoboundedRegion& q) {
  require_same_cone(p.cone(), q.cone());
  auto pts = p.vertices();
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  return CoboundedRegion::from_points(p.cone(), pts);
}

CoboundedRegion scale_region(const CoboundedRegion& p, const Rational& c) {
  if (c <= 0) throw Error(ErrorKind::NonpositiveScale, "scale must be positive");
  auto hs = p.halfspaces();
  for (auto& h : hs) h.bound *= c;
  return CoboundedRegion::make(p.cone(), hs);
}

bool is_subset(const CoboundedRegion& p, const CoboundedRegion& q) {
  require_same_cone(p.cone(), q.cone());
  for (const auto& v : p.vertices())
    if (!q.contains(v)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> triangulate_face(const std::vector<Vec>& points,
                                                       const std::vector<LinearConstraint>& constraints,
                                                       const std::vector<std::size_t>& face, int dim) {
  if (dim == 0) return {{face.front()}};
  std::size_t apex = face.front();
  for (auto i : face)
    if (lex_less(points[i], points[apex])) apex = i;
  std::vector<std::vector<std::size_t>> facets;
  for (const auto& c : constraints) {
    std::vector<std::size_t> tight;
    for (auto i : face)
      if (dot(points[i], c.normal) == c.bound) tight.push_back(i);
    if (tight.size() == face.size() || tight.empty()) continue;
    std::vector<Vec> pts;
    for (auto i : tight) pts.push_back(points[i]);
    if (affine_dimension(pts) != dim - 1) continue;
    facets.push_back(std::move(tight));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : facets) {
    if (std::find(f.begin(), f.end(), apex) != f.end()) continue;
    for (auto s : triangulate_face(points, constraints, f, dim - 1)) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Rational covolume(const CoboundedRegion& p) {
  const int n = p.cone().rank();
  const auto& verts = p.vertices();
  auto cons = all_constraints(p.cone(), p.halfspaces());
  Rational total = 0;
  // The complement is the union of the cones from the origin over the bounded facets.
  for (const auto& h : p.halfspaces()) {
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (dot(verts[i], h.normal) == h.bound) face.push_back(i);
    for (const auto& simplex : triangulate_face(verts, cons, face, n - 1)) {
      Matrix m;
      for (auto i : simplex) m.push_back(verts[i]);
      total += abs(det(m));
    }
  }
  return total / factorial(n);
}

}  // namespace toricfil
