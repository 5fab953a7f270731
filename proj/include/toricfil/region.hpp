#pragma once

#include <vector>

#include "toricfil/cone.hpp"
#include "toricfil/rational.hpp"

namespace toricfil {

// {m : <m, normal> >= bound}; normal primitive in sigma, bound > 0.
struct Halfspace {
  IntVec normal;
  Rational bound;

  // Rescales a rational normal to primitive integral form, adjusting the bound.
  static Halfspace make(const Vec& normal, const Rational& bound);
  bool operator==(const Halfspace& o) const { return normal == o.normal && bound == o.bound; }
  bool operator<(const Halfspace& o) const {
    return normal != o.normal ? normal < o.normal : bound < o.bound;
  }
};

// Closed convex P inside the dual cone with bounded complement, stored as an
// irredundant H-representation together with its vertex set.
class CoboundedRegion {
 public:
  static CoboundedRegion make(const Cone& cone, std::vector<Halfspace> halfspaces);
  // conv(points) + dual cone.
  static CoboundedRegion from_points(const Cone& cone, const std::vector<Vec>& points);

  const Cone& cone() const { return cone_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  // Largest vertex degree against the cone's interior weight; the complement
  // of lambda*P lies in {<m,u0> <= lambda * max_degree()}.
  const Rational& max_degree() const { return max_degree_; }
  bool contains(const Vec& m) const;
  bool contains(const IntVec& m) const;

  bool operator==(const CoboundedRegion& o) const {
    return cone_ == o.cone_ && halfspaces_ == o.halfspaces_;
  }
  bool operator!=(const CoboundedRegion& o) const { return !(*this == o); }

 private:
  Cone cone_;
  std::vector<Halfspace> halfspaces_;
  std::vector<Vec> vertices_;
  Rational max_degree_;
};

const std::vector<Vec>& vrep(const CoboundedRegion& p);
Rational support_value(const CoboundedRegion& p, const Vec& u);
Rational support_value(const CoboundedRegion& p, const IntVec& u);
Rational cogauge(const CoboundedRegion& p, const Vec& m);
Rational cogauge(const CoboundedRegion& p, const IntVec& m);
CoboundedRegion meet(const CoboundedRegion& p, const CoboundedRegion& q);
CoboundedRegion hull_join(const CoboundedRegion& p, const CoboundedRegion& q);
Rational covolume(const CoboundedRegion& p);
CoboundedRegion scale_region(const CoboundedRegion& p, const Rational& c);
bool is_subset(const CoboundedRegion& p, const CoboundedRegion& q);

// The linear forms u_i / c_i whose minimum is the co-gauge.
std::vector<Vec> cogauge_forms(const CoboundedRegion& p);

// Pulling triangulation of the face spanned by `face` (indices into `points`)
// of a polytope cut out by `constraints` (<x, a> >= b), of affine dimension dim.
struct LinearConstraint {
  Vec normal;
  Rational bound;
};
std::vector<std::vector<std::size_t>> triangulate_face(const std::vector<Vec>& points,
                                                       const std::vector<LinearConstraint>& constraints,
                                                       const std::vector<std::size_t>& face, int dim);

Rational factorial(int n);

}  // namespace toricfil
