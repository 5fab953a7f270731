#pragma once

#include <vector>

#include "toricfil/rational.hpp"

namespace toricfil {

enum class Membership { Outside, Boundary, Interior };

// Full-dimensional strongly convex rational cone sigma in N with its dual in M.
// Rays on both sides are primitive and lexicographically sorted, so equality
// of cones is syntactic. The Hilbert basis of the dual semigroup is computed
// once at construction.
class Cone {
 public:
  static Cone make(const std::vector<IntVec>& rays);
  static Cone orthant(int rank);

  int rank() const { return rank_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& dual_rays() const { return dual_rays_; }
  const std::vector<IntVec>& hilbert_basis() const { return hilbert_; }
  // Sum of the rays of sigma, an interior N-vector used for degree bounds.
  const IntVec& interior_weight() const { return u0_; }
  bool is_smooth_orthant() const;

  bool operator==(const Cone& other) const { return rays_ == other.rays_; }
  bool operator!=(const Cone& other) const { return !(*this == other); }

 private:
  int rank_ = 0;
  std::vector<IntVec> rays_;
  std::vector<IntVec> dual_rays_;
  std::vector<IntVec> hilbert_;
  IntVec u0_;
};

std::vector<IntVec> dual_cone(const std::vector<IntVec>& rays);

// Position of an N-vector relative to sigma.
Membership membership(const Cone& cone, const Vec& v);
Membership membership(const Cone& cone, const IntVec& v);
// Position of an M-vector relative to the dual cone.
Membership dual_membership(const Cone& cone, const Vec& m);
bool in_dual(const Cone& cone, const IntVec& m);
bool in_dual(const Cone& cone, const Vec& m);

std::vector<IntVec> hilbert_generators(const Cone& cone);

void require_same_cone(const Cone& a, const Cone& b);

}  // namespace toricfil
