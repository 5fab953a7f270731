#include "toricfil/cone.hpp"

#include <algorithm>
#include <numeric>

#include "toricfil/error.hpp"
#include "toricfil/linalg.hpp"

namespace toricfil {

namespace {

std::vector<IntVec> sorted_primitive(const std::vector<IntVec>& v) {
  std::vector<IntVec> out;
  for (const auto& x : v) out.push_back(primitive(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate_generators(const std::vector<IntVec>& rays, std::size_t& n) {
  if (rays.empty()) throw Error(ErrorKind::NotFullDimensional, "no rays");
  n = rays[0].size();
  if (n == 0) throw Error(ErrorKind::NotFullDimensional, "rank zero");
  Matrix m;
  for (const auto& r : rays) {
    if (r.size() != n) throw Error(ErrorKind::DimensionMismatch, "rays of different lengths");
    m.push_back(to_vec(r));
  }
  if (rank(m) < n) throw Error(ErrorKind::NotFullDimensional, "rays do not span");
}

// Brute enumeration of the lattice points in the box spanned by the zonotope
// sum_j [0,1] r_j, filtered to the dual cone and swept by degree.
std::vector<IntVec> compute_hilbert(const std::vector<IntVec>& dual, const std::vector<IntVec>& rays,
                                    const IntVec& u0) {
  const std::size_t n = dual[0].size();
  IntVec lo(n, 0), hi(n, 0);
  for (const auto& r : dual)
    for (std::size_t k = 0; k < n; ++k) (r[k] < 0 ? lo[k] : hi[k]) += r[k];
  auto inside = [&](const IntVec& m) {
    for (const auto& r : rays)
      if (dot(m, r) < 0) return false;
    return true;
  };
  long long max_degree = 0;
  for (const auto& r : dual) max_degree += dot(r, u0);
  std::vector<IntVec> candidates;
  IntVec m = lo;
  while (true) {
    if (inside(m)) {
      long long deg = dot(m, u0);
      if (deg > 0 && deg <= max_degree) candidates.push_back(m);
    }
    std::size_t k = 0;
    while (k < n && m[k] == hi[k]) m[k] = lo[k], ++k;
    if (k == n) break;
    ++m[k];
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](const IntVec& a, const IntVec& b) {
    long long da = dot(a, u0), db = dot(b, u0);
    return da != db ? da < db : a < b;
  });
  std::vector<IntVec> basis;
  for (const auto& c : candidates) {
    bool reducible = false;
    for (const auto& h : basis)
      if (inside(sub(c, h))) {
        reducible = true;
        break;
      }
    if (!reducible) basis.push_back(c);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace

std::vector<IntVec> dual_cone(const std::vector<IntVec>& rays) {
  std::size_t n = 0;
  validate_generators(rays, n);
  Matrix rows;
  for (const auto& r : rays) rows.push_back(to_vec(r));
  std::vector<Vec> ext;
  try {
    ext = extreme_rays(rows, n);
  } catch (const Error&) {
    throw Error(ErrorKind::NotFullDimensional, "dual cone has a lineality space");
  }
  std::vector<IntVec> out;
  for (const auto& e : ext) out.push_back(to_intvec(e));
  out = sorted_primitive(out);
  // sigma is strongly convex iff its dual is full-dimensional.
  Matrix dm;
  for (const auto& d : out) dm.push_back(to_vec(d));
  if (rank(dm) < n) throw Error(ErrorKind::NotStronglyConvex, "cone contains a line");
  return out;
}

Cone Cone::make(const std::vector<IntVec>& rays_in) {
  std::size_t n = 0;
  validate_generators(rays_in, n);
  Cone c;
  c.rank_ = static_cast<int>(n);
  c.dual_rays_ = dual_cone(rays_in);
  // Keep only the extreme rays of sigma (the dual of the dual).
  c.rays_ = dual_cone(c.dual_rays_);
  c.u0_ = IntVec(n, 0);
  for (const auto& r : c.rays_) c.u0_ = add(c.u0_, r);
  c.hilbert_ = compute_hilbert(c.dual_rays_, c.rays_, c.u0_);
  return c;
}

Cone Cone::orthant(int rank) {
  std::vector<IntVec> rays;
  for (int i = 0; i < rank; ++i) {
    IntVec e(rank, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  return make(rays);
}

bool Cone::is_smooth_orthant() const {
  if (static_cast<int>(rays_.size()) != rank_) return false;
  for (const auto& r : rays_) {
    long long s = 0;
    for (auto x : r) {
      if (x != 0 && x != 1) return false;
      s += x;
    }
    if (s != 1) return false;
  }
  return true;
}

namespace {
template <typename V, typename Gens>
Membership classify(const V& v, const Gens& gens, std::size_t n) {
  if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector length differs from cone rank");
  bool boundary = false;
  for (const auto& g : gens) {
    Rational s = dot(v, to_vec(g));
    if (s < 0) return Membership::Outside;
    if (s == 0) boundary = true;
  }
  return boundary ? Membership::Boundary : Membership::Interior;
}
}  // namespace

Membership membership(const Cone& cone, const Vec& v) { return classify(v, cone.dual_rays(), cone.rank()); }
Membership membership(const Cone& cone, const IntVec& v) { return membership(cone, to_vec(v)); }
Membership dual_membership(const Cone& cone, const Vec& m) { return classify(m, cone.rays(), cone.rank()); }

bool in_dual(const Cone& cone, const IntVec& m) {
  for (const auto& r : cone.rays())
    if (dot(m, r) < 0) return false;
  return true;
}

bool in_dual(const Cone& cone, const Vec& m) { return dual_membership(cone, m) != Membership::Outside; }

std::vector<IntVec> hilbert_generators(const Cone& cone) { return cone.hilbert_basis(); }

void require_same_cone(const Cone& a, const Cone& b) {
  if (a != b) throw Error(ErrorKind::ConeMismatch, "operands live on different cones");
}

}  // namespace toricfil
