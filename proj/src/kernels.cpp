#include "toricfil/kernels.hpp"

namespace toricfil::kernels {

std::size_t Box::size() const {
  std::size_t s = 1;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (hi[k] < lo[k]) return 0;
    s *= static_cast<std::size_t>(hi[k] - lo[k] + 1);
  }
  return s;
}

IntVec Box::point(std::size_t index) const {
  IntVec m(lo.size());
  for (std::size_t k = 0; k < lo.size(); ++k) {
    const auto extent = static_cast<std::size_t>(hi[k] - lo[k] + 1);
    m[k] = lo[k] + static_cast<long long>(index % extent);
    index /= extent;
  }
  return m;
}

namespace {

inline bool in_cone(const IntVec& m, const std::vector<IntVec>& rays) {
  for (const auto& r : rays) {
    long long s = 0;
    for (std::size_t k = 0; k < m.size(); ++k) s += m[k] * r[k];
    if (s < 0) return false;
  }
  return true;
}

inline bool outside_staircase(const IntVec& m, const std::vector<IntVec>& rays, const std::vector<IntVec>& gens,
                              IntVec& scratch) {
  for (const auto& g : gens) {
    for (std::size_t k = 0; k < m.size(); ++k) scratch[k] = m[k] - g[k];
    if (in_cone(scratch, rays)) return false;
  }
  return true;
}

inline bool below_any(const IntVec& m, const std::vector<IntVec>& normals, const std::vector<long long>& limits) {
  for (std::size_t i = 0; i < normals.size(); ++i) {
    long long s = 0;
    for (std::size_t k = 0; k < m.size(); ++k) s += m[k] * normals[i][k];
    if (s <= limits[i]) return true;
  }
  return false;
}

}  // namespace

long long count_outside_staircase_serial(const Box& box, const std::vector<IntVec>& rays,
                                         const std::vector<IntVec>& gens) {
  long long count = 0;
  IntVec scratch(box.lo.size());
  const std::size_t total = box.size();
  for (std::size_t i = 0; i < total; ++i) {
    IntVec m = box.point(i);
    if (in_cone(m, rays) && outside_staircase(m, rays, gens, scratch)) ++count;
  }
  return count;
}

long long count_outside_staircase_parallel(const Box& box, const std::vector<IntVec>& rays,
                                           const std::vector<IntVec>& gens) {
  long long count = 0;
  const long long total = static_cast<long long>(box.size());
#pragma omp parallel reduction(+ : count)
  {
    IntVec scratch(box.lo.size());
#pragma omp for schedule(static)
    for (long long i = 0; i < total; ++i) {
      IntVec m = box.point(static_cast<std::size_t>(i));
      if (in_cone(m, rays) && outside_staircase(m, rays, gens, scratch)) ++count;
    }
  }
  return count;
}

long long count_below_any_serial(const Box& box, const std::vector<IntVec>& rays,
                                 const std::vector<IntVec>& normals, const std::vector<long long>& limits) {
  long long count = 0;
  const std::size_t total = box.size();
  for (std::size_t i = 0; i < total; ++i) {
    IntVec m = box.point(i);
    if (in_cone(m, rays) && below_any(m, normals, limits)) ++count;
  }
  return count;
}

long long count_below_any_parallel(const Box& box, const std::vector<IntVec>& rays,
                                   const std::vector<IntVec>& normals, const std::vector<long long>& limits) {
  long long count = 0;
  const long long total = static_cast<long long>(box.size());
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (long long i = 0; i < total; ++i) {
    IntVec m = box.point(static_cast<std::size_t>(i));
    if (in_cone(m, rays) && below_any(m, normals, limits)) ++count;
  }
  return count;
}

}  // namespace toricfil::kernels
