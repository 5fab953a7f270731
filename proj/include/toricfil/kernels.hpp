#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <omp.h>

#include "toricfil/rational.hpp"

// Lattice-counting and sampling kernels. Each has a serial reference and an
// OpenMP variant; both must return identical results.
namespace toricfil::kernels {

struct Box {
  IntVec lo, hi;  // inclusive bounds
  std::size_t size() const;
  IntVec point(std::size_t index) const;
};

// #{m in box : m in dual cone, m outside every g + dual cone}.
long long count_outside_staircase_serial(const Box& box, const std::vector<IntVec>& cone_rays,
                                         const std::vector<IntVec>& gens);
long long count_outside_staircase_parallel(const Box& box, const std::vector<IntVec>& cone_rays,
                                           const std::vector<IntVec>& gens);

// #{m in box : m in dual cone, <m, normals[i]> <= limits[i] for some i}.
long long count_below_any_serial(const Box& box, const std::vector<IntVec>& cone_rays,
                                 const std::vector<IntVec>& normals, const std::vector<long long>& limits);
long long count_below_any_parallel(const Box& box, const std::vector<IntVec>& cone_rays,
                                   const std::vector<IntVec>& normals, const std::vector<long long>& limits);

// Largest f(i) over i < count, ties broken toward the smaller index.
template <typename F>
std::pair<Rational, std::size_t> argmax_serial(std::size_t count, F&& f) {
  Rational best = f(0);
  std::size_t arg = 0;
  for (std::size_t i = 1; i < count; ++i) {
    Rational v = f(i);
    if (v > best) best = v, arg = i;
  }
  return {best, arg};
}

template <typename F>
std::pair<Rational, std::size_t> argmax_parallel(std::size_t count, F&& f) {
  const int threads = omp_get_max_threads();
  std::vector<Rational> best(threads);
  std::vector<std::size_t> arg(threads, count);
#pragma omp parallel num_threads(threads)
  {
    const int id = omp_get_thread_num();
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < count; ++i) {
      Rational v = f(i);
      if (arg[id] == count || v > best[id]) best[id] = v, arg[id] = i;
    }
  }
  Rational b;
  std::size_t a = count;
  for (int t = 0; t < threads; ++t) {
    if (arg[t] == count) continue;
    if (a == count || best[t] > b || (best[t] == b && arg[t] < a)) b = best[t], a = arg[t];
  }
  return {b, a};
}

}  // namespace toricfil::kernels
