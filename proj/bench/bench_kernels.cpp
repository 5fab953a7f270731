#include <benchmark/benchmark.h>

#include "toricfil/geodesic.hpp"
#include "toricfil/ideal.hpp"
#include "toricfil/kernels.hpp"
#include "toricfil/oracles.hpp"

using namespace toricfil;

namespace {

const std::vector<IntVec> kOrthant{{1, 0}, {0, 1}};

std::vector<IntVec> staircase_gens(long long m) { return {{2 * m, 0}, {m, 5 * m / 2}, {0, 10 * m}}; }

kernels::Box box(long long side) { return {{0, 0}, {side, side}}; }

void BM_StaircaseSerial(benchmark::State& st) {
  const long long m = st.range(0);
  const auto gens = staircase_gens(m);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_outside_staircase_serial(box(10 * m), kOrthant, gens));
}
void BM_StaircaseParallel(benchmark::State& st) {
  const long long m = st.range(0);
  const auto gens = staircase_gens(m);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_outside_staircase_parallel(box(10 * m), kOrthant, gens));
}

void BM_BelowAnySerial(benchmark::State& st) {
  const long long m = st.range(0);
  const std::vector<IntVec> normals{{1, 1}, {5, 1}, {1, 5}};
  const std::vector<long long> limits{2 * m, 5 * m, 5 * m};
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_below_any_serial(box(5 * m), kOrthant, normals, limits));
}
void BM_BelowAnyParallel(benchmark::State& st) {
  const long long m = st.range(0);
  const std::vector<IntVec> normals{{1, 1}, {5, 1}, {1, 5}};
  const std::vector<long long> limits{2 * m, 5 * m, 5 * m};
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_below_any_parallel(box(5 * m), kOrthant, normals, limits));
}

void BM_ColengthSerial(benchmark::State& st) {
  const auto a = power(MonomialIdeal::make(Cone::orthant(2), {{2, 0}, {1, 3}, {0, 5}}), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(colength_serial(a));
}
void BM_ColengthParallel(benchmark::State& st) {
  const auto a = power(MonomialIdeal::make(Cone::orthant(2), {{2, 0}, {1, 3}, {0, 5}}), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(colength(a));
}

Geodesic pair() {
  auto c = Cone::orthant(2);
  return Geodesic::make({CoboundedRegion::make(c, {Halfspace::make({Rational(1), Rational(1, 2)}, 1)})},
                        {CoboundedRegion::make(c, {Halfspace::make({Rational(1, 2), Rational(1)}, 1)})});
}
void BM_DHGridSerial(benchmark::State& st) {
  const auto g = pair();
  for (auto _ : st) benchmark::DoNotOptimize(dh_grid_serial(g, Rational(1, 8), static_cast<std::size_t>(st.range(0))));
}
void BM_DHGridParallel(benchmark::State& st) {
  const auto g = pair();
  for (auto _ : st) benchmark::DoNotOptimize(dh_grid(g, Rational(1, 8), static_cast<std::size_t>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_StaircaseSerial)->Arg(20)->Arg(80);
BENCHMARK(BM_StaircaseParallel)->Arg(20)->Arg(80);
BENCHMARK(BM_BelowAnySerial)->Arg(20)->Arg(80);
BENCHMARK(BM_BelowAnyParallel)->Arg(20)->Arg(80);
BENCHMARK(BM_ColengthSerial)->Arg(10)->Arg(40);
BENCHMARK(BM_ColengthParallel)->Arg(10)->Arg(40);
BENCHMARK(BM_DHGridSerial)->Arg(8)->Arg(16);
BENCHMARK(BM_DHGridParallel)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
