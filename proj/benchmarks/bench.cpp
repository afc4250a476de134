#include <benchmark/benchmark.h>

#include "matroidal/covers.hpp"
#include "matroidal/homology.hpp"
#include "matroidal/matroid.hpp"
#include "matroidal/monomial.hpp"
#include "matroidal/resolution.hpp"

namespace {

using namespace matroidal;

void BM_cover_ideal(benchmark::State& state) {
  Matroid m = Matroid::fano().dual();
  for (auto _ : state) benchmark::DoNotOptimize(cover_ideal(m));
}
BENCHMARK(BM_cover_ideal);

void BM_basic_covers(benchmark::State& state) {
  Matroid m = Matroid::uniform(3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_basic_covers(m, (int)state.range(0)));
}
BENCHMARK(BM_basic_covers)->Arg(1)->Arg(2)->Arg(3);

void BM_symbolic_covers(benchmark::State& state) {
  Matroid m = Matroid::uniform(3, 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(symbolic_power(m, (int)state.range(0), SymPowerMethod::covers));
}
BENCHMARK(BM_symbolic_covers)->Arg(2)->Arg(3);

void BM_symbolic_structure(benchmark::State& state) {
  Matroid m = Matroid::uniform(3, 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(symbolic_power(m, (int)state.range(0), SymPowerMethod::structure));
}
BENCHMARK(BM_symbolic_structure)->Arg(2)->Arg(3);

void BM_hochster(benchmark::State& state) {
  MonomialIdeal j = cover_ideal(Matroid::fano());
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(j));
}
BENCHMARK(BM_hochster);

void BM_mapping_cone(benchmark::State& state) {
  Matroid m = Matroid::fano();
  for (auto _ : state) {
    ResolutionEngine engine;
    benchmark::DoNotOptimize(engine.betti_of_cover_ideal(m));
  }
}
BENCHMARK(BM_mapping_cone);

void BM_matroidal_check(benchmark::State& state) {
  MonomialIdeal j = cover_ideal(Matroid::uniform(3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(matroidal_check(j));
}
BENCHMARK(BM_matroidal_check);

}  // namespace

BENCHMARK_MAIN();
