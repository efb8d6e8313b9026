#include <benchmark/benchmark.h>

#include "fqc/configs.hpp"
#include "fqc/generate.hpp"

using namespace fqc;

namespace {

PointSet random_set(std::uint64_t q, unsigned d, std::size_t size) {
  GenSpec gen;
  gen.kind = GenKind::uniform;
  gen.size = size;
  return generate_set(std::make_shared<Fq>(q), d, gen, 1);
}

void BM_WalkCounts(benchmark::State& state) {
  PointSet E = random_set(7, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto w = AuxGraph(E, 1).walk_counts(4);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WalkCounts)->Arg(25)->Arg(50)->Arg(100);

void BM_StarCounts(benchmark::State& state) {
  PointSet E = random_set(7, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    BigInt s = count_star_tuples(E, 1, 3);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_StarCounts)->Arg(25)->Arg(100);

void BM_SphereEnum(benchmark::State& state) {
  Fq F(13);
  Point origin(4, 0);
  for (auto _ : state) {
    auto pts = sphere_enum(F, 4, origin, 1);
    benchmark::DoNotOptimize(pts);
  }
}
BENCHMARK(BM_SphereEnum);

void BM_FindWitnessPath4(benchmark::State& state) {
  GenSpec gen;
  gen.kind = GenKind::full_space;
  PointSet E = generate_set(std::make_shared<Fq>(7), 2, gen, 0);
  for (auto _ : state) {
    auto res = find_witness(E, 3, PatternGraph::path(4));
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_FindWitnessPath4);

}  // namespace

BENCHMARK_MAIN();
