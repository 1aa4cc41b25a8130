#include <benchmark/benchmark.h>

#include <random>

#include "augframes/complexes.hpp"
#include "augframes/homology.hpp"
#include "augframes/lattice.hpp"
#include "augframes/quadring.hpp"
#include "augframes/unitgeometry.hpp"

using namespace augframes;

static void BM_EuclideanDivide(benchmark::State& state) {
  Ring ring = make_ring(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> c(-1000, 1000);
  std::vector<std::pair<RingElement, RingElement>> in;
  for (int i = 0; i < 256; ++i) {
    RingElement b(c(rng), c(rng));
    if (b.is_zero()) b = RingElement(1);
    in.push_back({RingElement(c(rng), c(rng)), b});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = in[i++ % in.size()];
    benchmark::DoNotOptimize(euclidean_divide(a, b, ring));
  }
}
BENCHMARK(BM_EuclideanDivide)->Arg(-1)->Arg(-11)->Arg(7)->Arg(73);

static void BM_CanonicalLine(benchmark::State& state) {
  Ring ring = make_ring(state.range(0));
  Vector v{RingElement(3, 1), RingElement(-2, 5)};
  for (auto _ : state) benchmark::DoNotOptimize(canonical_line(v, ring));
}
BENCHMARK(BM_CanonicalLine)->Arg(-1)->Arg(-3)->Arg(7);

static void BM_SweepLem1(benchmark::State& state) {
  Ring ring = make_ring(-1);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_lemma(ring, LemmaId::LEM1, state.range(0)));
}
BENCHMARK(BM_SweepLem1)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_BuildBA2(benchmark::State& state) {
  Ring ring = make_ring(-1);
  for (auto _ : state) benchmark::DoNotOptimize(build_complex(ring, 2, 0, state.range(0), FrameKind::BA));
}
BENCHMARK(BM_BuildBA2)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_HomologyBA2(benchmark::State& state) {
  FrameComplex fc = build_complex(make_ring(-1), 2, 0, state.range(0), FrameKind::BA);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(fc));
}
BENCHMARK(BM_HomologyBA2)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_HomologyTits(benchmark::State& state) {
  FlagComplexFq t = build_tits_fq(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(t));
}
BENCHMARK(BM_HomologyTits)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
