#include <benchmark/benchmark.h>

#include "megs/group_context.hpp"

namespace {

megs::DefiningDatum gupta_sidki() {
  megs::DefiningDatum datum;
  datum.p = 3;
  datum.families[1] = {{1, 2}};
  return datum;
}

megs::DefiningDatum p5_periodic() {
  megs::DefiningDatum datum;
  datum.p = 5;
  datum.families[1] = {{1, 4, 0, 0}, {0, 1, 4, 0}};
  return datum;
}

void BM_PortraitCompose(benchmark::State& state) {
  auto datum = p5_periodic();
  int depth = static_cast<int>(state.range(0));
  megs::Portrait a = megs::rooted_a(datum.p, depth);
  megs::Portrait b = megs::directed_generator(datum, 1, 1, depth);
  megs::Portrait acc = a.then(b);
  for (auto _ : state) {
    acc = acc.then(b);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_PortraitCompose)->Arg(3)->Arg(4)->Arg(5);

void BM_LeafPerm(benchmark::State& state) {
  auto datum = p5_periodic();
  int depth = static_cast<int>(state.range(0));
  megs::Portrait b = megs::directed_generator(datum, 1, 1, depth);
  for (auto _ : state) benchmark::DoNotOptimize(b.leaf_perm());
}
BENCHMARK(BM_LeafPerm)->Arg(3)->Arg(4)->Arg(5);

void BM_ChainBuild(benchmark::State& state) {
  auto datum = state.range(0) == 3 ? gupta_sidki() : p5_periodic();
  int depth = static_cast<int>(state.range(1));
  std::vector<megs::Perm> gens;
  for (const auto& f : megs::standard_generating_set(datum, depth))
    gens.push_back(f.leaf_perm());
  int degree = 1;
  for (int i = 0; i < depth; ++i) degree *= datum.p;
  for (auto _ : state)
    benchmark::DoNotOptimize(megs::StabilizerChain::build(gens, degree));
}
BENCHMARK(BM_ChainBuild)->Args({3, 3})->Args({3, 4})->Args({5, 3});

void BM_DerivedChain(benchmark::State& state) {
  auto datum = state.range(0) == 3 ? gupta_sidki() : p5_periodic();
  int depth = static_cast<int>(state.range(1));
  for (auto _ : state) {
    megs::GroupContext ctx(datum, depth);
    benchmark::DoNotOptimize(ctx.derived_chain().order());
  }
}
BENCHMARK(BM_DerivedChain)->Args({3, 3})->Args({5, 3});

}  // namespace

BENCHMARK_MAIN();
