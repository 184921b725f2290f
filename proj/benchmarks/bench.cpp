#include <benchmark/benchmark.h>

#include "crnkit/decomposition.hpp"
#include "crnkit/generate.hpp"
#include "crnkit/kinetics.hpp"
#include "crnkit/structure.hpp"
#include "helpers_bench.hpp"

namespace {

crn::Network benchmark_network(int species, int classes) {
  crn::GeneratorParams params;
  params.species = species;
  params.linkage_classes = classes;
  params.max_cycle_length = 5;
  params.seed = 1234;
  return crn::generate_weakly_reversible(params);
}

void BM_rank(benchmark::State& state) {
  const auto m = crn::bench::random_matrix(state.range(0), state.range(0), 77);
  for (auto _ : state) benchmark::DoNotOptimize(crn::rank(m));
}
BENCHMARK(BM_rank)->Arg(8)->Arg(16)->Arg(32);

void BM_kernel_basis(benchmark::State& state) {
  const auto m = crn::bench::random_matrix(state.range(0), 2 * state.range(0), 77);
  for (auto _ : state) benchmark::DoNotOptimize(crn::kernel_basis(m));
}
BENCHMARK(BM_kernel_basis)->Arg(8)->Arg(16);

void BM_analyze(benchmark::State& state) {
  const crn::Network net =
      benchmark_network(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(crn::analyze(net));
}
BENCHMARK(BM_analyze)->Arg(6)->Arg(12)->Arg(18);

void BM_finest_independent_decomposition(benchmark::State& state) {
  const crn::Network net =
      benchmark_network(static_cast<int>(state.range(0)), 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(crn::finest_independent_decomposition(net));
}
BENCHMARK(BM_finest_independent_decomposition)->Arg(6)->Arg(12)->Arg(18);

void BM_classify_linkage(benchmark::State& state) {
  const crn::Network net =
      benchmark_network(static_cast<int>(state.range(0)), 4);
  const crn::Decomposition d = crn::linkage_class_decomposition(net);
  for (auto _ : state) benchmark::DoNotOptimize(crn::classify(net, d));
}
BENCHMARK(BM_classify_linkage)->Arg(6)->Arg(12)->Arg(18);

void BM_find_cb_equilibria(benchmark::State& state) {
  crn::GeneratorParams params;
  params.species = static_cast<int>(state.range(0));
  params.linkage_classes = 2;
  params.seed = 99;
  params.deficiency_zero_blocks = true;
  params.share_species = false;
  const crn::Network net = crn::generate_weakly_reversible(params);
  const auto kin = crn::PowerLawKinetics::mass_action(
      net, std::vector<double>(net.reaction_count(), 1.0));
  crn::SolveOptions opts;
  opts.starts = 8;
  for (auto _ : state)
    benchmark::DoNotOptimize(crn::find_cb_equilibria(net, kin, opts));
}
BENCHMARK(BM_find_cb_equilibria)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
