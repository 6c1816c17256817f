#include <benchmark/benchmark.h>

#include "sparsetree/concurrent_flow.hpp"
#include "sparsetree/quasi_bipartite.hpp"
#include "sparsetree/random_instances.hpp"
#include "sparsetree/tree_prep.hpp"
#include "sparsetree/verify.hpp"
#include "sparsetree/zero_extension.hpp"

using namespace sparsetree;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void BM_CutEnumeration(benchmark::State& state) {
  const auto tree = random_unit_tree(60, static_cast<std::size_t>(state.range(1)), 1);
  const auto h = expected_sparsifier(tree);
  CutQualityOptions options;
  options.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cut_quality(tree, h, options));
}
BENCHMARK(BM_CutEnumeration)->ArgsProduct({{0, 1}, {8, 12}})->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  const auto pieces = prepare_tree(random_unit_tree(400, 60, 2));
  const CapacitatedGraph* largest = &pieces.components.front();
  for (const auto& c : pieces.components) {
    if (c.vertex_count() > largest->vertex_count()) largest = &c;
  }
  const auto rooted = root_tree(contract_degree2_nonterminals(*largest, choose_root(*largest)));
  for (auto _ : state) benchmark::DoNotOptimize(component_sparsifier(rooted, mode(state)));
}
BENCHMARK(BM_ClosedForm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const auto rooted = root_tree(make_unit_star(8));
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_sparsifier(rooted, 1, 5000, mode(state)));
}
BENCHMARK(BM_MonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_QbSparsifier(benchmark::State& state) {
  const auto g = random_unit_qb(8, 40, 3);
  for (auto _ : state) benchmark::DoNotOptimize(qb_sparsifier(g, mode(state)));
}
BENCHMARK(BM_QbSparsifier)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DemandBatch(benchmark::State& state) {
  const auto g = random_unit_qb(5, 10, 4);
  const auto h = exact_qb_sparsifier(g);
  const auto demands = random_demands(g, 8, 5);
  for (auto _ : state) benchmark::DoNotOptimize(verify_exact(g, h, demands, Rational(0), mode(state)));
}
BENCHMARK(BM_DemandBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
