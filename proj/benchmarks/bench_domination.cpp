#include <benchmark/benchmark.h>

#include "treedom/exact_oracles.hpp"
#include "treedom/forest_domination.hpp"
#include "treedom/steiner_domination.hpp"
#include "treedom/tree_corpus.hpp"
#include "treedom/tree_model.hpp"

namespace {

using namespace treedom;

ParentArray prufer_tree(benchmark::State& state) {
  GeneratorSpec spec;
  spec.family = Family::kPrufer;
  spec.n = static_cast<Vertex>(state.range(0));
  spec.seed = 7;
  return gen(spec);
}

void BM_ForestDomination(benchmark::State& state) {
  const ParentArray tree = prufer_tree(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(forest_domination(tree));
  }
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ForestDomination)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_SteinerDomination(benchmark::State& state) {
  const ParentArray tree = prufer_tree(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(steiner_domination(tree));
  }
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SteinerDomination)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_FormulaGammaSt(benchmark::State& state) {
  const AdjacencyTree t = build_adjacency(prufer_tree(state));
  for (auto _ : state) {
    benchmark::DoNotOptimize(formula_gamma_st(t));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FormulaGammaSt)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_ExactGammaDp(benchmark::State& state) {
  const AdjacencyTree t = build_adjacency(prufer_tree(state));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_gamma_dp(t));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactGammaDp)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_RelabelBfs(benchmark::State& state) {
  const EdgeList edges = edge_list_of(prufer_tree(state));
  for (auto _ : state) {
    benchmark::DoNotOptimize(relabel_bfs(edges));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RelabelBfs)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_ExactGammaStPruned(benchmark::State& state) {
  const AdjacencyTree t = build_adjacency(prufer_tree(state));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_gamma_st(t, true));
  }
}
BENCHMARK(BM_ExactGammaStPruned)->DenseRange(12, 24, 4);

}  // namespace
