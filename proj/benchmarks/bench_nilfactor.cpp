#include <benchmark/benchmark.h>

#include <vector>

#include "nilfactor/constructors.hpp"
#include "nilfactor/factorize.hpp"
#include "nilfactor/search.hpp"
#include "nilfactor/structure.hpp"

using namespace nilfactor;

namespace {

// Building an n x n multiplication table, the dominant setup cost.
void BM_TableBuildCyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GroupTable g = make_cyclic(n);
    benchmark::DoNotOptimize(g.order());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n) * n);
}
BENCHMARK(BM_TableBuildCyclic)->Arg(64)->Arg(256)->Arg(1024);

// Set product with dedup, the inner operation of verification and the
// telescoping-identity checks.
void BM_MultiplySets(benchmark::State& state) {
  const GroupTable g = make_abelian(std::vector<int>(6, 2));  // order 64
  std::vector<int> evens, odds;
  for (int x = 0; x < g.order(); ++x) (x % 2 ? odds : evens).push_back(x);
  const ElementSet a{evens}, b{odds};
  for (auto _ : state) {
    ElementSet p = multiply_sets(g, a, b);
    benchmark::DoNotOptimize(p.size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(a.size()) *
                          b.size());
}
BENCHMARK(BM_MultiplySets);

// The full pipeline: chain, transversals, shifts, assembly, then the
// independent verifier on the result.
void BM_ConstructAndVerify(benchmark::State& state) {
  struct Case {
    GroupTable group;
    std::vector<int> sizes;
  };
  static const std::vector<Case> cases = [] {
    std::vector<Case> v;
    v.push_back({make_abelian(std::vector<int>(6, 2)), std::vector<int>(6, 2)});
    v.push_back({make_cyclic(64), {4, 4, 4}});
    v.push_back({make_direct_product(make_quaternion(), make_cyclic(3)), {2, 2, 6}});
    return v;
  }();
  const Case& c = cases[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    CompleteFactorization f = construct_complete_factorization(c.group, c.sizes);
    benchmark::DoNotOptimize(verify_complete_factorization(c.group, f.blocks).pass());
  }
}
BENCHMARK(BM_ConstructAndVerify)
    ->Arg(0)
    ->Arg(1)
    ->Arg(2)
    ->Unit(benchmark::kMicrosecond);

// Exhaustive count-all search; reports raw node throughput.
void BM_SearchCountAll(benchmark::State& state) {
  const GroupTable g = make_cyclic(16);
  SearchProblem p;
  p.group = &g;
  p.sizes = {2, 2, 4};
  p.mode = SearchMode::CountAll;
  p.limits.max_nodes = 1'000'000'000;
  p.limits.max_seconds = 0;
  p.threads = static_cast<int>(state.range(0));
  int64_t nodes = 0;
  for (auto _ : state) {
    SearchOutcome out = search_complete_factorization(p);
    nodes += out.nodes_explored;
    benchmark::DoNotOptimize(out.count);
  }
  state.counters["nodes/s"] =
      benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}
// Real time, not CPU time: the work happens on pool threads.
BENCHMARK(BM_SearchCountAll)
    ->Arg(1)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
