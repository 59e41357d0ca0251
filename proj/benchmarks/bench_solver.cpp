#include <benchmark/benchmark.h>

#include "aec/generate.hpp"
#include "aec/oracle.hpp"
#include "aec/peel.hpp"
#include "aec/solver.hpp"

namespace {

aec::Graph instance(int n) {
  aec::Random3SparseParams p;
  p.n = n;
  p.delta_cap = 6;
  p.m_target = std::min(3 * std::max(1, (2 * n) / 3) - 1, (n * 3) / 2);
  p.seed = 12345;
  p.require_qualifying = true;
  return aec::make_random_3sparse(p);
}

void BM_AcyclicColor(benchmark::State& state) {
  aec::Graph g = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto result = aec::acyclic_color(g);
    benchmark::DoNotOptimize(result.stats.colors_used);
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_AcyclicColor)->Arg(30)->Arg(60)->Arg(120)->Arg(240);

void BM_AcyclicColorChecked(benchmark::State& state) {
  aec::Graph g = instance(static_cast<int>(state.range(0)));
  aec::SolveOptions opts;
  opts.checked = true;
  for (auto _ : state) {
    auto result = aec::acyclic_color(g, opts);
    benchmark::DoNotOptimize(result.stats.colors_used);
  }
}
BENCHMARK(BM_AcyclicColorChecked)->Arg(30)->Arg(60);

void BM_PeelOrder(benchmark::State& state) {
  aec::Graph g = instance(static_cast<int>(state.range(0)));
  int delta = g.max_degree();
  for (auto _ : state) {
    auto r = aec::peel_order(g, delta);
    benchmark::DoNotOptimize(r.order.sequence.size());
  }
}
BENCHMARK(BM_PeelOrder)->Arg(60)->Arg(240);

void BM_VerifyAcyclic(benchmark::State& state) {
  aec::Graph g = instance(static_cast<int>(state.range(0)));
  auto result = aec::acyclic_color(g);
  for (auto _ : state) {
    auto cycle = aec::verify_acyclic(result.coloring);
    benchmark::DoNotOptimize(cycle.has_value());
  }
}
BENCHMARK(BM_VerifyAcyclic)->Arg(60)->Arg(240);

void BM_ValidityCriterion(benchmark::State& state) {
  aec::Graph g = instance(60);
  auto result = aec::acyclic_color(g);
  aec::PartialColoring c = result.coloring;
  c.unassign(0);
  auto candidates = aec::candidate_colors(c, 0);
  for (auto _ : state) {
    for (aec::Color col : candidates)
      benchmark::DoNotOptimize(aec::is_valid_color(c, 0, col));
  }
}
BENCHMARK(BM_ValidityCriterion);

void BM_ValiditySimulated(benchmark::State& state) {
  aec::Graph g = instance(60);
  auto result = aec::acyclic_color(g);
  aec::PartialColoring c = result.coloring;
  c.unassign(0);
  auto candidates = aec::candidate_colors(c, 0);
  for (auto _ : state) {
    for (aec::Color col : candidates)
      benchmark::DoNotOptimize(aec::is_valid_color_direct(c, 0, col));
  }
}
BENCHMARK(BM_ValiditySimulated);

void BM_OracleK33(benchmark::State& state) {
  aec::Graph g = aec::make_k33();
  for (auto _ : state) {
    auto r = aec::exact_aci(g, 6);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_OracleK33);

}  // namespace
