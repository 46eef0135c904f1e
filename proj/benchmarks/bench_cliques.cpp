// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/generate.hpp"
#include "sst/graph.hpp"

#include <benchmark/benchmark.h>

#include <random>

static void BM_maximal_cliques_random(benchmark::State& state)
{
   std::mt19937 rng(7);
   sst::Graph g = sst::random_graph(static_cast<int>(state.range(0)), 40, rng);
   for (auto _ : state)
      benchmark::DoNotOptimize(sst::maximal_cliques(g));
}
BENCHMARK(BM_maximal_cliques_random)->Arg(16)->Arg(24)->Arg(32);

static void BM_stability_number(benchmark::State& state)
{
   std::mt19937 rng(11);
   sst::Graph g = sst::random_graph(static_cast<int>(state.range(0)), 30, rng);
   std::vector<int> all(static_cast<size_t>(g.num_nodes()));
   for (int v = 0; v < g.num_nodes(); ++v)
      all[static_cast<size_t>(v)] = v;
   for (auto _ : state)
      benchmark::DoNotOptimize(sst::stability_number(g, all));
}
BENCHMARK(BM_stability_number)->Arg(16)->Arg(24);
