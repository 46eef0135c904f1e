// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/autgroup.hpp"
#include "sst/generate.hpp"
#include "sst/tu.hpp"

#include <benchmark/benchmark.h>

#include <random>

static void BM_tu_exhaustive_tp(benchmark::State& state)
{
   std::mt19937 rng(3);
   sst::Graph g = sst::random_tp_graph(static_cast<int>(state.range(0)), rng);
   sst::Bsgs group = sst::schreier_sims(sst::graph_automorphisms(g), {}, g.num_nodes());
   sst::SstPlan plan = sst::run_sst_algorithm(group, sst::LeaderPolicy::Stringent);
   sst::RatMatrix m = sst::extend_for_theorem(g, plan);
   for (auto _ : state)
      benchmark::DoNotOptimize(sst::is_totally_unimodular(m));
}
BENCHMARK(BM_tu_exhaustive_tp)->Arg(8)->Arg(12)->Arg(14);
