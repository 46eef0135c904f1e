// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/generate.hpp"
#include "sst/lp.hpp"

#include <benchmark/benchmark.h>

static void BM_lp_odd_cycle(benchmark::State& state)
{
   const int n = static_cast<int>(state.range(0));
   sst::Graph g = sst::cycle_graph(n);
   sst::IneqSystem sys = sst::IneqSystem::boxed(n);
   for (auto [u, v] : g.edges())
   {
      sst::LinIneq e;
      e.terms.emplace_back(u, sst::Rat(1));
      e.terms.emplace_back(v, sst::Rat(1));
      e.rhs = 1;
      sys.add_row(e);
   }
   std::vector<sst::Rat> obj(static_cast<size_t>(n), sst::Rat(1));
   for (auto _ : state)
      benchmark::DoNotOptimize(sst::solve_lp(sys, obj));
}
BENCHMARK(BM_lp_odd_cycle)->Arg(9)->Arg(21)->Arg(41);
