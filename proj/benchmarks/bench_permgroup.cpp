// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/autgroup.hpp"
#include "sst/bsgs.hpp"
#include "sst/generate.hpp"

#include <benchmark/benchmark.h>

static void BM_schreier_sims_sym(benchmark::State& state)
{
   const int n = static_cast<int>(state.range(0));
   std::vector<int> cyc(static_cast<size_t>(n));
   for (int i = 0; i < n; ++i)
      cyc[static_cast<size_t>(i)] = (i + 1) % n;
   std::vector<int> tr(static_cast<size_t>(n));
   for (int i = 0; i < n; ++i)
      tr[static_cast<size_t>(i)] = i;
   std::swap(tr[0], tr[1]);
   std::vector<sst::Perm> gens{sst::Perm::from_images(cyc), sst::Perm::from_images(tr)};
   for (auto _ : state)
      benchmark::DoNotOptimize(sst::schreier_sims(gens).order());
}
BENCHMARK(BM_schreier_sims_sym)->Arg(8)->Arg(16)->Arg(32);

static void BM_graph_automorphisms_c8(benchmark::State& state)
{
   sst::Graph g = sst::cycle_graph(static_cast<int>(state.range(0)));
   for (auto _ : state)
      benchmark::DoNotOptimize(sst::graph_automorphisms(g));
}
BENCHMARK(BM_graph_automorphisms_c8)->Arg(8)->Arg(24)->Arg(64);
