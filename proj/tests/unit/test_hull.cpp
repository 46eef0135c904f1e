// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/autgroup.hpp"
#include "sst/generate.hpp"
#include "sst/hull.hpp"

#include "doctest.h"

#include <random>

using namespace sst;

namespace
{

std::vector<Rat> units(int n)
{
   return std::vector<Rat>(static_cast<size_t>(n), Rat(1));
}

} // namespace

TEST_CASE("oracle on plain graphs")
{
   CHECK(integer_hull_oracle(disjoint_cliques(3, 1), {}, units(3)).value == 1);
   CHECK(integer_hull_oracle(cycle_graph(5), {}, units(5)).value == 2);
   CHECK(integer_hull_oracle(Graph(6), {}, units(6)).value == 6);
}

TEST_CASE("oracle with SST cuts on C8")
{
   Graph g = builtin_c8();
   std::vector<LinIneq> cuts;
   for (int f = 1; f < 8; ++f)
   {
      LinIneq r;
      r.terms = {{0, Rat(-1)}, {f, Rat(1)}};
      r.rhs = 0;
      cuts.push_back(r);
   }
   HullOptimum opt = integer_hull_oracle(g, cuts, units(8));
   CHECK(opt.value == 4);
   REQUIRE(!opt.argmax.empty());
   CHECK(opt.argmax.front() == 0); // node 0 must participate
}

TEST_CASE("oracle argmax is the lexicographically largest indicator among optima")
{
   // empty graph with zero objective: every set optimal, argmax must be all
   // nodes (greedy inclusion by id)
   Graph e3(3);
   HullOptimum opt = integer_hull_oracle(e3, {}, std::vector<Rat>(3, Rat(0)));
   CHECK(opt.value == 0);
   CHECK(opt.argmax == std::vector<int>{0, 1, 2});

   // two symmetric optima {0,2} and {1,3} on C4: prefer the one with node 0
   HullOptimum c4 = integer_hull_oracle(cycle_graph(4), {}, units(4));
   CHECK(c4.value == 2);
   CHECK(c4.argmax == std::vector<int>{0, 2});
}

TEST_CASE("oracle handles negative weights")
{
   Graph g(3, {{0, 1}});
   std::vector<Rat> obj{Rat(-2), Rat(1), Rat(3)};
   HullOptimum opt = integer_hull_oracle(g, {}, obj);
   CHECK(opt.value == 4);
   CHECK(opt.argmax == std::vector<int>{1, 2});

   // a cut can force a negative-weight node in
   LinIneq r;
   r.terms = {{0, Rat(-1)}, {1, Rat(1)}};
   r.rhs = 0; // x1 <= x0, but 0 and 1 are adjacent: node 1 never usable
   HullOptimum opt2 = integer_hull_oracle(g, {r}, obj);
   CHECK(opt2.value == 3);
}

TEST_CASE("oracle equals exhaustive enumeration with random cuts")
{
   std::mt19937 rng(111);
   for (int t = 0; t < 20; ++t)
   {
      std::uniform_int_distribution<int> dn(3, 9), dp(20, 60), dw(-3, 5);
      Graph g = random_graph(dn(rng), dp(rng), rng);
      const int n = g.num_nodes();
      std::vector<LinIneq> cuts;
      std::uniform_int_distribution<int> dv(0, n - 1);
      for (int c = 0; c < 2; ++c)
      {
         int a = dv(rng), b = dv(rng);
         if (a == b)
            continue;
         LinIneq r;
         r.terms = {{std::min(a, b), a < b ? Rat(-1) : Rat(1)},
                    {std::max(a, b), a < b ? Rat(1) : Rat(-1)}};
         r.rhs = 0;
         cuts.push_back(r);
      }
      std::vector<Rat> obj(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v)
         obj[static_cast<size_t>(v)] = dw(rng);

      Rat best = 0; // the empty set is always feasible
      for (const auto& x : enumerate_cut_feasible_stable_sets(g, cuts))
      {
         Rat val = 0;
         for (int v = 0; v < n; ++v)
            val += obj[static_cast<size_t>(v)] * x[static_cast<size_t>(v)];
         if (val > best)
            best = val;
      }
      CHECK(integer_hull_oracle(g, cuts, obj).value == best);
   }
}

TEST_CASE("oracle value invariant under automorphic relabeling")
{
   std::mt19937 rng(131);
   for (int t = 0; t < 10; ++t)
   {
      Graph g = random_tp_graph(9, rng);
      const int n = g.num_nodes();
      auto gens = graph_automorphisms(g);
      if (gens.empty())
         continue;
      HullOptimum base = integer_hull_oracle(g, {}, units(n));
      for (const Perm& gamma : gens)
      {
         Graph h(n);
         for (auto [u, v] : g.edges())
            h.add_edge(gamma(u), gamma(v));
         CHECK(integer_hull_oracle(h, {}, units(n)).value == base.value);
      }
   }
}
