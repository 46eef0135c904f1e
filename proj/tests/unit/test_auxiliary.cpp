// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/autgroup.hpp"
#include "sst/auxiliary.hpp"
#include "sst/generate.hpp"
#include "sst/rat.hpp"

#include "doctest.h"

#include <random>

using namespace sst;

namespace
{

Bsgs group_of(const Graph& g)
{
   return schreier_sims(graph_automorphisms(g), {}, g.num_nodes());
}

} // namespace

TEST_CASE("build_auxiliary_graph")
{
   // empty plan: G' = G
   Graph g = builtin_c8();
   SstPlan empty;
   empty.degree = 8;
   AuxiliaryGraph a0 = build_auxiliary_graph(g, empty);
   CHECK(a0.graph.num_nodes() == 8);
   CHECK(a0.graph.num_edges() == 8);

   // single leader with orbit {l, f}: one new node adjacent to both
   Graph h(3, {{0, 1}});
   SstPlan p;
   p.degree = 3;
   p.leaders = {0};
   p.orbits = {{0, 2}};
   AuxiliaryGraph a1 = build_auxiliary_graph(h, p);
   CHECK(a1.graph.num_nodes() == 4);
   CHECK(a1.leader_node == std::vector<int>{3});
   CHECK(a1.graph.adjacent(3, 0));
   CHECK(a1.graph.adjacent(3, 2));
   CHECK(!a1.graph.adjacent(3, 1));

   // C8 with leader 0 and full orbit: new node adjacent to all eight
   SstPlan pc = run_sst_algorithm(group_of(g), std::vector<int>{0});
   AuxiliaryGraph a2 = build_auxiliary_graph(g, pc);
   CHECK(a2.graph.num_nodes() == 9);
   CHECK(a2.graph.degree(8) == 8);
}

TEST_CASE("adjacent leader-follower pair separates to x_f <= 0")
{
   // leader 0 adjacent to follower 1 (a 2-node even path)
   Graph g(2, {{0, 1}});
   SstPlan p;
   p.degree = 2;
   p.leaders = {0};
   p.orbits = {{0, 1}};
   std::vector<Rat> x{Rat(1, 2), Rat(1, 2)};
   auto cuts = separate_sst_path_cuts(x, g, p);
   REQUIRE(!cuts.empty());
   // most violated is x_1 <= 0
   CHECK(cuts[0].terms == std::vector<std::pair<int, Rat>>{{1, Rat(1)}});
   CHECK(cuts[0].rhs == 0);
}

TEST_CASE("half-integral even path is separated by exactly its inequality")
{
   // path 0-1-2-3 with leader 0 and follower 3 (even, 4 nodes)
   Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
   SstPlan p;
   p.degree = 4;
   p.leaders = {0};
   p.orbits = {{0, 3}};
   std::vector<Rat> x(4, Rat(1, 2));
   auto cuts = separate_sst_path_cuts(x, g, p);
   REQUIRE(cuts.size() == 1);
   // -x0 + (x0+x1+x2+x3) <= 4/2 - 1: coefficient on the leader cancels
   CHECK(cuts[0].terms ==
         std::vector<std::pair<int, Rat>>{{1, Rat(1)}, {2, Rat(1)}, {3, Rat(1)}});
   CHECK(cuts[0].rhs == 1);
   CHECK(cuts[0].violation(x) == Rat(1, 2));
}

TEST_CASE("integral cut-feasible points are never separated")
{
   std::mt19937 rng(61);
   for (int t = 0; t < 12; ++t)
   {
      std::uniform_int_distribution<int> dn(4, 9), dp(25, 60);
      Graph g = random_graph(dn(rng), dp(rng), rng);
      Bsgs group = group_of(g);
      SstPlan plan = run_sst_algorithm(group, LeaderPolicy::MinOrbit);
      // greedy stable set satisfying all cuts: canonical max stable sets do
      std::vector<LinIneq> cuts;
      for (const SstCut& c : sst_cuts(plan))
      {
         LinIneq r;
         r.terms.emplace_back(std::min(c.leader, c.follower),
                              c.leader < c.follower ? Rat(-1) : Rat(1));
         r.terms.emplace_back(std::max(c.leader, c.follower),
                              c.leader < c.follower ? Rat(1) : Rat(-1));
         r.rhs = 0;
         cuts.push_back(r);
      }
      // test a handful of feasible integral points
      int shown = 0;
      for (unsigned long mask = 0; mask < (1ul << g.num_nodes()) && shown < 30; ++mask)
      {
         std::vector<Rat> x(static_cast<size_t>(g.num_nodes()), Rat(0));
         bool stable = true;
         for (int v = 0; v < g.num_nodes() && stable; ++v)
            if (mask >> v & 1)
            {
               x[static_cast<size_t>(v)] = 1;
               for (int u : g.neighbors(v))
                  if (u < v && (mask >> u & 1))
                     stable = false;
            }
         if (!stable)
            continue;
         bool feas = true;
         for (const LinIneq& r : cuts)
            if (r.violation(x) > 0)
               feas = false;
         if (!feas)
            continue;
         ++shown;
         CHECK(separate_sst_path_cuts(x, g, plan).empty());
      }
   }
}

TEST_CASE("separation rejects points outside the box")
{
   Graph g = builtin_c8();
   SstPlan plan = run_sst_algorithm(group_of(g), std::vector<int>{0});
   std::vector<Rat> bad(8, Rat(2));
   CHECK_THROWS_AS(separate_sst_path_cuts(bad, g, plan), std::invalid_argument);
}

TEST_CASE("even_path_inequalities on a short path")
{
   // leader 0, follower 3 on the 4-path: exactly one even induced path
   Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
   SstPlan p;
   p.degree = 4;
   p.leaders = {0};
   p.orbits = {{0, 3}};
   auto fam = even_path_inequalities(g, p);
   REQUIRE(fam.size() == 1);
   CHECK(fam[0].rhs == 1);
}

TEST_CASE("separation finds a cut whenever the brute-force family has a violated one")
{
   std::mt19937 rng(67);
   for (int t = 0; t < 15; ++t)
   {
      std::uniform_int_distribution<int> dn(4, 10), de(0, 3);
      Graph g = random_bipartite_graph(dn(rng), de(rng), rng);
      Bsgs group = group_of(g);
      SstPlan plan = run_sst_algorithm(group, LeaderPolicy::MinOrbit);
      auto family = even_path_inequalities(g, plan);
      if (family.empty())
         continue;
      std::uniform_int_distribution<int> dnum(0, 2);
      for (int rep = 0; rep < 10; ++rep)
      {
         std::vector<Rat> x(static_cast<size_t>(g.num_nodes()));
         for (auto& xi : x)
            xi = rat(dnum(rng), 2); // random half-integral point in the box
         // only meaningful when the edge and SST-cut rows hold
         bool edges_ok = true;
         for (auto [u, v] : g.edges())
            if (x[static_cast<size_t>(u)] + x[static_cast<size_t>(v)] > 1)
               edges_ok = false;
         for (const SstCut& c : sst_cuts(plan))
            if (x[static_cast<size_t>(c.follower)] > x[static_cast<size_t>(c.leader)])
               edges_ok = false;
         if (!edges_ok)
            continue;
         bool family_violated = false;
         for (const LinIneq& r : family)
            if (r.violation(x) > 0)
               family_violated = true;
         auto cuts = separate_sst_path_cuts(x, g, plan);
         if (family_violated)
            CHECK(!cuts.empty());
         for (const LinIneq& r : cuts)
            CHECK(r.violation(x) > 0);
      }
   }
}

TEST_CASE("odd_cycle_inequalities")
{
   auto c5 = odd_cycle_inequalities(cycle_graph(5));
   REQUIRE(c5.size() == 1);
   CHECK(c5[0].terms.size() == 5);
   CHECK(c5[0].rhs == 2);

   CHECK(odd_cycle_inequalities(cycle_graph(8)).empty());
   CHECK(odd_cycle_inequalities(builtin_fig6()).size() == 1); // the triangle
}
