// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/autgroup.hpp"
#include "sst/bsgs.hpp"
#include "sst/generate.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

using namespace sst;

namespace
{

// BFS closure of the generating set
std::vector<Perm> brute_force_elements(const std::vector<Perm>& gens, int n)
{
   std::vector<Perm> group{Perm(n)};
   for (size_t k = 0; k < group.size(); ++k)
      for (const Perm& s : gens)
      {
         Perm next = compose(s, group[k]);
         if (std::find(group.begin(), group.end(), next) == group.end())
            group.push_back(next);
      }
   return group;
}

std::vector<Perm> brute_force_automorphisms(const Graph& g)
{
   std::vector<int> img(static_cast<size_t>(g.num_nodes()));
   std::iota(img.begin(), img.end(), 0);
   std::vector<Perm> out;
   do
   {
      Perm p = Perm::from_images(img);
      if (is_automorphism(g, p))
         out.push_back(p);
   } while (std::next_permutation(img.begin(), img.end()));
   return out;
}

} // namespace

TEST_CASE("perm basics and cycle notation")
{
   Perm id(4);
   CHECK(id.is_identity());
   Perm p = Perm::from_images({1, 0, 3, 2});
   CHECK(p.to_cycles() == "(0 1)(2 3)");
   CHECK(compose(p, p).is_identity());
   CHECK(p.inverse() == p);
   CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("read_generators")
{
   auto g1 = read_generators("(0 1)", 3);
   REQUIRE(g1.size() == 1);
   CHECK(g1[0].images() == std::vector<int>{1, 0, 2});

   auto g2 = read_generators("2 0 1");
   REQUIRE(g2.size() == 1);
   CHECK(g2[0].images() == std::vector<int>{2, 0, 1});

   CHECK_THROWS_AS(read_generators("(0 0)"), std::runtime_error);
   CHECK_THROWS_AS(read_generators("(0 1"), std::runtime_error);

   auto g3 = read_generators("# comment\n(0 1)(2 4 3)\n1 0 2 3 4\n");
   CHECK(g3.size() == 2);
   CHECK(g3[0].degree() == 5);
}

TEST_CASE("schreier_sims orders")
{
   // {(0 1), (0 1 2 3)} generates S4
   auto gens = read_generators("(0 1)\n(0 1 2 3)\n");
   Bsgs s4 = schreier_sims(gens);
   CHECK(s4.order() == 24);

   // empty generating set on 5 points
   Bsgs triv = schreier_sims({}, {}, 5);
   CHECK(triv.order() == 1);
   CHECK(triv.degree() == 5);
   CHECK(triv.is_trivial());

   // C8 automorphisms: rotation + one reflection -> dihedral of order 16
   auto dih = read_generators("(0 1 2 3 4 5 6 7)\n(1 7)(2 6)(3 5)\n");
   Bsgs d8 = schreier_sims(dih);
   CHECK(d8.order() == 16);
   CHECK(static_cast<long>(brute_force_elements(dih, 8).size()) == 16);
}

TEST_CASE("membership and strong generators")
{
   std::mt19937 rng(9);
   for (int t = 0; t < 10; ++t)
   {
      Graph g = random_graph(7, 45, rng);
      auto gens = graph_automorphisms(g);
      Bsgs b = schreier_sims(gens, {}, g.num_nodes());
      auto elems = brute_force_automorphisms(g);
      CHECK(b.order() == static_cast<long>(elems.size()));
      for (const Perm& e : elems)
         CHECK(b.contains(e));
      // every strong generator passes membership
      for (const auto& lvl : b.levels())
         for (const Perm& s : lvl.gens)
            CHECK(b.contains(s));
      // non-members rejected
      std::vector<int> img(static_cast<size_t>(g.num_nodes()));
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      Perm cand = Perm::from_images(img);
      CHECK(b.contains(cand) == (std::find(elems.begin(), elems.end(), cand) != elems.end()));
   }
}

TEST_CASE("orbit")
{
   auto gens = read_generators("(0 1)\n(0 1 2 3)\n");
   Bsgs s4 = schreier_sims(gens);
   CHECK(orbit(s4, 2) == std::vector<int>{0, 1, 2, 3});

   Bsgs triv = schreier_sims({}, {}, 5);
   CHECK(orbit(triv, 3) == std::vector<int>{3});

   // stabilizer of node 0 in Aut(C8): orbit of 2 is {2,6}
   Bsgs d8 = schreier_sims(graph_automorphisms(builtin_c8()), {}, 8);
   Bsgs stab0 = pointwise_stabilizer(d8, {0});
   CHECK(orbit(stab0, 2) == std::vector<int>{2, 6});

   // orbit independent of generator order
   auto rev = read_generators("(0 1 2 3 4 5 6 7)\n(1 7)(2 6)(3 5)\n");
   std::reverse(rev.begin(), rev.end());
   CHECK(orbit(schreier_sims(rev), 4) == orbit(d8, 4));
}

TEST_CASE("pointwise_stabilizer")
{
   auto s3gens = read_generators("(0 1)\n(0 1 2)\n");
   Bsgs s3 = schreier_sims(s3gens);
   Bsgs stab0 = pointwise_stabilizer(s3, {0});
   CHECK(stab0.order() == 2);
   CHECK(stab0.contains(Perm::from_images({0, 2, 1})));

   CHECK(pointwise_stabilizer(s3, {}).order() == 6);

   // Aut(C8) stabilizing node 0: only the reflection through 0
   Bsgs d8 = schreier_sims(graph_automorphisms(builtin_c8()), {}, 8);
   Bsgs stab = pointwise_stabilizer(d8, {0});
   CHECK(stab.order() == 2);
   // brute-force cross-check
   int count = 0;
   for (const Perm& e : brute_force_automorphisms(builtin_c8()))
      if (e(0) == 0)
         ++count;
   CHECK(count == 2);
}

TEST_CASE("orbit-stabilizer identity on small groups")
{
   std::mt19937 rng(13);
   for (int t = 0; t < 8; ++t)
   {
      Graph g = random_graph(8, 40, rng);
      Bsgs b = schreier_sims(graph_automorphisms(g), {}, 8);
      for (int v = 0; v < 8; v += 3)
      {
         Bsgs stab = pointwise_stabilizer(b, {v});
         CHECK(stab.order() * static_cast<long>(orbit(b, v).size()) == b.order());
      }
   }
}

TEST_CASE("graph_automorphisms")
{
   // K3 with unit weights: S3
   Graph k3 = disjoint_cliques(3, 1);
   CHECK(schreier_sims(graph_automorphisms(k3), {}, 3).order() == 6);

   // weighted path 0-1-2 with weights (1,2,1): swap endpoints only
   Graph path(3, {{0, 1}, {1, 2}});
   path.set_weight(1, 2);
   auto gens = graph_automorphisms(path);
   CHECK(schreier_sims(gens, {}, 3).order() == 2);

   // C8 unit weights: order 16 (cross-checked by brute force elsewhere)
   CHECK(schreier_sims(graph_automorphisms(builtin_c8()), {}, 8).order() == 16);

   // every generator is a weight-respecting automorphism
   std::mt19937 rng(21);
   for (int t = 0; t < 12; ++t)
   {
      Graph g = random_graph(9, 35, rng);
      std::uniform_int_distribution<int> dw(1, 2);
      for (int v = 0; v < g.num_nodes(); ++v)
         g.set_weight(v, dw(rng));
      for (const Perm& p : graph_automorphisms(g))
         CHECK(is_automorphism(g, p));
   }
}

TEST_CASE("graph_automorphisms equals brute force on small graphs")
{
   std::mt19937 rng(29);
   for (int t = 0; t < 15; ++t)
   {
      std::uniform_int_distribution<int> dn(4, 7), dp(20, 80);
      Graph g = random_graph(dn(rng), dp(rng), rng);
      Bsgs mine = schreier_sims(graph_automorphisms(g), {}, g.num_nodes());
      CHECK(mine.order() == static_cast<long>(brute_force_automorphisms(g).size()));
   }
}

TEST_CASE("pinned nodes become fixed points")
{
   Graph g = disjoint_cliques(2, 3); // three K2 components
   Bsgs full = schreier_sims(graph_automorphisms(g), {}, 6);
   CHECK(full.order() == 48); // (S2)^3 x S3
   Bsgs pinned = schreier_sims(graph_automorphisms(g, {0, 1}), {}, 6);
   for (const Perm& p : graph_automorphisms(g, {0, 1}))
   {
      CHECK(p(0) == 0);
      CHECK(p(1) == 1);
   }
   CHECK(pinned.order() == 8); // remaining two K2s swap and flip
}
