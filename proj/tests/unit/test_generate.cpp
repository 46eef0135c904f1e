// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/generate.hpp"

#include "doctest.h"

#include <random>

using namespace sst;

TEST_CASE("builtins")
{
   Graph c8 = builtin_c8();
   CHECK(c8.num_nodes() == 8);
   CHECK(c8.num_edges() == 8);

   Graph f4 = builtin_fig4();
   CHECK(f4.num_nodes() == 10);
   CHECK(f4.degree(9) == 9); // universal center
   CHECK(f4.adjacent(6, 0));
   CHECK(f4.adjacent(6, 1));
   CHECK(!f4.adjacent(6, 7));
   CHECK(is_trivially_perfect(f4));

   Graph f6 = builtin_fig6();
   CHECK(f6.num_nodes() == 5);
   CHECK(f6.num_edges() == 5);
   CHECK(!is_trivially_perfect(f6));
}

TEST_CASE("generator contracts")
{
   std::mt19937 rng(191);
   for (int t = 0; t < 20; ++t)
   {
      Graph tp = random_tp_graph(10, rng);
      CHECK(tp.num_nodes() == 10);
      CHECK(is_trivially_perfect(tp));

      Graph bp = random_bipartite_graph(9, 3, rng);
      CHECK(bp.num_nodes() == 9);
      CHECK(is_bipartite(bp).has_value());
      // connected by construction (spanning-tree backbone)
      CHECK(bp.num_edges() >= 8);
   }

   Graph dc = disjoint_cliques(3, 2);
   CHECK(dc.num_nodes() == 6);
   CHECK(dc.num_edges() == 6); // two triangles
   CHECK(maximal_cliques(dc).size() == 2);

   CHECK(cycle_graph(5).num_edges() == 5);
   CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("random triples are valid and dedupe")
{
   std::mt19937 rng(193);
   auto ts = random_triples(2, 6, rng);
   for (const Triple& t : ts)
      for (int e : t)
      {
         CHECK(e >= 0);
         CHECK(e < 2);
      }
   for (size_t i = 0; i < ts.size(); ++i)
      for (size_t j = i + 1; j < ts.size(); ++j)
         CHECK(ts[i] != ts[j]);
}

TEST_CASE("manifest reflects checked properties")
{
   std::string m = instance_manifest(builtin_fig4(), "builtin-fig4", 7);
   CHECK(m.find("\"trivially_perfect\": true") != std::string::npos);
   CHECK(m.find("\"bipartite\": false") != std::string::npos);
   CHECK(m.find("\"seed\": 7") != std::string::npos);
   CHECK(m.find("\"nodes\": 10") != std::string::npos);
}
