// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/generate.hpp"
#include "sst/graph.hpp"

#include "doctest.h"

#include <numeric>
#include <random>

using namespace sst;

TEST_CASE("parse_dimacs basics")
{
   Graph p3 = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n");
   CHECK(p3.num_nodes() == 3);
   CHECK(p3.num_edges() == 2);
   CHECK(p3.adjacent(0, 1));
   CHECK(p3.adjacent(1, 2));
   CHECK(!p3.adjacent(0, 2));

   Graph k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3");
   CHECK(k3.num_edges() == 3);

   CHECK_THROWS_WITH_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), doctest::Contains("line 2"),
                        std::runtime_error);
   CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), std::runtime_error);             // edge before p
   CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 2 2\n"), std::runtime_error); // self-loop
   CHECK_THROWS_AS(parse_dimacs("c nothing else\n"), std::runtime_error);    // missing p

   // comments and duplicate edges
   Graph d = parse_dimacs("c hi\np edge 2 2\ne 1 2\ne 2 1\n");
   CHECK(d.num_edges() == 1);
}

TEST_CASE("dimacs round trip on canonical form")
{
   std::mt19937 rng(3);
   for (int t = 0; t < 20; ++t)
   {
      Graph g = random_graph(12, 30, rng);
      std::string text = emit_dimacs(g);
      Graph h = parse_dimacs(text);
      CHECK(emit_dimacs(h) == text);
   }
}

TEST_CASE("weights sidecar")
{
   Graph g(3);
   parse_weights("w 2 5\nw 3 -1\n", g);
   CHECK(g.weight(0) == 1);
   CHECK(g.weight(1) == 5);
   CHECK(g.weight(2) == -1);
   CHECK_THROWS_AS([&] { parse_weights("w 9 1\n", g); }(), std::runtime_error);
}

TEST_CASE("complement")
{
   Graph k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3");
   CHECK(complement(k3).num_edges() == 0);
   Graph e4(4);
   CHECK(complement(e4).num_edges() == 6);

   std::mt19937 rng(11);
   for (int t = 0; t < 10; ++t)
   {
      Graph g = random_graph(15, 40, rng);
      CHECK(complement(complement(g)) == g);
   }
}

TEST_CASE("is_bipartite")
{
   auto c8 = is_bipartite(cycle_graph(8));
   REQUIRE(c8.has_value());
   CHECK(c8->red == std::vector<int>{0, 2, 4, 6});
   CHECK(c8->blue == std::vector<int>{1, 3, 5, 7});

   CHECK(!is_bipartite(parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3")).has_value());
   CHECK(is_bipartite(builtin_c8()).has_value());

   // lowest id of each component is red
   Graph two(5, {{1, 2}, {3, 4}});
   auto bp = is_bipartite(two);
   REQUIRE(bp.has_value());
   CHECK(bp->color[0] == 0);
   CHECK(bp->color[1] == 0);
   CHECK(bp->color[3] == 0);
}

namespace
{

// independent oracle: a laminar interval model exists iff some rooted
// forest's ancestor closure equals the graph
bool tp_by_forest_search(const Graph& g)
{
   const int n = g.num_nodes();
   std::vector<int> parent(static_cast<size_t>(n), -1);
   auto is_anc = [&](int u, int v) { // u proper ancestor of v
      for (int p = parent[static_cast<size_t>(v)]; p >= 0; p = parent[static_cast<size_t>(p)])
         if (p == u)
            return true;
      return false;
   };
   auto acyclic = [&]() {
      for (int v = 0; v < n; ++v)
      {
         int steps = 0;
         for (int p = v; p >= 0; p = parent[static_cast<size_t>(p)])
            if (++steps > n + 1)
               return false;
      }
      return true;
   };
   auto closure_matches = [&]() {
      if (!acyclic())
         return false;
      for (int u = 0; u < n; ++u)
         for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != (is_anc(u, v) || is_anc(v, u)))
               return false;
      return true;
   };
   auto rec = [&](auto&& self, int v) -> bool {
      if (v == n)
         return closure_matches();
      for (int p = -1; p < n; ++p)
      {
         if (p == v)
            continue;
         parent[static_cast<size_t>(v)] = p;
         if (self(self, v + 1))
            return true;
      }
      parent[static_cast<size_t>(v)] = -1;
      return false;
   };
   return rec(rec, 0);
}

} // namespace

TEST_CASE("trivially perfect recognition matches the laminar-model search")
{
   // exhaustive on n <= 5
   for (int n = 1; n <= 5; ++n)
   {
      const int pairs = n * (n - 1) / 2;
      for (unsigned long mask = 0; mask < (1ul << pairs); ++mask)
      {
         Graph g(n);
         int bit = 0;
         for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
               if (mask >> bit & 1)
                  g.add_edge(u, v);
         CHECK(is_trivially_perfect(g) == tp_by_forest_search(g));
      }
   }
   // sampled on n in {6,7}
   std::mt19937 rng(17);
   for (int t = 0; t < 60; ++t)
   {
      std::uniform_int_distribution<int> dn(6, 7), dp(10, 90);
      Graph g = random_graph(dn(rng), dp(rng), rng);
      CHECK(is_trivially_perfect(g) == tp_by_forest_search(g));
   }
}

TEST_CASE("trivially perfect spec instances")
{
   CHECK(is_trivially_perfect(disjoint_cliques(2, 2))); // two disjoint K2
   CHECK(!is_trivially_perfect(builtin_fig6()));
   CHECK(!is_trivially_perfect(cycle_graph(4)));
   CHECK(is_trivially_perfect(builtin_fig4()));
}

TEST_CASE("tp certificate is a laminar model")
{
   std::mt19937 rng(23);
   for (int t = 0; t < 25; ++t)
   {
      Graph g = random_tp_graph(10, rng);
      auto cert = trivially_perfect_certificate(g);
      REQUIRE(cert.has_value());
      const auto& iv = cert->intervals;
      for (size_t u = 0; u < iv.size(); ++u)
         for (size_t v = u + 1; v < iv.size(); ++v)
         {
            CHECK(iv[u] != iv[v]); // pairwise distinct
            bool meet = iv[u].first < iv[v].second && iv[v].first < iv[u].second;
            bool nested = (iv[u].first < iv[v].first && iv[v].second < iv[u].second) ||
                          (iv[v].first < iv[u].first && iv[u].second < iv[v].second);
            CHECK(meet == g.adjacent(static_cast<int>(u), static_cast<int>(v)));
            if (meet)
               CHECK(nested); // laminar
         }
   }
}

TEST_CASE("out_forest structure")
{
   // K3 -> single directed path
   Graph k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3");
   OutForest f = out_forest(k3);
   CHECK(f.roots() == std::vector<int>{0});
   CHECK(f.parent[1] == 0);
   CHECK(f.parent[2] == 1);

   // two disjoint K2 -> two single arcs
   OutForest f2 = out_forest(disjoint_cliques(2, 2));
   CHECK(f2.roots().size() == 2);
   CHECK(f2.root_leaf_paths().size() == 2);

   // fig4: center is the root, branch heads below, leaves at the bottom
   OutForest f4 = out_forest(builtin_fig4());
   CHECK(f4.roots() == std::vector<int>{9});
   CHECK(f4.children[9] == std::vector<int>{6, 7, 8});
   CHECK(f4.children[6] == std::vector<int>{0, 1});
   CHECK(f4.children[7] == std::vector<int>{2, 3});
   CHECK(f4.children[8] == std::vector<int>{4, 5});

   CHECK_THROWS_AS(out_forest(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("root-leaf paths equal maximal cliques on TP graphs")
{
   std::mt19937 rng(31);
   for (int t = 0; t < 30; ++t)
   {
      std::uniform_int_distribution<int> dn(3, 14);
      Graph g = random_tp_graph(dn(rng), rng);
      auto paths = out_forest(g).root_leaf_paths();
      std::vector<Clique> from_paths;
      for (auto p : paths)
      {
         std::sort(p.begin(), p.end());
         from_paths.push_back(p);
      }
      std::sort(from_paths.begin(), from_paths.end());
      CHECK(from_paths == maximal_cliques(g));
   }
}

TEST_CASE("one_chains")
{
   // directed path of 3 nodes: one chain of length 3
   OutForest path;
   path.parent = {-1, 0, 1};
   path.children = {{1}, {2}, {}};
   auto c = one_chains(path);
   REQUIRE(c.size() == 1);
   CHECK(c[0] == std::vector<int>{0, 1, 2});

   // complete binary out-tree of depth 2: 7 singleton chains
   OutForest bin;
   bin.parent = {-1, 0, 0, 1, 1, 2, 2};
   bin.children = {{1, 2}, {3, 4}, {5, 6}, {}, {}, {}, {}};
   CHECK(one_chains(bin).size() == 7);

   // fig4 forest: root has out-degree 3, heads out-degree 2: all singletons
   auto c4 = one_chains(out_forest(builtin_fig4()));
   CHECK(c4.size() == 10);

   // every node in exactly one chain
   std::mt19937 rng(5);
   for (int t = 0; t < 20; ++t)
   {
      Graph g = random_tp_graph(12, rng);
      OutForest f = out_forest(g);
      std::vector<int> count(static_cast<size_t>(f.num_nodes()), 0);
      for (const auto& chain : one_chains(f))
         for (int v : chain)
            ++count[static_cast<size_t>(v)];
      for (int v = 0; v < f.num_nodes(); ++v)
         CHECK(count[static_cast<size_t>(v)] == 1);
   }
}

TEST_CASE("nodes of a 1-chain have equal degree and shared outside neighborhoods")
{
   std::mt19937 rng(41);
   for (int t = 0; t < 20; ++t)
   {
      Graph g = random_tp_graph(12, rng);
      OutForest f = out_forest(g);
      for (const auto& chain : one_chains(f))
      {
         for (size_t i = 1; i < chain.size(); ++i)
            CHECK(g.degree(chain[0]) == g.degree(chain[i]));
         std::vector<char> in_chain(static_cast<size_t>(g.num_nodes()), 0);
         for (int v : chain)
            in_chain[static_cast<size_t>(v)] = 1;
         auto outside = [&](int v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v))
               if (!in_chain[static_cast<size_t>(u)])
                  nb.push_back(u);
            return nb;
         };
         for (size_t i = 1; i < chain.size(); ++i)
            CHECK(outside(chain[0]) == outside(chain[i]));
      }
   }
}

TEST_CASE("maximal_cliques")
{
   Graph k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3");
   CHECK(maximal_cliques(k3) == std::vector<Clique>{{0, 1, 2}});

   Graph p3 = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3");
   CHECK(maximal_cliques(p3) == std::vector<Clique>{{0, 1}, {1, 2}});

   CHECK(maximal_cliques(cycle_graph(8)).size() == 8);
}

TEST_CASE("stability_number")
{
   auto all = [](const Graph& g) {
      std::vector<int> v(static_cast<size_t>(g.num_nodes()));
      std::iota(v.begin(), v.end(), 0);
      return v;
   };
   Graph k4 = disjoint_cliques(4, 1);
   CHECK(stability_number(k4, all(k4)) == 1);
   Graph c5 = cycle_graph(5);
   CHECK(stability_number(c5, all(c5)) == 2);
   Graph e6(6);
   CHECK(stability_number(e6, all(e6)) == 6);
   CHECK(stability_number(c5, {0, 1, 2}) == 2);
}
