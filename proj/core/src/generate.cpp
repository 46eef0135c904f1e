// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/generate.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sst
{

Graph cycle_graph(int n)
{
   if (n < 3)
      throw std::invalid_argument("cycle_graph: n < 3");
   Graph g(n);
   for (int v = 0; v < n; ++v)
      g.add_edge(v, (v + 1) % n);
   return g;
}

Graph disjoint_cliques(int m, int l)
{
   if (m < 1 || l < 0)
      throw std::invalid_argument("disjoint_cliques: bad parameters");
   Graph g(m * l);
   for (int c = 0; c < l; ++c)
      for (int i = 0; i < m; ++i)
         for (int j = i + 1; j < m; ++j)
            g.add_edge(c * m + i, c * m + j);
   return g;
}

Graph builtin_c8()
{
   return cycle_graph(8);
}

Graph builtin_fig4()
{
   Graph g(10);
   const int center = 9;
   int branch[3] = {6, 7, 8};
   for (int b = 0; b < 3; ++b)
   {
      g.add_edge(branch[b], 2 * b);
      g.add_edge(branch[b], 2 * b + 1);
   }
   for (int v = 0; v < 9; ++v)
      g.add_edge(center, v);
   return g;
}

Graph builtin_fig6()
{
   Graph g(5);
   g.add_edge(0, 1);
   g.add_edge(1, 2);
   g.add_edge(0, 2);
   g.add_edge(0, 3); // pendant leader
   g.add_edge(1, 4); // pendant follower
   return g;
}

namespace
{

// Random forest shapes as nested vectors of child shapes; equal shapes on
// siblings create the symmetry the SST machinery needs to see.
struct Shape
{
   std::vector<Shape> children;
   int size() const
   {
      int s = 1;
      for (const Shape& c : children)
         s += c.size();
      return s;
   }
};

Shape random_shape(int n, std::mt19937& rng)
{
   Shape s;
   int rest = n - 1;
   while (rest > 0)
   {
      std::uniform_int_distribution<int> dsz(1, rest);
      int part = dsz(rng);
      Shape child = random_shape(part, rng);
      rest -= part;
      // duplicate the child while it fits, with decaying probability
      s.children.push_back(child);
      std::uniform_int_distribution<int> coin(0, 99);
      while (rest >= part && coin(rng) < 55)
      {
         s.children.push_back(child);
         rest -= part;
      }
   }
   return s;
}

void assign_ids(const Shape& s, int parent, std::vector<int>& parent_of)
{
   int my = static_cast<int>(parent_of.size());
   parent_of.push_back(parent);
   for (const Shape& c : s.children)
      assign_ids(c, my, parent_of);
}

} // namespace

Graph random_tp_graph(int n, std::mt19937& rng)
{
   if (n < 1)
      throw std::invalid_argument("random_tp_graph: n < 1");
   // possibly a forest of a few components
   std::vector<int> parent_of;
   int rest = n;
   while (rest > 0)
   {
      std::uniform_int_distribution<int> dsz((rest + 1) / 2, rest);
      int part = dsz(rng);
      Shape s = random_shape(part, rng);
      assign_ids(s, -1, parent_of);
      rest -= part;
   }
   const int nn = static_cast<int>(parent_of.size());
   Graph g(nn);
   for (int v = 0; v < nn; ++v)
      for (int a = parent_of[static_cast<size_t>(v)]; a >= 0; a = parent_of[static_cast<size_t>(a)])
         g.add_edge(v, a);
   return g;
}

Graph random_bipartite_graph(int n, int extra_edges, std::mt19937& rng)
{
   if (n < 2)
      throw std::invalid_argument("random_bipartite_graph: n < 2");
   Graph g(n);
   std::vector<int> side(static_cast<size_t>(n), 0);
   for (int v = 1; v < n; ++v)
   {
      std::uniform_int_distribution<int> dp(0, v - 1);
      int p = dp(rng);
      g.add_edge(v, p);
      side[static_cast<size_t>(v)] = 1 - side[static_cast<size_t>(p)];
   }
   int attempts = 0;
   int added = 0;
   while (added < extra_edges && attempts < 20 * extra_edges + 100)
   {
      ++attempts;
      std::uniform_int_distribution<int> dv(0, n - 1);
      int u = dv(rng), v = dv(rng);
      if (u == v || side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)] || g.adjacent(u, v))
         continue;
      g.add_edge(u, v);
      ++added;
   }
   return g;
}

Graph random_graph(int n, int edge_percent, std::mt19937& rng)
{
   Graph g(n);
   std::uniform_int_distribution<int> coin(0, 99);
   for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
         if (coin(rng) < edge_percent)
            g.add_edge(u, v);
   return g;
}

std::vector<Triple> random_triples(int k, int count, std::mt19937& rng)
{
   std::uniform_int_distribution<int> d(0, std::max(0, k - 1));
   std::vector<Triple> ts;
   for (int i = 0; i < count; ++i)
   {
      Triple t{d(rng), d(rng), d(rng)};
      if (std::find(ts.begin(), ts.end(), t) != ts.end())
         continue; // collections are sets of triples
      ts.push_back(t);
   }
   return ts;
}

std::string instance_manifest(const Graph& g, const std::string& kind, unsigned seed)
{
   nlohmann::json j;
   j["kind"] = kind;
   j["nodes"] = g.num_nodes();
   j["edges"] = g.num_edges();
   j["seed"] = seed;
   j["trivially_perfect"] = is_trivially_perfect(g);
   j["bipartite"] = is_bipartite(g).has_value();
   j["maximal_cliques"] = g.num_nodes() <= 64 ? static_cast<long>(maximal_cliques(g).size()) : -1;
   return j.dump(2) + "\n";
}

} // namespace sst
