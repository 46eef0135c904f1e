// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sst
{

Graph::Graph(int n)
   : n_(n)
   , adj_(static_cast<size_t>(n) * static_cast<size_t>(n), 0)
   , nbrs_(static_cast<size_t>(n))
   , weights_(static_cast<size_t>(n), 1)
{
   if (n < 0)
      throw std::invalid_argument("Graph: negative node count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
   : Graph(n)
{
   for (auto [u, v] : edges)
      add_edge(u, v);
}

void Graph::add_edge(int u, int v)
{
   if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("Graph::add_edge: endpoint out of range");
   if (u == v)
      throw std::invalid_argument("Graph::add_edge: self-loop");
   if (adj_[idx(u, v)])
      return;
   adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
   nbrs_[static_cast<size_t>(u)].insert(
      std::lower_bound(nbrs_[static_cast<size_t>(u)].begin(), nbrs_[static_cast<size_t>(u)].end(), v), v);
   nbrs_[static_cast<size_t>(v)].insert(
      std::lower_bound(nbrs_[static_cast<size_t>(v)].begin(), nbrs_[static_cast<size_t>(v)].end(), u), u);
   ++m_;
}

void Graph::remove_edge(int u, int v)
{
   if (u < 0 || v < 0 || u >= n_ || v >= n_ || !adj_[idx(u, v)])
      return;
   adj_[idx(u, v)] = adj_[idx(v, u)] = 0;
   auto& nu = nbrs_[static_cast<size_t>(u)];
   auto& nv = nbrs_[static_cast<size_t>(v)];
   nu.erase(std::find(nu.begin(), nu.end(), v));
   nv.erase(std::find(nv.begin(), nv.end(), u));
   --m_;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
   std::vector<std::pair<int, int>> e;
   e.reserve(static_cast<size_t>(m_));
   for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
         if (u < v)
            e.emplace_back(u, v);
   return e;
}

bool Graph::operator==(const Graph& other) const
{
   return n_ == other.n_ && adj_ == other.adj_ && weights_ == other.weights_;
}

// -- OutForest ---------------------------------------------------------------

std::vector<int> OutForest::roots() const
{
   std::vector<int> r;
   for (int v = 0; v < num_nodes(); ++v)
      if (parent[static_cast<size_t>(v)] < 0)
         r.push_back(v);
   return r;
}

std::vector<std::vector<int>> OutForest::root_leaf_paths() const
{
   std::vector<std::vector<int>> paths;
   std::vector<int> cur;
   auto dfs = [&](auto&& self, int v) -> void {
      cur.push_back(v);
      if (children[static_cast<size_t>(v)].empty())
         paths.push_back(cur);
      else
         for (int c : children[static_cast<size_t>(v)])
            self(self, c);
      cur.pop_back();
   };
   for (int r : roots())
      dfs(dfs, r);
   return paths;
}

bool OutForest::is_ancestor(int u, int v) const
{
   int p = parent[static_cast<size_t>(v)];
   while (p >= 0)
   {
      if (p == u)
         return true;
      p = parent[static_cast<size_t>(p)];
   }
   return false;
}

// -- DIMACS ------------------------------------------------------------------

Graph parse_dimacs(const std::string& text)
{
   std::istringstream in(text);
   std::string line;
   int lineno = 0;
   bool have_p = false;
   int n = 0;
   Graph g;

   auto fail = [&](const std::string& what) {
      throw std::runtime_error("dimacs parse error at line " + std::to_string(lineno) + ": " + what);
   };

   while (std::getline(in, line))
   {
      ++lineno;
      std::istringstream ls(line);
      std::string tok;
      if (!(ls >> tok))
         continue; // blank line
      if (tok == "c")
         continue;
      if (tok == "p")
      {
         if (have_p)
            fail("duplicate p line");
         std::string fmt;
         long m = 0;
         if (!(ls >> fmt >> n >> m))
            fail("malformed p line");
         if (fmt != "edge" && fmt != "edges" && fmt != "col")
            fail("unsupported format '" + fmt + "'");
         if (n < 0)
            fail("negative node count");
         have_p = true;
         g = Graph(n);
         continue;
      }
      if (tok == "e")
      {
         if (!have_p)
            fail("edge before p line");
         long u = 0, v = 0;
         if (!(ls >> u >> v))
            fail("malformed edge line");
         if (u < 1 || v < 1 || u > n || v > n)
            fail("endpoint out of range");
         if (u == v)
            fail("self-loop");
         g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
         continue;
      }
      fail("unknown record '" + tok + "'");
   }
   ++lineno;
   if (!have_p)
      fail("missing p line");
   return g;
}

std::string emit_dimacs(const Graph& g)
{
   std::ostringstream out;
   auto e = g.edges();
   out << "p edge " << g.num_nodes() << ' ' << e.size() << '\n';
   for (auto [u, v] : e)
      out << "e " << u + 1 << ' ' << v + 1 << '\n';
   return out.str();
}

void parse_weights(const std::string& text, Graph& g)
{
   std::istringstream in(text);
   std::string line;
   int lineno = 0;
   while (std::getline(in, line))
   {
      ++lineno;
      std::istringstream ls(line);
      std::string tok;
      if (!(ls >> tok))
         continue;
      if (tok == "c")
         continue;
      if (tok != "w")
         throw std::runtime_error("weights parse error at line " + std::to_string(lineno) + ": unknown record");
      long v = 0;
      long long w = 0;
      if (!(ls >> v >> w) || v < 1 || v > g.num_nodes())
         throw std::runtime_error("weights parse error at line " + std::to_string(lineno) + ": bad node id");
      g.set_weight(static_cast<int>(v) - 1, w);
   }
}

std::string emit_weights(const Graph& g)
{
   std::ostringstream out;
   for (int v = 0; v < g.num_nodes(); ++v)
      out << "w " << v + 1 << ' ' << g.weight(v) << '\n';
   return out.str();
}

// -- basic operations --------------------------------------------------------

Graph complement(const Graph& g)
{
   const int n = g.num_nodes();
   Graph c(n);
   for (int v = 0; v < n; ++v)
      c.set_weight(v, g.weight(v));
   for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
         if (!g.adjacent(u, v))
            c.add_edge(u, v);
   return c;
}

std::optional<Bipartition> is_bipartite(const Graph& g)
{
   const int n = g.num_nodes();
   Bipartition bp;
   bp.color.assign(static_cast<size_t>(n), -1);
   for (int s = 0; s < n; ++s)
   {
      if (bp.color[static_cast<size_t>(s)] >= 0)
         continue;
      bp.color[static_cast<size_t>(s)] = 0; // lowest id of component -> red
      std::vector<int> queue{s};
      for (size_t qi = 0; qi < queue.size(); ++qi)
      {
         int u = queue[qi];
         for (int v : g.neighbors(u))
         {
            if (bp.color[static_cast<size_t>(v)] < 0)
            {
               bp.color[static_cast<size_t>(v)] = 1 - bp.color[static_cast<size_t>(u)];
               queue.push_back(v);
            }
            else if (bp.color[static_cast<size_t>(v)] == bp.color[static_cast<size_t>(u)])
               return std::nullopt;
         }
      }
   }
   for (int v = 0; v < n; ++v)
      (bp.color[static_cast<size_t>(v)] == 0 ? bp.red : bp.blue).push_back(v);
   return bp;
}

namespace
{

std::vector<std::vector<int>> connected_components(const Graph& g, const std::vector<int>& nodes)
{
   std::vector<char> in_set(static_cast<size_t>(g.num_nodes()), 0);
   for (int v : nodes)
      in_set[static_cast<size_t>(v)] = 1;
   std::vector<char> seen(static_cast<size_t>(g.num_nodes()), 0);
   std::vector<std::vector<int>> comps;
   for (int s : nodes)
   {
      if (seen[static_cast<size_t>(s)])
         continue;
      std::vector<int> comp{s};
      seen[static_cast<size_t>(s)] = 1;
      for (size_t qi = 0; qi < comp.size(); ++qi)
         for (int v : g.neighbors(comp[qi]))
            if (in_set[static_cast<size_t>(v)] && !seen[static_cast<size_t>(v)])
            {
               seen[static_cast<size_t>(v)] = 1;
               comp.push_back(v);
            }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
   }
   return comps;
}

// Universal-vertex peeling of one component; fills parent/children, or
// returns false if some encountered component has no universal vertex.
// Returns the head (first universal vertex) of the component's chain.
bool peel_component(const Graph& g, const std::vector<int>& comp, std::vector<int>& parent,
                    std::vector<std::vector<int>>& children, int& head)
{
   std::vector<char> in_comp(static_cast<size_t>(g.num_nodes()), 0);
   for (int v : comp)
      in_comp[static_cast<size_t>(v)] = 1;

   std::vector<int> universal;
   for (int v : comp)
   {
      int deg = 0;
      for (int w : g.neighbors(v))
         if (in_comp[static_cast<size_t>(w)])
            ++deg;
      if (deg == static_cast<int>(comp.size()) - 1)
         universal.push_back(v);
   }
   if (universal.empty())
      return false;
   // comp is sorted, so universal is sorted: chain in id order.
   for (size_t i = 0; i + 1 < universal.size(); ++i)
   {
      parent[static_cast<size_t>(universal[i + 1])] = universal[i];
      children[static_cast<size_t>(universal[i])].push_back(universal[i + 1]);
   }
   head = universal.front();
   int tail = universal.back();

   std::vector<int> rest;
   for (int v : comp)
      if (std::find(universal.begin(), universal.end(), v) == universal.end())
         rest.push_back(v);
   for (const auto& sub : connected_components(g, rest))
   {
      int sub_head = -1;
      if (!peel_component(g, sub, parent, children, sub_head))
         return false;
      parent[static_cast<size_t>(sub_head)] = tail;
      children[static_cast<size_t>(tail)].push_back(sub_head);
   }
   std::sort(children[static_cast<size_t>(tail)].begin(), children[static_cast<size_t>(tail)].end());
   return true;
}

std::optional<OutForest> try_out_forest(const Graph& g)
{
   const int n = g.num_nodes();
   OutForest f;
   f.parent.assign(static_cast<size_t>(n), -1);
   f.children.assign(static_cast<size_t>(n), {});
   std::vector<int> all(static_cast<size_t>(n));
   std::iota(all.begin(), all.end(), 0);
   for (const auto& comp : connected_components(g, all))
   {
      int head = -1;
      if (!peel_component(g, comp, f.parent, f.children, head))
         return std::nullopt;
   }
   return f;
}

} // namespace

std::optional<TpCertificate> trivially_perfect_certificate(const Graph& g)
{
   auto f = try_out_forest(g);
   if (!f)
      return std::nullopt;
   // Interval of a node spans its subtree; strict nesting via distinct ticks.
   TpCertificate cert;
   cert.intervals.assign(static_cast<size_t>(g.num_nodes()), {0, 0});
   long tick = 0;
   auto dfs = [&](auto&& self, int v) -> void {
      cert.intervals[static_cast<size_t>(v)].first = tick++;
      for (int c : f->children[static_cast<size_t>(v)])
         self(self, c);
      cert.intervals[static_cast<size_t>(v)].second = tick++;
   };
   for (int r : f->roots())
      dfs(dfs, r);
   return cert;
}

bool is_trivially_perfect(const Graph& g)
{
   return try_out_forest(g).has_value();
}

OutForest out_forest(const Graph& g)
{
   auto f = try_out_forest(g);
   if (!f)
      throw std::invalid_argument("out_forest: graph is not trivially perfect");
   return *f;
}

std::vector<std::vector<int>> one_chains(const OutForest& f)
{
   const int n = f.num_nodes();
   std::vector<std::vector<int>> chains;
   for (int v = 0; v < n; ++v)
   {
      int p = f.parent[static_cast<size_t>(v)];
      bool starts = p < 0 || f.children[static_cast<size_t>(p)].size() != 1;
      if (!starts)
         continue;
      std::vector<int> chain{v};
      int cur = v;
      while (f.children[static_cast<size_t>(cur)].size() == 1)
      {
         cur = f.children[static_cast<size_t>(cur)].front();
         chain.push_back(cur);
      }
      chains.push_back(std::move(chain));
   }
   return chains;
}

namespace
{

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<Clique>& out)
{
   if (p.empty() && x.empty())
   {
      out.push_back(r);
      return;
   }
   // pivot: vertex of P u X with most neighbors in P (tie: smallest id)
   int pivot = -1, best = -1;
   auto consider = [&](int u) {
      int cnt = 0;
      for (int v : p)
         if (g.adjacent(u, v))
            ++cnt;
      if (cnt > best)
      {
         best = cnt;
         pivot = u;
      }
   };
   for (int u : p)
      consider(u);
   for (int u : x)
      consider(u);

   std::vector<int> cands;
   for (int v : p)
      if (!g.adjacent(pivot, v))
         cands.push_back(v);

   for (int v : cands)
   {
      std::vector<int> np, nx;
      for (int w : p)
         if (g.adjacent(v, w))
            np.push_back(w);
      for (int w : x)
         if (g.adjacent(v, w))
            nx.push_back(w);
      r.push_back(v);
      bron_kerbosch(g, r, std::move(np), std::move(nx), out);
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
   }
}

} // namespace

std::vector<Clique> maximal_cliques(const Graph& g)
{
   std::vector<int> p(static_cast<size_t>(g.num_nodes()));
   std::iota(p.begin(), p.end(), 0);
   std::vector<Clique> out;
   std::vector<int> r;
   bron_kerbosch(g, r, std::move(p), {}, out);
   for (auto& c : out)
      std::sort(c.begin(), c.end());
   std::sort(out.begin(), out.end());
   return out;
}

namespace
{

// Max stable set size on the induced subgraph, DFS with greedy
// clique-cover bound.
struct StabilityContext
{
   const Graph& g;
   std::vector<int> order; // nodes, degree-descending
   int best = 0;

   void dfs(size_t pos, int chosen, std::vector<char>& excluded)
   {
      // bound: remaining nodes grouped by greedy cover classes would be
      // tighter; plain count suffices at the sizes we run.
      int avail = 0;
      for (size_t i = pos; i < order.size(); ++i)
         if (!excluded[i])
            ++avail;
      if (chosen + avail <= best)
         return;
      if (pos == order.size())
      {
         best = std::max(best, chosen);
         return;
      }
      if (excluded[pos])
      {
         dfs(pos + 1, chosen, excluded);
         return;
      }
      // include order[pos]
      std::vector<char> ex2 = excluded;
      for (size_t i = pos + 1; i < order.size(); ++i)
         if (g.adjacent(order[pos], order[i]))
            ex2[i] = 1;
      dfs(pos + 1, chosen + 1, ex2);
      // exclude
      excluded[pos] = 1;
      dfs(pos + 1, chosen, excluded);
      excluded[pos] = 0;
   }
};

} // namespace

int stability_number(const Graph& g, const std::vector<int>& nodes)
{
   StabilityContext ctx{g, nodes, 0};
   std::stable_sort(ctx.order.begin(), ctx.order.end(),
                    [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
   std::vector<char> excluded(ctx.order.size(), 0);
   ctx.dfs(0, 0, excluded);
   return ctx.best;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const std::vector<int>& nodes)
{
   std::vector<int> map = nodes;
   std::sort(map.begin(), map.end());
   Graph h(static_cast<int>(map.size()));
   for (size_t i = 0; i < map.size(); ++i)
   {
      h.set_weight(static_cast<int>(i), g.weight(map[i]));
      for (size_t j = i + 1; j < map.size(); ++j)
         if (g.adjacent(map[i], map[j]))
            h.add_edge(static_cast<int>(i), static_cast<int>(j));
   }
   return {h, map};
}

} // namespace sst
