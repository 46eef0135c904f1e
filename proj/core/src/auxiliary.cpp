// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/auxiliary.hpp"

#include "sst/rat.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace sst
{

AuxiliaryGraph build_auxiliary_graph(const Graph& g, const SstPlan& plan)
{
   const int n = g.num_nodes();
   if (plan.degree != n)
      throw std::invalid_argument("build_auxiliary_graph: plan/graph degree mismatch");
   const int k = static_cast<int>(plan.leaders.size());
   AuxiliaryGraph aux;
   aux.graph = Graph(n + k);
   for (int v = 0; v < n; ++v)
      aux.graph.set_weight(v, g.weight(v));
   for (auto [u, v] : g.edges())
      aux.graph.add_edge(u, v);
   for (int i = 0; i < k; ++i)
   {
      int vnode = n + i;
      aux.graph.set_weight(vnode, 0);
      aux.leader_node.push_back(vnode);
      for (int f : plan.orbits[static_cast<size_t>(i)])
         aux.graph.add_edge(vnode, f);
   }
   return aux;
}

namespace
{

// Dijkstra in the bipartite double cover from (s,0) to (s,1); returns the
// closed odd walk as a node sequence (first == last) or empty.
std::vector<int> min_odd_walk(const Graph& h, const std::vector<Rat>& w_node, int s, Rat& dist_out)
{
   const int n = h.num_nodes();
   const int nn = 2 * n;
   auto id = [n](int v, int side) { return v + side * n; };
   std::vector<Rat> dist(static_cast<size_t>(nn), Rat(-1));
   std::vector<int> pred(static_cast<size_t>(nn), -1);
   std::vector<char> settled(static_cast<size_t>(nn), 0);
   dist[static_cast<size_t>(id(s, 0))] = 0;

   // (dist, node); small graphs, linear scan is fine and deterministic
   for (;;)
   {
      int best = -1;
      for (int v = 0; v < nn; ++v)
         if (!settled[static_cast<size_t>(v)] && dist[static_cast<size_t>(v)] >= 0 &&
             (best < 0 || dist[static_cast<size_t>(v)] < dist[static_cast<size_t>(best)]))
            best = v;
      if (best < 0)
         break;
      settled[static_cast<size_t>(best)] = 1;
      int v = best % n, side = best / n;
      for (int u : h.neighbors(v))
      {
         // edge weight 1 - z_u - z_v, clamped at 0 (negative weight means a
         // violated edge/SST-cut row which separate() filters out anyway)
         Rat w = Rat(1) - w_node[static_cast<size_t>(u)] - w_node[static_cast<size_t>(v)];
         if (w < 0)
            w = 0;
         int to = id(u, 1 - side);
         Rat nd = dist[static_cast<size_t>(best)] + w;
         if (dist[static_cast<size_t>(to)] < 0 || nd < dist[static_cast<size_t>(to)])
         {
            dist[static_cast<size_t>(to)] = nd;
            pred[static_cast<size_t>(to)] = best;
         }
      }
   }
   int target = id(s, 1);
   if (dist[static_cast<size_t>(target)] < 0 || dist[static_cast<size_t>(target)] >= 1)
      return {};
   dist_out = dist[static_cast<size_t>(target)];
   std::vector<int> walk;
   for (int v = target; v >= 0; v = pred[static_cast<size_t>(v)])
      walk.push_back(v % n);
   std::reverse(walk.begin(), walk.end());
   return walk; // first == last == s, odd number of edges
}

Rat walk_weight(const std::vector<int>& walk, const std::vector<Rat>& z)
{
   Rat w = 0;
   for (size_t i = 0; i + 1 < walk.size(); ++i)
   {
      Rat e = Rat(1) - z[static_cast<size_t>(walk[i])] - z[static_cast<size_t>(walk[i + 1])];
      if (e < 0)
         e = 0;
      w += e;
   }
   return w;
}

// Splits a closed odd walk at a repeated vertex until it is a simple odd
// cycle; the odd part of any split has no larger weight sum.
std::vector<int> simplify_to_odd_cycle(std::vector<int> walk)
{
   for (;;)
   {
      std::map<int, size_t> seen;
      bool split = false;
      for (size_t i = 0; i + 1 < walk.size(); ++i)
      {
         auto it = seen.find(walk[i]);
         if (it == seen.end())
         {
            seen[walk[i]] = i;
            continue;
         }
         size_t j = it->second;
         std::vector<int> inner(walk.begin() + static_cast<long>(j), walk.begin() + static_cast<long>(i) + 1);
         std::vector<int> outer(walk.begin(), walk.begin() + static_cast<long>(j) + 1);
         outer.insert(outer.end(), walk.begin() + static_cast<long>(i) + 1, walk.end());
         walk = (inner.size() % 2 == 0) ? std::move(inner) : std::move(outer);
         split = true;
         break;
      }
      if (!split)
         return walk;
   }
}

} // namespace

std::vector<LinIneq> separate_sst_path_cuts(const std::vector<Rat>& xstar, const Graph& g,
                                            const SstPlan& plan, int max_cuts)
{
   const int n = g.num_nodes();
   if (static_cast<int>(xstar.size()) != n)
      throw std::invalid_argument("separate_sst_path_cuts: dimension mismatch");
   for (const Rat& v : xstar)
      if (v < 0 || v > 1)
         throw std::invalid_argument("separate_sst_path_cuts: xstar outside the unit box");

   AuxiliaryGraph aux = build_auxiliary_graph(g, plan);
   const int nn = aux.graph.num_nodes();
   std::vector<Rat> z(static_cast<size_t>(nn), Rat(0));
   for (int v = 0; v < n; ++v)
      z[static_cast<size_t>(v)] = xstar[static_cast<size_t>(v)];
   for (size_t i = 0; i < aux.leader_node.size(); ++i)
      z[static_cast<size_t>(aux.leader_node[i])] = Rat(1) - xstar[static_cast<size_t>(plan.leaders[i])];

   std::set<std::vector<int>> seen; // canonical cycle keys
   std::vector<std::pair<Rat, LinIneq>> found;

   for (int s = 0; s < nn; ++s)
   {
      Rat d;
      auto walk = min_odd_walk(aux.graph, z, s, d);
      if (walk.empty())
         continue;
      auto closed = simplify_to_odd_cycle(std::move(walk));
      if (closed.size() < 4 || walk_weight(closed, z) >= 1)
         continue;
      std::vector<int> cyc(closed.begin(), closed.end() - 1);
      std::vector<int> key = cyc;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second)
         continue;

      // project: sum_{v in C} z_v <= (|C|-1)/2 with z_{v_l} = 1 - x_l
      LinIneq ineq;
      std::map<int, Rat> coeff;
      int new_nodes = 0;
      for (int v : cyc)
      {
         if (v < n)
            coeff[v] += 1;
         else
         {
            coeff[plan.leaders[static_cast<size_t>(v - n)]] -= 1;
            ++new_nodes;
         }
      }
      ineq.rhs = rat(static_cast<long>(cyc.size()) - 1, 2) - new_nodes;
      for (auto& [v, c] : coeff)
         if (c != 0)
            ineq.terms.emplace_back(v, c);
      Rat viol = ineq.violation(xstar);
      if (viol > 0)
         found.emplace_back(viol, std::move(ineq));
   }

   std::stable_sort(found.begin(), found.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });
   std::vector<LinIneq> out;
   for (auto& [viol, ineq] : found)
   {
      if (static_cast<int>(out.size()) >= max_cuts)
         break;
      out.push_back(std::move(ineq));
   }
   return out;
}

std::vector<LinIneq> even_path_inequalities(const Graph& g, const SstPlan& plan)
{
   const int n = g.num_nodes();
   std::set<std::vector<std::pair<int, Rat>>> seen;
   std::vector<LinIneq> out;

   for (size_t li = 0; li < plan.leaders.size(); ++li)
   {
      int leader = plan.leaders[li];
      std::vector<char> follower(static_cast<size_t>(n), 0);
      for (int f : plan.orbits[li])
         if (f != leader)
            follower[static_cast<size_t>(f)] = 1;

      std::vector<int> path{leader};
      std::vector<char> on_path(static_cast<size_t>(n), 0);
      on_path[static_cast<size_t>(leader)] = 1;

      auto emit = [&]() {
         LinIneq ineq;
         std::map<int, Rat> coeff;
         for (int v : path)
            coeff[v] += 1;
         coeff[leader] -= 1;
         for (auto& [v, c] : coeff)
            if (c != 0)
               ineq.terms.emplace_back(v, c);
         ineq.rhs = rat(static_cast<long>(path.size()), 2) - 1;
         if (seen.insert(ineq.terms).second)
            out.push_back(std::move(ineq));
      };

      auto dfs = [&](auto&& self, int last) -> void {
         for (int w : g.neighbors(last))
         {
            if (on_path[static_cast<size_t>(w)])
               continue;
            // induced: w may touch only the current endpoint
            bool ok = true;
            for (size_t i = 0; i + 1 < path.size() && ok; ++i)
               if (g.adjacent(w, path[i]))
                  ok = false;
            if (!ok)
               continue;
            path.push_back(w);
            on_path[static_cast<size_t>(w)] = 1;
            if (follower[static_cast<size_t>(w)] && path.size() % 2 == 0)
               emit();
            self(self, w);
            on_path[static_cast<size_t>(w)] = 0;
            path.pop_back();
         }
      };
      dfs(dfs, leader);
   }
   return out;
}

std::vector<LinIneq> odd_cycle_inequalities(const Graph& g)
{
   const int n = g.num_nodes();
   std::vector<LinIneq> out;
   std::vector<int> path;
   std::vector<char> on_path(static_cast<size_t>(n), 0);

   // chordless cycles rooted at their minimum node, orientation fixed by
   // second node < last node
   auto dfs = [&](auto&& self, int start, int last) -> void {
      for (int w : g.neighbors(last))
      {
         if (w <= start)
         {
            if (w == start && path.size() >= 3 && path.size() % 2 == 1 && path[1] < path.back())
            {
               // closing edge; chordlessness of inner nodes vs start
               // (path[1] legitimately touches start)
               bool chord = false;
               for (size_t i = 2; i + 1 < path.size() && !chord; ++i)
                  if (g.adjacent(path[i], start))
                     chord = true;
               if (!chord)
               {
                  LinIneq ineq;
                  for (int v : path)
                     ineq.terms.emplace_back(v, Rat(1));
                  std::sort(ineq.terms.begin(), ineq.terms.end());
                  ineq.rhs = rat(static_cast<long>(path.size()) - 1, 2);
                  out.push_back(std::move(ineq));
               }
            }
            continue;
         }
         if (on_path[static_cast<size_t>(w)])
            continue;
         bool ok = true;
         for (size_t i = 0; i + 1 < path.size() && ok; ++i)
            if (i > 0 && g.adjacent(w, path[i]))
               ok = false;
         if (!ok)
            continue;
         path.push_back(w);
         on_path[static_cast<size_t>(w)] = 1;
         self(self, start, w);
         on_path[static_cast<size_t>(w)] = 0;
         path.pop_back();
      }
   };
   for (int s = 0; s < n; ++s)
   {
      path.assign(1, s);
      std::fill(on_path.begin(), on_path.end(), 0);
      on_path[static_cast<size_t>(s)] = 1;
      dfs(dfs, s, s);
   }
   return out;
}

} // namespace sst
