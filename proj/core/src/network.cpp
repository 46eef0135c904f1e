// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/network.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sst
{

namespace
{

std::vector<std::vector<int>> normalize_sets(const std::vector<std::vector<int>>& sets)
{
   std::vector<std::vector<int>> out;
   for (const auto& s : sets)
   {
      if (s.size() < 2)
         continue;
      auto t = s;
      std::sort(t.begin(), t.end());
      out.push_back(std::move(t));
   }
   std::sort(out.begin(), out.end());
   return out;
}

void validate_family(const OutForest& f, const std::vector<std::vector<int>>& sets)
{
   std::vector<char> used(static_cast<size_t>(f.num_nodes()), 0);
   for (const auto& s : sets)
      for (int v : s)
      {
         if (v < 0 || v >= f.num_nodes())
            throw std::invalid_argument("predecessor family: node out of range");
         if (used[static_cast<size_t>(v)])
            throw std::invalid_argument("predecessor family: sets are not pairwise disjoint");
         used[static_cast<size_t>(v)] = 1;
      }
   for (const auto& s : sets)
      for (size_t i = 0; i < s.size(); ++i)
         for (size_t j = i + 1; j < s.size(); ++j)
            if (f.is_ancestor(s[i], s[j]) || f.is_ancestor(s[j], s[i]))
               throw std::invalid_argument("predecessor family: set contains comparable nodes");
}

} // namespace

bool check_predecessor_preserving(const OutForest& f, const std::vector<std::vector<int>>& sets)
{
   validate_family(f, sets);
   for (size_t i = 0; i < sets.size(); ++i)
      for (size_t j = 0; j < sets.size(); ++j)
      {
         if (i == j)
            continue;
         for (int v : sets[i])
         {
            bool some = false, all = true;
            for (int w : sets[j])
            {
               if (f.is_ancestor(v, w))
                  some = true;
               else
                  all = false;
            }
            if (some && !all)
               return false;
         }
      }
   return true;
}

NetworkTree build_network_tree(const OutForest& f, const std::vector<std::vector<int>>& sets_in,
                               const std::vector<int>& order_rank)
{
   const int n = f.num_nodes();
   if (static_cast<int>(order_rank.size()) != n)
      throw std::invalid_argument("build_network_tree: order_rank size mismatch");
   auto sets = normalize_sets(sets_in);
   if (!check_predecessor_preserving(f, sets))
      throw std::invalid_argument("build_network_tree: family is not predecessor preserving");

   NetworkTree t;
   t.num_nodes = n + 1;
   t.dummy = n;

   std::vector<int> set_of(static_cast<size_t>(n), -1);
   for (size_t si = 0; si < sets.size(); ++si)
      for (int v : sets[si])
         set_of[static_cast<size_t>(v)] = static_cast<int>(si);

   // set-level precedence: S1 before S2 iff some node of S1 is an ancestor
   // of (all of) S2
   const size_t ns = sets.size();
   std::vector<std::vector<char>> prec(ns, std::vector<char>(ns, 0));
   std::vector<std::vector<int>> prec_via(ns, std::vector<int>(ns, -1));
   for (size_t i = 0; i < ns; ++i)
      for (size_t j = 0; j < ns; ++j)
      {
         if (i == j)
            continue;
         for (int v : sets[i])
            if (f.is_ancestor(v, sets[j].front()))
            {
               prec[i][j] = 1;
               prec_via[i][j] = v; // unique: ancestors of a node form a chain
               break;
            }
      }

   // T1: d plus the family nodes, arcs along the direct-predecessor relation
   for (size_t j = 0; j < ns; ++j)
   {
      int direct = -1;
      for (size_t i = 0; i < ns; ++i)
      {
         if (!prec[i][j])
            continue;
         bool is_direct = true;
         for (size_t l = 0; l < ns && is_direct; ++l)
            if (l != i && l != j && prec[i][l] && prec[l][j])
               is_direct = false;
         if (is_direct)
         {
            direct = static_cast<int>(i);
            break; // unique by the forest structure
         }
      }
      if (direct >= 0)
      {
         for (int w : sets[j])
            t.arcs.push_back({prec_via[static_cast<size_t>(direct)][j], w, w});
      }
      else
      {
         for (int w : sets[j])
            t.arcs.push_back({t.dummy, w, w});
      }
   }

   // T2: remaining nodes, arcs reversed towards the nearest remaining
   // ancestor (skipping family nodes); component roots attach to d
   std::vector<char> in_family(static_cast<size_t>(n), 0);
   for (const auto& s : sets)
      for (int v : s)
         in_family[static_cast<size_t>(v)] = 1;
   for (int v = 0; v < n; ++v)
   {
      if (in_family[static_cast<size_t>(v)])
         continue;
      int p = f.parent[static_cast<size_t>(v)];
      while (p >= 0 && in_family[static_cast<size_t>(p)])
         p = f.parent[static_cast<size_t>(p)];
      if (p >= 0)
         t.arcs.push_back({v, p, v});
      else
         t.arcs.push_back({v, t.dummy, v}); // (r, d), labelled r
   }

   // co-arcs: one per root-leaf path ...
   auto paths = f.root_leaf_paths();
   for (size_t pi = 0; pi < paths.size(); ++pi)
   {
      int last_v2 = -1, last_v1 = -1;
      for (int v : paths[pi])
         (in_family[static_cast<size_t>(v)] ? last_v1 : last_v2) = v;
      // a path with no non-family node starts its network row at the dummy
      int tail = last_v2 >= 0 ? last_v2 : t.dummy;
      int head = last_v1 >= 0 ? last_v1 : t.dummy;
      t.co_arcs.push_back({tail, head, {true, static_cast<int>(pi), -1, -1}});
   }
   // ... plus one per ordering inequality inside each set
   for (const auto& s : sets)
   {
      auto by_rank = s;
      std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
         return order_rank[static_cast<size_t>(a)] < order_rank[static_cast<size_t>(b)];
      });
      for (size_t i = 0; i < by_rank.size(); ++i)
         for (size_t j = i + 1; j < by_rank.size(); ++j)
            t.co_arcs.push_back({by_rank[i], by_rank[j], {false, -1, by_rank[i], by_rank[j]}});
   }
   return t;
}

RatMatrix network_matrix(const NetworkTree& t)
{
   // root the tree at the dummy and precompute parent arcs
   const int n = t.num_nodes;
   std::vector<std::vector<std::pair<int, int>>> inc(static_cast<size_t>(n)); // (other endpoint, arc idx)
   for (size_t ai = 0; ai < t.arcs.size(); ++ai)
   {
      inc[static_cast<size_t>(t.arcs[ai].tail)].emplace_back(t.arcs[ai].head, static_cast<int>(ai));
      inc[static_cast<size_t>(t.arcs[ai].head)].emplace_back(t.arcs[ai].tail, static_cast<int>(ai));
   }
   std::vector<int> par(static_cast<size_t>(n), -2), par_arc(static_cast<size_t>(n), -1),
      depth(static_cast<size_t>(n), 0);
   std::vector<int> stack{t.dummy};
   par[static_cast<size_t>(t.dummy)] = -1;
   while (!stack.empty())
   {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, ai] : inc[static_cast<size_t>(v)])
         if (par[static_cast<size_t>(w)] == -2)
         {
            par[static_cast<size_t>(w)] = v;
            par_arc[static_cast<size_t>(w)] = ai;
            depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
            stack.push_back(w);
         }
   }

   // columns ordered by lambda label
   std::vector<int> order(t.arcs.size());
   std::iota(order.begin(), order.end(), 0);
   std::sort(order.begin(), order.end(),
             [&](int x, int y) { return t.arcs[static_cast<size_t>(x)].label < t.arcs[static_cast<size_t>(y)].label; });
   std::vector<int> col_of(t.arcs.size());
   for (size_t c = 0; c < order.size(); ++c)
      col_of[static_cast<size_t>(order[c])] = static_cast<int>(c);

   RatMatrix m(static_cast<int>(t.co_arcs.size()), static_cast<int>(t.arcs.size()));
   for (size_t r = 0; r < t.co_arcs.size(); ++r)
   {
      int u = t.co_arcs[r].tail, v = t.co_arcs[r].head;
      // walk u and v up to their LCA; arcs from u's side are traversed
      // child->parent, from v's side parent->child
      int a = u, b = v;
      std::vector<std::pair<int, bool>> used; // (arc idx, towards_parent_from_u_side)
      while (a != b)
      {
         if (depth[static_cast<size_t>(a)] >= depth[static_cast<size_t>(b)])
         {
            used.emplace_back(par_arc[static_cast<size_t>(a)], true);
            a = par[static_cast<size_t>(a)];
         }
         else
         {
            used.emplace_back(par_arc[static_cast<size_t>(b)], false);
            b = par[static_cast<size_t>(b)];
         }
      }
      for (auto [ai, from_u] : used)
      {
         const auto& arc = t.arcs[static_cast<size_t>(ai)];
         // traversal direction along the u->v path
         int walk_tail, walk_head;
         if (from_u)
         {
            // traversed child -> parent on u's side
            walk_tail = (par[static_cast<size_t>(arc.tail)] == arc.head) ? arc.tail : arc.head;
            walk_head = (walk_tail == arc.tail) ? arc.head : arc.tail;
         }
         else
         {
            // traversed parent -> child on v's side
            walk_head = (par[static_cast<size_t>(arc.tail)] == arc.head) ? arc.tail : arc.head;
            walk_tail = (walk_head == arc.tail) ? arc.head : arc.tail;
         }
         m.at(static_cast<int>(r), col_of[static_cast<size_t>(ai)]) =
            (walk_tail == arc.tail && walk_head == arc.head) ? 1 : -1;
      }
   }
   return m;
}

RatMatrix extended_path_matrix(const OutForest& f, const std::vector<std::vector<int>>& sets_in,
                               const std::vector<int>& order_rank)
{
   auto sets = normalize_sets(sets_in);
   auto paths = f.root_leaf_paths();
   int extra = 0;
   for (const auto& s : sets)
      extra += static_cast<int>(s.size() * (s.size() - 1) / 2);
   RatMatrix m(static_cast<int>(paths.size()) + extra, f.num_nodes());
   for (size_t r = 0; r < paths.size(); ++r)
      for (int v : paths[r])
         m.at(static_cast<int>(r), v) = 1;
   int r = static_cast<int>(paths.size());
   for (const auto& s : sets)
   {
      auto by_rank = s;
      std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
         return order_rank[static_cast<size_t>(a)] < order_rank[static_cast<size_t>(b)];
      });
      for (size_t i = 0; i < by_rank.size(); ++i)
         for (size_t j = i + 1; j < by_rank.size(); ++j)
         {
            m.at(r, by_rank[i]) = -1;
            m.at(r, by_rank[j]) = 1;
            ++r;
         }
   }
   return m;
}

} // namespace sst
