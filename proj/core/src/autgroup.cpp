// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/autgroup.hpp"

#include "sst/bsgs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sst
{

bool is_automorphism(const Graph& g, const Perm& p)
{
   const int n = g.num_nodes();
   if (p.degree() != n)
      return false;
   for (int v = 0; v < n; ++v)
      if (g.weight(v) != g.weight(p(v)))
         return false;
   for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
         if (g.adjacent(u, v) != g.adjacent(p(u), p(v)))
            return false;
   return true;
}

namespace
{

/// Ordered partition of 0..n-1 into cells.  Refinement splits cells by
/// neighbor counts into other cells until equitable; the cell order is a
/// deterministic function of the input order, so two partitions that started
/// isomorphically stay aligned cell-by-cell.
struct Partition
{
   std::vector<std::vector<int>> cells;

   std::vector<size_t> sizes() const
   {
      std::vector<size_t> s;
      s.reserve(cells.size());
      for (const auto& c : cells)
         s.push_back(c.size());
      return s;
   }

   bool discrete() const
   {
      for (const auto& c : cells)
         if (c.size() > 1)
            return false;
      return true;
   }
};

void refine(const Graph& g, Partition& p)
{
   bool changed = true;
   while (changed)
   {
      changed = false;
      for (size_t w = 0; w < p.cells.size(); ++w)
      {
         std::vector<char> in_w(static_cast<size_t>(g.num_nodes()), 0);
         for (int v : p.cells[w])
            in_w[static_cast<size_t>(v)] = 1;
         for (size_t ci = 0; ci < p.cells.size(); ++ci)
         {
            if (p.cells[ci].size() <= 1)
               continue;
            std::map<int, std::vector<int>> by_count;
            for (int v : p.cells[ci])
            {
               int cnt = 0;
               for (int u : g.neighbors(v))
                  if (in_w[static_cast<size_t>(u)])
                     ++cnt;
               by_count[cnt].push_back(v);
            }
            if (by_count.size() <= 1)
               continue;
            std::vector<std::vector<int>> parts;
            for (auto& [cnt, nodes] : by_count)
               parts.push_back(std::move(nodes));
            p.cells[ci] = std::move(parts.front());
            p.cells.insert(p.cells.begin() + static_cast<long>(ci) + 1,
                           std::make_move_iterator(parts.begin() + 1), std::make_move_iterator(parts.end()));
            changed = true;
         }
         if (changed)
            break; // restart with fresh cell indexing
      }
   }
}

struct AutSearch
{
   const Graph& g;
   std::vector<Perm> auts;

   // Individualize v within its cell (cell becomes {v} followed by rest).
   static Partition individualize(const Partition& p, size_t cell, int v)
   {
      Partition q = p;
      auto& c = q.cells[cell];
      std::vector<int> rest;
      for (int x : c)
         if (x != v)
            rest.push_back(x);
      c = {v};
      q.cells.insert(q.cells.begin() + static_cast<long>(cell) + 1, std::move(rest));
      return q;
   }

   static size_t target_cell(const Partition& p)
   {
      size_t best = p.cells.size();
      for (size_t i = 0; i < p.cells.size(); ++i)
         if (p.cells[i].size() > 1 && (best == p.cells.size() || p.cells[i].size() < p.cells[best].size()))
            best = i;
      return best;
   }

   // Checks the partial map given by aligned singleton cells.
   bool partial_consistent(const Partition& a, const Partition& b) const
   {
      if (a.sizes() != b.sizes())
         return false;
      std::vector<std::pair<int, int>> singles;
      for (size_t i = 0; i < a.cells.size(); ++i)
         if (a.cells[i].size() == 1)
            singles.emplace_back(a.cells[i][0], b.cells[i][0]);
      for (size_t i = 0; i < singles.size(); ++i)
      {
         auto [u, pu] = singles[i];
         if (g.weight(u) != g.weight(pu))
            return false;
         for (size_t j = i + 1; j < singles.size(); ++j)
         {
            auto [v, pv] = singles[j];
            if (g.adjacent(u, v) != g.adjacent(pu, pv))
               return false;
         }
      }
      return true;
   }

   // Finds one automorphism consistent with the aligned partitions, or
   // nullopt.
   std::optional<Perm> find_one(Partition left, Partition right)
   {
      refine(g, left);
      refine(g, right);
      if (!partial_consistent(left, right))
         return std::nullopt;
      size_t cell = target_cell(left);
      if (cell == left.cells.size())
      {
         std::vector<int> img(static_cast<size_t>(g.num_nodes()));
         for (size_t i = 0; i < left.cells.size(); ++i)
            img[static_cast<size_t>(left.cells[i][0])] = right.cells[i][0];
         Perm p = Perm::from_images(std::move(img));
         if (is_automorphism(g, p))
            return p;
         return std::nullopt;
      }
      int u = *std::min_element(left.cells[cell].begin(), left.cells[cell].end());
      std::vector<int> cands = right.cells[cell];
      std::sort(cands.begin(), cands.end());
      for (int v : cands)
      {
         auto r = find_one(individualize(left, cell, u), individualize(right, cell, v));
         if (r)
            return r;
      }
      return std::nullopt;
   }

   // Walks the identity path, collecting generators of the stabilizer chain.
   void gen_search(Partition part, std::vector<int>& fixed)
   {
      refine(g, part);
      size_t cell = target_cell(part);
      if (cell == part.cells.size())
         return; // identity leaf
      int u = *std::min_element(part.cells[cell].begin(), part.cells[cell].end());

      fixed.push_back(u);
      gen_search(individualize(part, cell, u), fixed);
      fixed.pop_back();

      std::vector<int> cands = part.cells[cell];
      std::sort(cands.begin(), cands.end());
      std::vector<int> processed{u};
      for (int v : cands)
      {
         if (v == u)
            continue;
         // Skip v if some already-processed candidate reaches it under the
         // group found so far, restricted to elements fixing the prefix:
         // a successful (or failed) attempt at w settles all of orb(w).
         std::vector<Perm> stab_gens;
         for (const Perm& a : auts)
         {
            bool ok = true;
            for (int f : fixed)
               if (a(f) != f)
               {
                  ok = false;
                  break;
               }
            if (ok)
               stab_gens.push_back(a);
         }
         bool skip = false;
         for (int w : processed)
         {
            std::vector<int> reach = orbit_of(stab_gens, w, g.num_nodes());
            if (std::binary_search(reach.begin(), reach.end(), v))
            {
               skip = true;
               break;
            }
         }
         processed.push_back(v);
         if (skip)
            continue;
         auto p = find_one(individualize(part, cell, u), individualize(part, cell, v));
         if (p)
            auts.push_back(*p);
      }
   }
};

} // namespace

std::vector<Perm> graph_automorphisms(const Graph& g, const std::vector<int>& pinned)
{
   const int n = g.num_nodes();
   if (n == 0)
      return {};
   for (int v : pinned)
      if (v < 0 || v >= n)
         throw std::invalid_argument("graph_automorphisms: pinned node out of range");

   // initial cells: pinned nodes as singletons, then weight classes
   std::vector<char> is_pinned(static_cast<size_t>(n), 0);
   for (int v : pinned)
      is_pinned[static_cast<size_t>(v)] = 1;
   Partition part;
   std::vector<int> ps(pinned);
   std::sort(ps.begin(), ps.end());
   ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
   for (int v : ps)
      part.cells.push_back({v});
   std::map<long long, std::vector<int>> by_weight;
   for (int v = 0; v < n; ++v)
      if (!is_pinned[static_cast<size_t>(v)])
         by_weight[g.weight(v)].push_back(v);
   for (auto& [w, nodes] : by_weight)
      part.cells.push_back(std::move(nodes));

   AutSearch search{g, {}};
   std::vector<int> fixed;
   search.gen_search(part, fixed);
   return search.auts;
}

} // namespace sst
