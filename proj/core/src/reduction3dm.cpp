// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/reduction3dm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sst
{

Reduction3dm reduction_3dm(int k, const std::vector<Triple>& triples)
{
   if (k < 0)
      throw std::invalid_argument("reduction_3dm: negative k");
   for (const Triple& t : triples)
      for (int e : t)
         if (e < 0 || e >= k)
            throw std::invalid_argument("reduction_3dm: triple element out of range");

   Reduction3dm r;
   r.num_triples = static_cast<int>(triples.size());
   r.k = k;
   const int m = r.num_triples;
   const int cols = r.columns();
   r.graph = Graph(m * cols);

   // one clique per column
   for (int c = 0; c < cols; ++c)
      for (int i = 0; i < m; ++i)
         for (int j = i + 1; j < m; ++j)
            r.graph.add_edge(r.node(i, c), r.node(j, c));

   r.weights.assign(static_cast<size_t>(m * cols), Rat(0));
   for (int i = 0; i < m; ++i)
   {
      r.weights[static_cast<size_t>(r.node(i, i))] = Rat(-2);
      const Triple& t = triples[static_cast<size_t>(i)];
      r.weights[static_cast<size_t>(r.node(i, m + t[0]))] = Rat(1);
      r.weights[static_cast<size_t>(r.node(i, m + k + t[1]))] = Rat(1);
      r.weights[static_cast<size_t>(r.node(i, m + 2 * k + t[2]))] = Rat(1);
   }

   r.plan.degree = m * cols;
   r.plan.policy = "explicit";
   for (int i = 0; i < m; ++i)
   {
      r.plan.leaders.push_back(r.node(i, i));
      std::vector<int> orb;
      orb.push_back(r.node(i, i));
      for (int j = i + 1; j < m; ++j)
         orb.push_back(r.node(i, j));
      for (int e = 0; e < 3 * k; ++e)
         orb.push_back(r.node(i, m + e));
      std::sort(orb.begin(), orb.end());
      r.plan.orbits.push_back(std::move(orb));
   }
   return r;
}

std::string reduction_3dm_dump(const Reduction3dm& r)
{
   std::ostringstream out;
   const int m = r.num_triples;
   const int cols = r.columns();
   out << "rows: triples T_0..T_" << m - 1 << "; cols: T_0..T_" << m - 1 << " | x_0..x_" << r.k - 1
       << " | y_0..y_" << r.k - 1 << " | z_0..z_" << r.k - 1 << "\n";
   for (int i = 0; i < m; ++i)
   {
      for (int c = 0; c < cols; ++c)
         out << (c ? " " : "") << to_string(r.weights[static_cast<size_t>(r.node(i, c))]);
      out << '\n';
   }
   out << "cuts (leader -> follower):\n";
   for (const SstCut& cut : sst_cuts(r.plan))
      out << "  " << cut.leader << " -> " << cut.follower << '\n';
   return out.str();
}

bool has_3d_matching(int k, const std::vector<Triple>& triples)
{
   const int m = static_cast<int>(triples.size());
   // brute force over triple subsets; instances here are tiny
   for (unsigned long mask = 0; mask < (1ul << m); ++mask)
   {
      if (__builtin_popcountl(mask) != k)
         continue;
      std::vector<char> used(static_cast<size_t>(3 * k), 0);
      bool ok = true;
      for (int i = 0; i < m && ok; ++i)
      {
         if (!(mask >> i & 1))
            continue;
         const Triple& t = triples[static_cast<size_t>(i)];
         int ids[3] = {t[0], k + t[1], 2 * k + t[2]};
         for (int id : ids)
         {
            if (used[static_cast<size_t>(id)])
            {
               ok = false;
               break;
            }
            used[static_cast<size_t>(id)] = 1;
         }
      }
      if (ok)
         return true;
   }
   return k == 0;
}

} // namespace sst
