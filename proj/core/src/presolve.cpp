// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/presolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace sst
{

namespace
{

// Leader selection never looks at the graph, so running the SST algorithm
// first and replaying deletion/addition round by round is the same as
// interleaving them.
PresolveResult apply_rounds(const Graph& g, SstPlan plan, bool add_edges)
{
   if (add_edges)
      for (int v = 0; v < g.num_nodes(); ++v)
         if (g.weight(v) == 0)
            throw std::invalid_argument("presolve: addition operation requires nonzero weights");

   PresolveResult res{g, std::move(plan), {}};
   std::vector<char> alive(static_cast<size_t>(g.num_nodes()), 1);

   for (size_t i = 0; i < res.plan.leaders.size(); ++i)
   {
      ++res.report.rounds;
      int leader = res.plan.leaders[i];
      if (!alive[static_cast<size_t>(leader)])
         continue; // no adjacency in the current graph, nothing to do
      // deletion operation: followers adjacent to their leader
      std::vector<int> doomed;
      for (int f : res.plan.orbits[i])
         if (f != leader && alive[static_cast<size_t>(f)] && res.graph.adjacent(leader, f))
            doomed.push_back(f);
      for (int f : doomed)
      {
         alive[static_cast<size_t>(f)] = 0;
         for (int w : std::vector<int>(res.graph.neighbors(f)))
            res.graph.remove_edge(f, w);
         res.report.deleted.push_back(f);
      }
      if (!add_edges)
         continue;
      // addition operation: connect surviving followers to the leader's
      // current neighborhood
      std::vector<int> nbrs(res.graph.neighbors(leader));
      for (int f : res.plan.orbits[i])
      {
         if (f == leader || !alive[static_cast<size_t>(f)])
            continue;
         for (int v : nbrs)
         {
            if (v == f || !alive[static_cast<size_t>(v)] || res.graph.adjacent(v, f))
               continue;
            res.graph.add_edge(v, f);
            res.report.added_edges.emplace_back(std::min(v, f), std::max(v, f));
         }
      }
   }
   std::sort(res.report.deleted.begin(), res.report.deleted.end());
   return res;
}

} // namespace

PresolveResult presolve(const Graph& g, const Bsgs& group, LeaderPolicy policy, bool add_edges)
{
   if (group.degree() != g.num_nodes())
      throw std::invalid_argument("presolve: group/graph degree mismatch");
   if (add_edges)
      for (int v = 0; v < g.num_nodes(); ++v)
         if (g.weight(v) == 0)
            throw std::invalid_argument("presolve: addition operation requires nonzero weights");

   // genuinely interleaved: deleted nodes drop out of leader candidacy
   PresolveResult res{g, {}, {}};
   auto on_step = [&](int leader, const std::vector<int>& orb, std::vector<char>& eligible) {
      ++res.report.rounds;
      std::vector<int> doomed;
      for (int f : orb)
         if (f != leader && eligible[static_cast<size_t>(f)] && res.graph.adjacent(leader, f))
            doomed.push_back(f);
      for (int f : doomed)
      {
         eligible[static_cast<size_t>(f)] = 0;
         for (int w : std::vector<int>(res.graph.neighbors(f)))
            res.graph.remove_edge(f, w);
         res.report.deleted.push_back(f);
      }
      if (!add_edges)
         return;
      std::vector<int> nbrs(res.graph.neighbors(leader));
      for (int f : orb)
      {
         if (f == leader || !eligible[static_cast<size_t>(f)])
            continue;
         for (int v : nbrs)
         {
            if (v == f || !eligible[static_cast<size_t>(v)] || res.graph.adjacent(v, f))
               continue;
            res.graph.add_edge(v, f);
            res.report.added_edges.emplace_back(std::min(v, f), std::max(v, f));
         }
      }
   };
   res.plan = run_sst_algorithm_interleaved(
      group, policy, false, std::vector<char>(static_cast<size_t>(g.num_nodes()), 1), on_step);
   std::sort(res.report.deleted.begin(), res.report.deleted.end());
   return res;
}

PresolveResult presolve(const Graph& g, const Bsgs& group, const std::vector<int>& leaders,
                        bool add_edges)
{
   if (group.degree() != g.num_nodes())
      throw std::invalid_argument("presolve: group/graph degree mismatch");
   return apply_rounds(g, run_sst_algorithm(group, leaders), add_edges);
}

std::vector<int> deletion_fixings(const Graph& g, const SstPlan& plan)
{
   if (plan.degree != g.num_nodes())
      throw std::invalid_argument("deletion_fixings: plan/graph degree mismatch");
   PresolveResult res = apply_rounds(g, plan, false);
   return res.report.deleted;
}

} // namespace sst
