// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_PRESOLVE_HPP
#define SST_PRESOLVE_HPP

#include "sst/plan.hpp"

namespace sst
{

struct PresolveReport
{
   std::vector<int> deleted;                    // nodes fixed to 0, sorted
   std::vector<std::pair<int, int>> added_edges; // in addition order, u < v
   int rounds = 0;
};

struct PresolveResult
{
   Graph graph;     // original node set; deleted nodes are isolated
   SstPlan plan;    // orbits in the original labeling
   PresolveReport report;
};

/// SST presolving interleaved with the SST algorithm: after each leader
/// selection, followers adjacent to the leader are deleted (fixed to 0); if
/// add_edges, every remaining follower is connected to all neighbors of the
/// leader.  Requires nonzero weights when add_edges is set.
PresolveResult presolve(const Graph& g, const Bsgs& group, LeaderPolicy policy, bool add_edges);

/// Same with an explicit leader sequence.
PresolveResult presolve(const Graph& g, const Bsgs& group, const std::vector<int>& leaders,
                        bool add_edges);

/// Replays only the deletion operation of the plan on g; returns the nodes
/// fixed to 0, sorted.
std::vector<int> deletion_fixings(const Graph& g, const SstPlan& plan);

} // namespace sst

#endif
