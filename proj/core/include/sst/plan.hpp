// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_PLAN_HPP
#define SST_PLAN_HPP

#include "sst/bsgs.hpp"
#include "sst/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sst
{

enum class LeaderPolicy
{
   FirstFree,  // smallest node id not yet a leader
   MinOrbit,   // first element of a smallest nontrivial orbit
   MaxOrbit,   // first element of a largest nontrivial orbit
   Stringent,  // leaders drawn from the pool of earlier orbit members
};

std::string to_string(LeaderPolicy p);
LeaderPolicy leader_policy_from_string(const std::string& s);

/// One pair cut -x_leader + x_follower <= 0.
struct SstCut
{
   int leader;
   int follower;
};

/// Strengthened cut -x_leader + sum_{f in clique} x_f <= 0 for a clique of
/// followers inside one orbit.
struct SstCliqueCut
{
   int leader;
   std::vector<int> clique; // sorted followers, pairwise adjacent
};

/// Ordered leaders with the orbit captured at selection time.  orbits[i] is
/// the orbit of leaders[i] in the pointwise stabilizer of the previous
/// leaders; followers are orbits[i] minus the leader.
struct SstPlan
{
   int degree = 0;
   std::vector<int> leaders;
   std::vector<std::vector<int>> orbits; // each sorted
   std::string policy = "explicit";

   bool empty() const { return leaders.empty(); }
   int num_cuts() const;
};

/// The SST algorithm with the given leader policy: select a leader, record
/// its orbit in the current stabilizer, stabilize, repeat.  Stops when the
/// working group is trivial and, for Stringent, the pool of earlier orbit
/// members is exhausted; run_to_full keeps going until every node is a
/// leader (remaining nodes appended in id order with singleton orbits).
SstPlan run_sst_algorithm(const Bsgs& group, LeaderPolicy policy, bool run_to_full = false);

/// Same algorithm with an explicit leader sequence.
SstPlan run_sst_algorithm(const Bsgs& group, const std::vector<int>& leaders);

/// Driver shared with interleaved presolving: leaders are drawn from the
/// `eligible` nodes only, and `on_step` runs after each selection (it may
/// shrink eligibility, e.g. when the deletion operation fires).  Orbits are
/// always recorded over all points.
SstPlan run_sst_algorithm_interleaved(
   const Bsgs& group, LeaderPolicy policy, bool run_to_full, std::vector<char> eligible,
   const std::function<void(int leader, const std::vector<int>& orbit, std::vector<char>& eligible)>&
      on_step);

/// True iff every leader was selected from the pool O'_i whenever the pool
/// was nonempty.  Replays the stabilizer chain; throws on degree mismatch or
/// a plan that is inconsistent with the group.
bool is_stringent(const SstPlan& plan, const Bsgs& group);

/// All pair cuts, ordered by (leader index, follower id).
std::vector<SstCut> sst_cuts(const SstPlan& plan);

/// For each leader, one cut per inclusionwise-maximal clique of the
/// subgraph induced by its followers.  Singleton cliques coincide with
/// plain SST cuts.
std::vector<SstCliqueCut> sst_clique_cuts(const SstPlan& plan, const Graph& g);

/// Audit format: one `leader <id> orbit <ids...>` line per step.
std::string serialize_plan(const SstPlan& plan);
SstPlan parse_plan(const std::string& text);

} // namespace sst

#endif
