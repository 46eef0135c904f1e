// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_SOLVER_HPP
#define SST_SOLVER_HPP

#include "sst/presolve.hpp"
#include "sst/settings.hpp"

#include <map>
#include <optional>
#include <string>

namespace sst
{

struct SolveResult
{
   long long optimum = 0;
   std::vector<int> incumbent; // stable set, sorted
   long nodes = 0;             // branch-and-bound nodes (LP solves at nodes)
   double time_sec = 0;
   double presolve_time_sec = 0;
   std::map<std::string, long> cuts_added; // per family
   PresolveReport presolve;
   SstPlan plan;         // the plan driving cuts/presolve ({} for default)
   bool complete = true; // false on time limit
   long long dual_bound = 0;
   bool root_lp_integral = false;
};

/// Exact branch-and-cut for maximum-weight stable set.  Pipeline: optional
/// SST presolving, optional resymmetrization, static root cuts per the
/// setting, LP-based depth-first branch and bound with exact clique (and
/// optional SST clique / path cut) separation, precomputed neighborhood
/// cuts, branching on the node with most unfixed neighbors (x_v = 1 first).
/// `cutoff` seeds the incumbent value without a set.
SolveResult branch_and_cut(const Graph& g, const Settings& settings,
                           std::optional<long long> cutoff = std::nullopt,
                           double time_limit_sec = 0,
                           const std::vector<Perm>* generators = nullptr);

} // namespace sst

#endif
