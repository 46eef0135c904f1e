// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_HULL_HPP
#define SST_HULL_HPP

#include "sst/graph.hpp"
#include "sst/rat.hpp"

#include <vector>

namespace sst
{

struct HullOptimum
{
   Rat value;
   std::vector<int> argmax; // chosen nodes, sorted; lexicographically
                            // smallest among optima
};

/// Exact maximum of `objective` over the binary stable-set indicators of g
/// that satisfy all extra cuts.  Depth-first enumeration over nodes in
/// degree-descending order with positive-weight and cut-infeasibility
/// pruning; intended for n <= ~30.
HullOptimum integer_hull_oracle(const Graph& g, const std::vector<LinIneq>& extra_cuts,
                                const std::vector<Rat>& objective);

/// All stable sets of g satisfying the cuts, as indicator vectors.  Plain
/// subset enumeration; only for tiny n (used by verification suites).
std::vector<std::vector<int>> enumerate_cut_feasible_stable_sets(const Graph& g,
                                                                 const std::vector<LinIneq>& cuts);

} // namespace sst

#endif
