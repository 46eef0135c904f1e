// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_AUTGROUP_HPP
#define SST_AUTGROUP_HPP

#include "sst/graph.hpp"
#include "sst/perm.hpp"

#include <vector>

namespace sst
{

/// Generating set of the weight-respecting automorphism group, found by
/// equitable-partition refinement plus backtracking.  Nodes listed in
/// `pinned` are forced into singleton cells (used after presolving to keep
/// deleted nodes out of the symmetry).  Desk-scale search; soft cap n ~500.
/// The empty list means the group is trivial.
std::vector<Perm> graph_automorphisms(const Graph& g, const std::vector<int>& pinned = {});

/// Exhaustive check that `p` maps edges to edges, non-edges to non-edges and
/// preserves node weights.
bool is_automorphism(const Graph& g, const Perm& p);

} // namespace sst

#endif
