// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_GENERATE_HPP
#define SST_GENERATE_HPP

#include "sst/graph.hpp"
#include "sst/reduction3dm.hpp"

#include <random>
#include <string>

namespace sst
{

/// Cycle graph C_n (nodes 0..n-1 around the cycle).
Graph cycle_graph(int n);

/// l node-disjoint cliques with m nodes each.
Graph disjoint_cliques(int m, int l);

/// The 8-cycle example graph, nodes 0..7 around the cycle.
Graph builtin_c8();

/// Ten-node trivially perfect example: universal center (id 9) over three
/// two-leaf branches 6:{0,1}, 7:{2,3}, 8:{4,5}.
Graph builtin_fig4();

/// Interval, not trivially perfect: triangle 0,1,2 with pendant 3 at 0 and
/// pendant 4 at 1 (the leader/follower pair of the counterexample).
Graph builtin_fig6();

/// Random trivially perfect graph (ancestor closure of a random laminar
/// forest with duplicated sibling subtrees for nontrivial symmetry).
Graph random_tp_graph(int n, std::mt19937& rng);

/// Random connected bipartite graph: random tree plus extra cross edges.
Graph random_bipartite_graph(int n, int extra_edges, std::mt19937& rng);

/// Random connected graph with edge probability p (percent).
Graph random_graph(int n, int edge_percent, std::mt19937& rng);

/// Random 3DM instance over ground sets of size k.
std::vector<Triple> random_triples(int k, int count, std::mt19937& rng);

/// JSON manifest of checked properties (tp/bipartite flags, counts, seed).
std::string instance_manifest(const Graph& g, const std::string& kind, unsigned seed);

} // namespace sst

#endif
