// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_AUXILIARY_HPP
#define SST_AUXILIARY_HPP

#include "sst/plan.hpp"
#include "sst/rat.hpp"

#include <vector>

namespace sst
{

struct AuxiliaryGraph
{
   Graph graph;                 // V' = V + one node per leader, weights 0 on new nodes
   std::vector<int> leader_node; // leader index -> new node id
};

/// Extended-formulation graph G': new node v_l per leader, adjacent to the
/// whole orbit O_l (including l itself).
AuxiliaryGraph build_auxiliary_graph(const Graph& g, const SstPlan& plan);

/// Exact odd-cycle separation on G' with the lift y_{v_l} = 1 - x_l
/// (shortest paths in the bipartite double cover).  Violated cycles through
/// a v_l project to even leader-follower path inequalities
/// -x_l + sum_{v in P} x_v <= |V(P)|/2 - 1; cycles avoiding all v_l are
/// returned as plain odd-cycle cuts for g.  Most violated first, at most
/// max_cuts.  Throws when xstar leaves the unit box.
std::vector<LinIneq> separate_sst_path_cuts(const std::vector<Rat>& xstar, const Graph& g,
                                            const SstPlan& plan, int max_cuts = 50);

/// Brute-force family of all even leader-follower path inequalities
/// -x_l + sum_{v in P} x_v <= |V(P)|/2 - 1 over induced paths, the outer
/// description of P(G,S) for connected bipartite g.
std::vector<LinIneq> even_path_inequalities(const Graph& g, const SstPlan& plan);

/// All chordless odd-cycle inequalities sum_{v in C} x_v <= (|C|-1)/2.
std::vector<LinIneq> odd_cycle_inequalities(const Graph& g);

} // namespace sst

#endif
