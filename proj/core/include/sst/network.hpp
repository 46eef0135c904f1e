// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_NETWORK_HPP
#define SST_NETWORK_HPP

#include "sst/graph.hpp"
#include "sst/matrix.hpp"

#include <string>
#include <vector>

namespace sst
{

/// True iff for all distinct sets S1, S2 of the family: either no node of S1
/// precedes S2, or every node of S1 that precedes some node of S2 precedes
/// all of S2.  Preconditions (throw std::invalid_argument): sets pairwise
/// disjoint and each internally incomparable in the forest.
bool check_predecessor_preserving(const OutForest& f, const std::vector<std::vector<int>>& sets);

/// Directed tree T' plus co-tree arc set used to realize the extended path
/// matrix as a network matrix.  Nodes are the forest's nodes plus the dummy
/// d = n; each tree arc carries the original node id it represents (lambda),
/// each co-arc the row it represents (mu).
struct NetworkTree
{
   struct TreeArc
   {
      int tail;
      int head;
      int label; // lambda: original node id
   };
   struct RowLabel
   {
      bool is_path;   // A^p row (root-leaf path) vs A^> ordering row
      int path_index; // index into OutForest::root_leaf_paths()
      int greater;    // ordering rows: -x_greater + x_lesser <= 0
      int lesser;
   };
   struct CoArc
   {
      int tail;
      int head;
      RowLabel mu;
   };

   int num_nodes = 0; // forest nodes + dummy
   int dummy = -1;
   std::vector<TreeArc> arcs;
   std::vector<CoArc> co_arcs;
};

/// Two-step construction from the proof of the network-matrix proposition:
/// T1 on the dummy plus the family's nodes (direct-predecessor structure),
/// T2 on the remaining nodes with reversed arcs bridging through T1 nodes,
/// joined by one (root, dummy) arc per component.  `order_rank[v]` gives the
/// strict total order (smaller rank = greater element).  Requires the family
/// to be predecessor preserving; sets with fewer than two nodes are ignored.
NetworkTree build_network_tree(const OutForest& f, const std::vector<std::vector<int>>& sets,
                               const std::vector<int>& order_rank);

/// Network matrix M[co_arc, tree_arc] in {0,+-1}: +1/-1 when the tree path
/// between the co-arc's endpoints traverses the tree arc forward/backward.
/// Columns are ordered by the tree arcs' lambda labels, so the result can be
/// compared entrywise against the extended path matrix.
RatMatrix network_matrix(const NetworkTree& t);

/// Path matrix of the forest (rows = root-leaf paths in DFS order) stacked
/// with all ordering rows -x_v + x_w (v,w in one set, v greater than w) --
/// the reference the network matrix must reproduce.
RatMatrix extended_path_matrix(const OutForest& f, const std::vector<std::vector<int>>& sets,
                               const std::vector<int>& order_rank);

} // namespace sst

#endif
