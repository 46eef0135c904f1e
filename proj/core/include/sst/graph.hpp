// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_GRAPH_HPP
#define SST_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sst
{

/// Undirected simple graph with integer node weights (default 1).
/// Nodes are 0..n-1.  Intended usage: build once (constructor or add_edge),
/// then treat as immutable; all query methods are const and thread-safe.
class Graph
{
public:
   Graph() = default;
   explicit Graph(int n);
   Graph(int n, const std::vector<std::pair<int, int>>& edges);

   int num_nodes() const { return n_; }
   int num_edges() const { return m_; }

   bool adjacent(int u, int v) const { return adj_[idx(u, v)] != 0; }
   const std::vector<int>& neighbors(int v) const { return nbrs_[static_cast<size_t>(v)]; }
   int degree(int v) const { return static_cast<int>(nbrs_[static_cast<size_t>(v)].size()); }

   long long weight(int v) const { return weights_[static_cast<size_t>(v)]; }
   void set_weight(int v, long long w) { weights_[static_cast<size_t>(v)] = w; }
   const std::vector<long long>& weights() const { return weights_; }

   /// Adds {u,v}; rejects self-loops and out-of-range ids, ignores duplicates.
   void add_edge(int u, int v);
   void remove_edge(int u, int v);

   /// Sorted list of all edges as (u,v) with u < v.
   std::vector<std::pair<int, int>> edges() const;

   bool operator==(const Graph& other) const;

private:
   size_t idx(int u, int v) const
   {
      return static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v);
   }

   int n_ = 0;
   int m_ = 0;
   std::vector<char> adj_;
   std::vector<std::vector<int>> nbrs_;
   std::vector<long long> weights_;
};

/// Out-forest representation of a trivially perfect graph: each component is
/// an arborescence, arcs point away from the root, and arcs follow strict
/// interval nesting with nothing strictly in between.
struct OutForest
{
   std::vector<int> parent;             // -1 for roots
   std::vector<std::vector<int>> children; // ordered

   int num_nodes() const { return static_cast<int>(parent.size()); }
   std::vector<int> roots() const;
   /// All root-to-leaf node sequences, in DFS order with children as stored.
   std::vector<std::vector<int>> root_leaf_paths() const;
   /// True iff u is a proper ancestor of v.
   bool is_ancestor(int u, int v) const;
};

/// Clique given as a sorted list of pairwise adjacent nodes.
using Clique = std::vector<int>;

/// Laminar interval model certifying trivial perfection.  Intervals are
/// pairwise distinct, and u,v are adjacent iff their intervals intersect
/// (equivalently: one contains the other).
struct TpCertificate
{
   std::vector<std::pair<long, long>> intervals;
};

// -- instance I/O ----------------------------------------------------------

/// Parses DIMACS edge format (`c` comments, one `p edge n m` line, `e u v`
/// lines with 1-based ids).  Duplicate edges are deduplicated.  Throws
/// std::runtime_error naming the offending line on malformed input.
Graph parse_dimacs(const std::string& text);

/// Canonical DIMACS form: sorted `e u v` lines with u < v, 1-based.
std::string emit_dimacs(const Graph& g);

/// Weights sidecar: lines `w <node> <int>` with 1-based node ids; nodes not
/// mentioned keep weight 1.
void parse_weights(const std::string& text, Graph& g);
std::string emit_weights(const Graph& g);

// -- operations ------------------------------------------------------------

Graph complement(const Graph& g);

/// Two-coloring (R,B) with all edges between classes, or nullopt if an odd
/// cycle exists.  Per component, the lowest-id node goes into R.
struct Bipartition
{
   std::vector<int> red;
   std::vector<int> blue;
   std::vector<int> color; // 0 = red, 1 = blue
};
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Recognizer via recursive universal-vertex peeling; returns a laminar
/// interval model on success.
std::optional<TpCertificate> trivially_perfect_certificate(const Graph& g);
bool is_trivially_perfect(const Graph& g);

/// Out-forest of a trivially perfect graph.  Ties among interchangeable
/// nodes (equal closed neighborhoods) are broken by node id.  Throws
/// std::invalid_argument on non-TP input.
OutForest out_forest(const Graph& g);

/// Maximal 1-chains of the forest: sequences along root-leaf paths whose
/// non-terminal nodes have out-degree 1.  Every node lies in exactly one.
std::vector<std::vector<int>> one_chains(const OutForest& f);

/// All inclusionwise-maximal cliques, each sorted, list sorted
/// lexicographically.  Pivoting backtracking; exponential in the worst case.
std::vector<Clique> maximal_cliques(const Graph& g);

/// Exact maximum stable-set size of the subgraph induced by `nodes`.
/// Pruned enumeration; intended for |nodes| <= ~30.
int stability_number(const Graph& g, const std::vector<int>& nodes);

/// Subgraph induced by `nodes` (sorted); second return maps new id -> old id.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const std::vector<int>& nodes);

} // namespace sst

#endif
