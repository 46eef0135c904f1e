// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_REDUCTION3DM_HPP
#define SST_REDUCTION3DM_HPP

#include "sst/plan.hpp"
#include "sst/rat.hpp"

#include <array>
#include <string>
#include <vector>

namespace sst
{

/// Triple with one element index from each of X, Y, Z (0-based, < k).
using Triple = std::array<int, 3>;

struct Reduction3dm
{
   Graph graph;                 // |T| + 3k disjoint cliques of size |T|
   std::vector<Rat> weights;    // w_{T,b} in {-2, 1, 0}, row-major
   SstPlan plan;                // i-th leader (T_i, T_i)
   int num_triples = 0;
   int k = 0;

   int columns() const { return num_triples + 3 * k; }
   int node(int row, int col) const { return row * columns() + col; }
};

/// Hardness-construction generator: column cliques over the matrix of
/// variables x_{T,b}, weights -2 on (T,T), +1 on (T,b) for b in T, and the
/// plan whose i-th leader is (T_i,T_i) with followers (T_i,b) for b = T_j
/// with j > i or b an element.  Throws on malformed triples.
Reduction3dm reduction_3dm(int k, const std::vector<Triple>& triples);

/// Text rendering of the weight matrix and cut arrows (debug dump).
std::string reduction_3dm_dump(const Reduction3dm& r);

/// Independent check over all triple subsets: does a 3D-matching exist?
bool has_3d_matching(int k, const std::vector<Triple>& triples);

} // namespace sst

#endif
