// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_BSGS_HPP
#define SST_BSGS_HPP

#include "sst/perm.hpp"
#include "sst/rat.hpp"

#include <optional>
#include <vector>

namespace sst
{

/// Base and strong generating set for a permutation group, with explicit
/// transversals.  Level i holds the generators that fix base[0..i-1]
/// pointwise together with the orbit of base[i] under them; the product of
/// the transversal sizes is the group order.
class Bsgs
{
public:
   struct Level
   {
      int base_point = -1;
      std::vector<Perm> gens;          // generators of this level's group
      std::vector<int> orbit;          // BFS discovery order, orbit[0] == base_point
      std::vector<Perm> reps;          // reps[k] maps base_point -> orbit[k]
      std::vector<int> where;          // point -> index in orbit, or -1
   };

   /// Trivial group on n points.
   explicit Bsgs(int n = 0) : degree_(n) {}

   int degree() const { return degree_; }
   const std::vector<int>& base() const { return base_; }
   const std::vector<Level>& levels() const { return levels_; }

   /// Generators of the whole group (level 0), empty for the trivial group.
   const std::vector<Perm>& generators() const;
   bool is_trivial() const;

   Int order() const;
   bool contains(const Perm& g) const;

   /// Transversal element of level `lvl` mapping the base point to `pt`;
   /// nullopt if pt is outside the orbit.
   std::optional<Perm> transversal_element(int lvl, int pt) const;

   friend Bsgs schreier_sims(const std::vector<Perm>& generators, const std::vector<int>& base_prefix,
                             int degree);
   friend Bsgs pointwise_stabilizer(const Bsgs& group, const std::vector<int>& pts);

private:
   int degree_ = 0;
   std::vector<int> base_;
   std::vector<Level> levels_;
   std::vector<Perm> no_gens_; // empty fallback for generators()
};

/// Deterministic Schreier-Sims: builds a BSGS for <generators>.  Base points
/// beyond the optional prefix are chosen as the smallest point moved at each
/// level.  `degree` is only needed when the generator list is empty.
/// Throws std::invalid_argument on degree mismatch or non-bijective input.
Bsgs schreier_sims(const std::vector<Perm>& generators, const std::vector<int>& base_prefix = {},
                   int degree = -1);

/// Full orbit of point i under the group, sorted.
std::vector<int> orbit(const Bsgs& group, int i);
std::vector<int> orbit_of(const std::vector<Perm>& gens, int i, int degree);

/// Pointwise stabilizer of `pts`, obtained by a base change (rebuild with
/// base prefix pts, then truncate the chain).
Bsgs pointwise_stabilizer(const Bsgs& group, const std::vector<int>& pts);

} // namespace sst

#endif
