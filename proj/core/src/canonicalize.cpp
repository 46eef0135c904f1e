// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/canonicalize.hpp"

#include <stdexcept>

namespace sst
{

std::vector<int> canonicalize(const std::vector<int>& x, const Bsgs& group, const SstPlan& plan)
{
   const int n = group.degree();
   if (static_cast<int>(x.size()) != n || plan.degree != n)
      throw std::invalid_argument("canonicalize: dimension mismatch");

   std::vector<int> y = x;
   Bsgs cur = group;
   for (size_t i = 0; i < plan.leaders.size(); ++i)
   {
      int leader = plan.leaders[i];
      // transversal of the leader's orbit in the current stabilizer
      Bsgs rebased = schreier_sims(cur.generators(), {leader}, n);
      const auto& lvl = rebased.levels().front();
      std::vector<int> orb = lvl.orbit;
      std::sort(orb.begin(), orb.end());
      if (orb != plan.orbits[i])
         throw std::invalid_argument("canonicalize: plan inconsistent with group");

      // argmax of y on the orbit, ties broken by smallest id
      int besti = -1;
      for (int v : orb)
         if (besti < 0 || y[static_cast<size_t>(v)] > y[static_cast<size_t>(besti)])
            besti = v;

      auto rep = rebased.transversal_element(0, besti); // maps leader -> besti
      Perm gamma = rep->inverse();                      // gamma(besti) = leader
      std::vector<int> z(y.size());
      for (int v = 0; v < n; ++v)
         z[static_cast<size_t>(gamma(v))] = y[static_cast<size_t>(v)];
      y = std::move(z);
      cur = pointwise_stabilizer(cur, {leader});
   }
   return y;
}

} // namespace sst
