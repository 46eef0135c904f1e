// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_LP_HPP
#define SST_LP_HPP

#include "sst/matrix.hpp"
#include "sst/rat.hpp"

#include <vector>

namespace sst
{

struct LpResult
{
   enum class Status
   {
      Optimal,
      Infeasible,
      Unbounded,
   };
   Status status = Status::Infeasible;
   Rat value = 0;
   std::vector<Rat> point;     // structural variables only
   std::vector<Rat> row_duals; // y >= 0 with A^T y ~ c at optimality
};

/// Exact maximization of objective over {A x <= b, lo <= x <= hi} with a
/// bounded-variable revised primal simplex (explicit rational basis inverse,
/// Bland's rule, two phases).  Deterministic.  Throws on dimension mismatch
/// or lo > hi.
LpResult solve_lp(const IneqSystem& sys, const std::vector<Rat>& objective);

/// Row-generation wrapper: solves with the base system, then repeatedly adds
/// the violated rows of `lazy` until none are violated.  The result equals
/// solve_lp on the full system.
LpResult solve_lp_lazy(IneqSystem base, const std::vector<LinIneq>& lazy,
                       const std::vector<Rat>& objective);

} // namespace sst

#endif
