// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_CANONICALIZE_HPP
#define SST_CANONICALIZE_HPP

#include "sst/plan.hpp"

#include <vector>

namespace sst
{

/// Maps x to a point of its group orbit that satisfies all cuts of the plan:
/// per level, an element of the current stabilizer moves the orbit maximum
/// (ties: smallest id) onto the leader.  Throws when the plan cannot be
/// replayed from the group.
std::vector<int> canonicalize(const std::vector<int>& x, const Bsgs& group, const SstPlan& plan);

} // namespace sst

#endif
