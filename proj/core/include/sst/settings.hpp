// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_SETTINGS_HPP
#define SST_SETTINGS_HPP

#include "sst/plan.hpp"

#include <string>
#include <vector>

namespace sst
{

/// Which static cut families go into the root LP.
enum class CutFamily
{
   None,
   Sst,       // plain SST cuts
   SstClique, // SST clique cuts (static enumeration)
   Both,
};

/// Solver configuration.  The eleven named settings replicate the
/// experimental variants; custom combinations are allowed through the flags.
struct Settings
{
   std::string name = "default";
   bool use_symmetry = false;
   LeaderPolicy policy = LeaderPolicy::MinOrbit;
   bool presolve = false;
   bool add_edges = true;
   CutFamily cuts = CutFamily::None;
   bool separate_sst_clique_cuts = false;
   bool separate_path_cuts = false;
   int resymmetrize = 0; // rounds of symmetry recomputation after presolving

   static Settings named(const std::string& name);
   static const std::vector<std::string>& all_names();
};

} // namespace sst

#endif
