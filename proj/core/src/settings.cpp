// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/settings.hpp"

#include <stdexcept>

namespace sst
{

const std::vector<std::string>& Settings::all_names()
{
   static const std::vector<std::string> names = {
      "default",    "SST-pre-min", "SST-pre-max", "SST-pre-str",   "SST-pre-str-ne", "SSTC-min",
      "SSTC-max",   "SSTC-str",    "SSTCC",       "SSTCCC",        "SSTCC-pre-str",
   };
   return names;
}

Settings Settings::named(const std::string& name)
{
   Settings s;
   s.name = name;
   if (name == "default")
      return s;
   s.use_symmetry = true;
   if (name == "SST-pre-min")
   {
      s.presolve = true;
      s.policy = LeaderPolicy::MinOrbit;
   }
   else if (name == "SST-pre-max")
   {
      s.presolve = true;
      s.policy = LeaderPolicy::MaxOrbit;
   }
   else if (name == "SST-pre-str")
   {
      s.presolve = true;
      s.policy = LeaderPolicy::Stringent;
   }
   else if (name == "SST-pre-str-ne")
   {
      s.presolve = true;
      s.policy = LeaderPolicy::Stringent;
      s.add_edges = false;
   }
   else if (name == "SSTC-min")
   {
      s.cuts = CutFamily::Sst;
      s.policy = LeaderPolicy::MinOrbit;
   }
   else if (name == "SSTC-max")
   {
      s.cuts = CutFamily::Sst;
      s.policy = LeaderPolicy::MaxOrbit;
   }
   else if (name == "SSTC-str")
   {
      s.cuts = CutFamily::Sst;
      s.policy = LeaderPolicy::Stringent;
   }
   else if (name == "SSTCC")
   {
      s.separate_sst_clique_cuts = true;
      s.policy = LeaderPolicy::Stringent;
   }
   else if (name == "SSTCCC")
   {
      s.cuts = CutFamily::Sst;
      s.separate_sst_clique_cuts = true;
      s.policy = LeaderPolicy::Stringent;
   }
   else if (name == "SSTCC-pre-str")
   {
      s.presolve = true;
      s.separate_sst_clique_cuts = true;
      s.policy = LeaderPolicy::Stringent;
      s.resymmetrize = 1;
   }
   else
      throw std::invalid_argument("unknown setting '" + name + "'");
   return s;
}

} // namespace sst
