// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_VERIFY_HPP
#define SST_VERIFY_HPP

#include <string>
#include <vector>

namespace sst
{

struct VerifyCase
{
   std::string name;
   bool pass = false;
   std::string detail; // counterexample dump or summary
};

struct VerifyReport
{
   std::string suite;
   std::vector<VerifyCase> cases;

   bool all_pass() const
   {
      for (const VerifyCase& c : cases)
         if (!c.pass)
            return false;
      return true;
   }
};

/// Named verification suites behind `ssttool verify`.
VerifyReport verify_tu(unsigned seed, int count);
VerifyReport verify_bipartite_hull(unsigned seed, int count, int max_n);
VerifyReport verify_presolve();
VerifyReport verify_canonical(unsigned seed, int count, int max_n);
VerifyReport verify_reduction(unsigned seed, int count);

} // namespace sst

#endif
