// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/bench.hpp"
#include "sst/generate.hpp"

#include "doctest.h"

using namespace sst;

TEST_CASE("shifted geometric mean, exact evaluation")
{
   // one sample: sgm = t by definition
   auto one = shifted_geometric_mean_exact({Rat(7)}, Rat(1));
   REQUIRE(one.has_value());
   CHECK(*one == 7);

   // {0,0} with shift 1: (1*1)^(1/2) - 1 = 0
   auto zz = shifted_geometric_mean_exact({Rat(0), Rat(0)}, Rat(1));
   REQUIRE(zz.has_value());
   CHECK(*zz == 0);

   // {1,7} with shift 1: (2*8)^(1/2) - 1 = 3
   auto pair = shifted_geometric_mean_exact({Rat(1), Rat(7)}, Rat(1));
   REQUIRE(pair.has_value());
   CHECK(*pair == 3);

   // three values, shift 1: (1*2*32)^(1/3) - 1 = 3
   auto triple = shifted_geometric_mean_exact({Rat(0), Rat(1), Rat(31)}, Rat(1));
   REQUIRE(triple.has_value());
   CHECK(*triple == 3);

   // node shift 100: (200*500*1250)^(1/3) - 100 = 400
   auto nodes = shifted_geometric_mean_exact({Rat(100), Rat(400), Rat(1150)}, Rat(100));
   REQUIRE(nodes.has_value());
   CHECK(*nodes == 400);

   // irrational cases are reported as such
   CHECK(!shifted_geometric_mean_exact({Rat(2), Rat(8)}, Rat(1)).has_value());
}

TEST_CASE("shifted geometric mean, double evaluation agrees")
{
   double v = shifted_geometric_mean({1.0, 7.0}, 1.0);
   CHECK(v == doctest::Approx(3.0));
   CHECK(shifted_geometric_mean({5.5}, 1.0) == doctest::Approx(5.5));
   CHECK_THROWS_AS(shifted_geometric_mean({-2.0}, 1.0), std::invalid_argument);
}

TEST_CASE("run_benchmark aggregates and cross-checks optima")
{
   std::vector<BenchInstance> instances;
   instances.push_back({"c8", builtin_c8()});
   instances.push_back({"fig4", builtin_fig4()});
   std::vector<std::string> settings{"default", "SST-pre-str", "SSTCC"};
   BenchReport rep = run_benchmark(instances, settings, 30.0, 2);

   REQUIRE(rep.rows.size() == 3);
   for (const BenchRow& row : rep.rows)
      CHECK(row.solved == 2);
   // identical optima across settings
   for (size_t ii = 0; ii < instances.size(); ++ii)
      for (size_t si = 1; si < settings.size(); ++si)
         CHECK(rep.optima[si][ii] == rep.optima[0][ii]);
   CHECK(*rep.optima[0][0] == 4);
   CHECK(*rep.optima[0][1] == 6);

   // CSV and table render
   std::string csv = rep.to_csv();
   CHECK(csv.find("setting,opt,") != std::string::npos);
   CHECK(csv.find("SST-pre-str") != std::string::npos);
   CHECK(rep.to_table().find("#opt") != std::string::npos);
}
