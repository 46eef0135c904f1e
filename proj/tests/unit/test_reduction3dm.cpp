// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/hull.hpp"
#include "sst/reduction3dm.hpp"

#include "doctest.h"

using namespace sst;

namespace
{

std::vector<LinIneq> cut_rows(const SstPlan& plan)
{
   std::vector<LinIneq> rows;
   for (const SstCut& c : sst_cuts(plan))
   {
      LinIneq r;
      r.terms.emplace_back(std::min(c.leader, c.follower), c.leader < c.follower ? Rat(-1) : Rat(1));
      r.terms.emplace_back(std::max(c.leader, c.follower), c.leader < c.follower ? Rat(1) : Rat(-1));
      r.rhs = 0;
      rows.push_back(r);
   }
   return rows;
}

} // namespace

TEST_CASE("reduction structure for k=1 with one triple")
{
   Reduction3dm r = reduction_3dm(1, {{{0, 0, 0}}});
   CHECK(r.columns() == 4);
   CHECK(r.graph.num_nodes() == 4);
   CHECK(r.graph.num_edges() == 0); // cliques of size |T| = 1
   // weights: -2 on (T,T), +1 on the three element columns
   CHECK(r.weights[0] == -2);
   CHECK(r.weights[1] == 1);
   CHECK(r.weights[2] == 1);
   CHECK(r.weights[3] == 1);
   // plan: single leader (T1,T1) with everything else as followers
   REQUIRE(r.plan.leaders == std::vector<int>{0});
   CHECK(r.plan.orbits[0] == std::vector<int>{0, 1, 2, 3});

   // matching exists: oracle max is 1 >= k
   HullOptimum opt = integer_hull_oracle(r.graph, cut_rows(r.plan), r.weights);
   CHECK(opt.value == 1);
   CHECK(has_3d_matching(1, {{{0, 0, 0}}}));
}

TEST_CASE("k=1 with no triples: max 0 < 1")
{
   Reduction3dm r = reduction_3dm(1, {});
   CHECK(r.graph.num_nodes() == 0);
   CHECK(!has_3d_matching(1, {}));
}

TEST_CASE("k=2 with a perfect matching pair")
{
   std::vector<Triple> ts{{{0, 0, 0}}, {{1, 1, 1}}};
   Reduction3dm r = reduction_3dm(2, ts);
   CHECK(r.num_triples == 2);
   CHECK(r.columns() == 8);
   CHECK(r.graph.num_nodes() == 16);
   // columns are cliques of size two
   CHECK(r.graph.adjacent(r.node(0, 3), r.node(1, 3)));
   CHECK(!r.graph.adjacent(r.node(0, 3), r.node(0, 4)));

   CHECK(has_3d_matching(2, ts));
   HullOptimum opt = integer_hull_oracle(r.graph, cut_rows(r.plan), r.weights);
   CHECK(opt.value >= 2);
}

TEST_CASE("k=2 without a matching")
{
   // both triples share the same x element
   std::vector<Triple> ts{{{0, 0, 0}}, {{0, 1, 1}}};
   CHECK(!has_3d_matching(2, ts));
   Reduction3dm r = reduction_3dm(2, ts);
   HullOptimum opt = integer_hull_oracle(r.graph, cut_rows(r.plan), r.weights);
   CHECK(opt.value < 2);
}

TEST_CASE("cuts follow the reduction equation")
{
   std::vector<Triple> ts{{{0, 0, 1}}, {{1, 1, 0}}};
   Reduction3dm r = reduction_3dm(2, ts);
   auto cuts = sst_cuts(r.plan);
   // leader (T_0,T_0): followers (T_0,b) for b = T_1 or an element: 7 cuts
   // leader (T_1,T_1): followers (T_1,b) for b an element only: 6 cuts
   CHECK(cuts.size() == 13);
   for (const SstCut& c : cuts)
   {
      int lrow = c.leader / r.columns(), lcol = c.leader % r.columns();
      int frow = c.follower / r.columns(), fcol = c.follower % r.columns();
      CHECK(lrow == frow);           // cuts stay inside one row
      CHECK(lrow == lcol);           // leader on the diagonal
      CHECK((fcol > lcol || fcol >= r.num_triples));
   }
}

TEST_CASE("malformed triples rejected")
{
   CHECK_THROWS_AS(reduction_3dm(1, {{{0, 1, 0}}}), std::invalid_argument);
   CHECK_THROWS_AS(reduction_3dm(-1, {}), std::invalid_argument);
}

TEST_CASE("debug dump renders the weight scheme")
{
   Reduction3dm r = reduction_3dm(1, {{{0, 0, 0}}});
   std::string dump = reduction_3dm_dump(r);
   CHECK(dump.find("-2 1 1 1") != std::string::npos);
   CHECK(dump.find("0 -> 1") != std::string::npos);
}
