// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/autgroup.hpp"
#include "sst/generate.hpp"
#include "sst/presolve.hpp"
#include "sst/tu.hpp"

#include "doctest.h"

#include <random>

using namespace sst;

namespace
{

Bsgs group_of(const Graph& g)
{
   return schreier_sims(graph_automorphisms(g), {}, g.num_nodes());
}

RatMatrix from_rows(const std::vector<std::vector<int>>& rows)
{
   RatMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
   for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < rows[r].size(); ++c)
         m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
   return m;
}

} // namespace

TEST_CASE("clique_matrix")
{
   CHECK(clique_matrix(disjoint_cliques(2, 2)) ==
         from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}}));
   CHECK(clique_matrix(disjoint_cliques(3, 1)) == from_rows({{1, 1, 1}}));
   Graph p3(3, {{0, 1}, {1, 2}});
   CHECK(clique_matrix(p3) == from_rows({{1, 1, 0}, {0, 1, 1}}));
}

TEST_CASE("determinants")
{
   CHECK(determinant_int(from_rows({{1, 1}, {1, -1}})) == -2);
   CHECK(determinant_int(from_rows({{2, 0}, {0, 3}})) == 6);
   CHECK(determinant_int(from_rows({{1, 2}, {2, 4}})) == 0);
   RatMatrix m(2, 2);
   m.at(0, 0) = Rat(1, 2);
   m.at(0, 1) = Rat(1, 3);
   m.at(1, 0) = Rat(1, 5);
   m.at(1, 1) = Rat(1, 7);
   CHECK(determinant(m) == Rat(1, 14) - Rat(1, 15));
}

TEST_CASE("tu verdicts on hand examples")
{
   auto bad = is_totally_unimodular(from_rows({{1, 1}, {1, -1}}));
   CHECK(!bad.is_tu);
   REQUIRE(bad.witness.has_value());
   CHECK((bad.witness->det == 2 || bad.witness->det == -2));

   // interval matrix of a path graph is TU
   auto good = is_totally_unimodular(from_rows({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
   CHECK(good.is_tu);
   CHECK(good.certified);

   CHECK_THROWS_AS(is_totally_unimodular(from_rows({{2}})), std::invalid_argument);
}

TEST_CASE("ghouila-houri agrees with determinant enumeration on random matrices")
{
   std::mt19937 rng(71);
   std::uniform_int_distribution<int> dsz(2, 6), dent(0, 5);
   for (int t = 0; t < 120; ++t)
   {
      int r = dsz(rng), c = dsz(rng);
      RatMatrix m(r, c);
      for (int i = 0; i < r; ++i)
         for (int j = 0; j < c; ++j)
         {
            int x = dent(rng);
            m.at(i, j) = x == 0 ? -1 : (x <= 2 ? 1 : 0);
         }
      auto gh = is_totally_unimodular(m);
      auto dets = tu_by_all_determinants(m);
      CHECK(gh.is_tu == dets.is_tu);
      if (!gh.is_tu)
      {
         REQUIRE(gh.witness.has_value());
         Int d = determinant_int(m.submatrix(gh.witness->rows, gh.witness->cols));
         CHECK(d == gh.witness->det);
         CHECK((d < -1 || d > 1));
      }
   }
}

TEST_CASE("exhaustive mode rejects matrices beyond the size cap")
{
   RatMatrix big(20, 20);
   for (int i = 0; i < 20; ++i)
      big.at(i, i) = 1;
   CHECK_THROWS_AS(is_totally_unimodular(big, TuMode::Exhaustive), std::invalid_argument);
   // sampled mode still works there
   CHECK(is_totally_unimodular(big, TuMode::Sampled, 50, 3).is_tu);
}

TEST_CASE("sampled mode finds planted violations and reports uncertainty")
{
   auto bad = is_totally_unimodular(from_rows({{1, 1}, {1, -1}}), TuMode::Sampled, 50, 7);
   CHECK(!bad.is_tu);
   CHECK(bad.witness.has_value());

   auto good = is_totally_unimodular(from_rows({{1, 1, 0}, {0, 1, 1}}), TuMode::Sampled, 50, 7);
   CHECK(good.is_tu);
   CHECK(!good.certified); // only "no counterexample found"
}

TEST_CASE("extend_for_theorem basics")
{
   // empty plan: just the clique matrix
   Graph g = disjoint_cliques(2, 2);
   SstPlan empty;
   empty.degree = 4;
   CHECK(extend_for_theorem(g, empty) == clique_matrix(g));

   // fig6 with its one cut: not TU, witness |det| >= 2
   Graph f6 = builtin_fig6();
   SstPlan p6 = run_sst_algorithm(group_of(f6), std::vector<int>{3});
   auto v6 = is_totally_unimodular(extend_for_theorem(f6, p6));
   CHECK(!v6.is_tu);
   REQUIRE(v6.witness.has_value());
   CHECK((v6.witness->det >= 2 || v6.witness->det <= -2));
}

TEST_CASE("deletion drops columns and empty rows")
{
   // adjacent leader/follower: the follower column disappears
   Graph kk = disjoint_cliques(2, 2);
   SstPlan plan = run_sst_algorithm(group_of(kk), std::vector<int>{0});
   // orbit of 0 is everything; follower 1 is adjacent and gets deleted
   RatMatrix m = extend_for_theorem(kk, plan);
   CHECK(m.cols() == 3); // node 1 dropped
   auto v = is_totally_unimodular(m);
   CHECK(v.is_tu);
}

TEST_CASE("stringent plans on TP graphs extend to TU matrices")
{
   std::mt19937 rng(83);
   for (int t = 0; t < 25; ++t)
   {
      std::uniform_int_distribution<int> dn(4, 13), dw(1, 2);
      Graph g = random_tp_graph(dn(rng), rng);
      for (int v = 0; v < g.num_nodes(); ++v)
         g.set_weight(v, dw(rng));
      Bsgs group = group_of(g);
      SstPlan plan = run_sst_algorithm(group, LeaderPolicy::Stringent);
      auto verdict = is_totally_unimodular(extend_for_theorem(g, plan));
      CHECK(verdict.is_tu);
   }
}

TEST_CASE("extended matrix TU iff presolved simple-cut matrix TU")
{
   std::mt19937 rng(97);
   for (int t = 0; t < 15; ++t)
   {
      std::uniform_int_distribution<int> dn(4, 11);
      Graph g = random_tp_graph(dn(rng), rng);
      Bsgs group = group_of(g);
      SstPlan plan = run_sst_algorithm(group, LeaderPolicy::Stringent);

      RatMatrix a = extend_for_theorem(g, plan);

      // A_S: clique matrix of the deletion graph plus plain SST cut rows
      std::vector<int> deleted = deletion_fixings(g, plan);
      std::vector<char> dead(static_cast<size_t>(g.num_nodes()), 0);
      for (int v : deleted)
         dead[static_cast<size_t>(v)] = 1;
      Graph gs = g;
      for (int v : deleted)
         for (int u : std::vector<int>(gs.neighbors(v)))
            gs.remove_edge(u, v);
      std::vector<int> keep;
      for (int v = 0; v < g.num_nodes(); ++v)
         if (!dead[static_cast<size_t>(v)])
            keep.push_back(v);
      auto [sub, map] = induced_subgraph(gs, keep);
      RatMatrix cm = clique_matrix(sub);
      std::vector<std::vector<int>> rows;
      for (int r = 0; r < cm.rows(); ++r)
      {
         std::vector<int> row(static_cast<size_t>(cm.cols()), 0);
         for (int c = 0; c < cm.cols(); ++c)
            row[static_cast<size_t>(c)] = static_cast<int>(cm.at(r, c).get_num().get_si());
         // skip empty rows (isolated deleted leftovers)
         bool nz = false;
         for (int x : row)
            nz |= x != 0;
         if (nz)
            rows.push_back(row);
      }
      std::vector<int> inv(static_cast<size_t>(g.num_nodes()), -1);
      for (size_t i = 0; i < map.size(); ++i)
         inv[static_cast<size_t>(map[i])] = static_cast<int>(i);
      for (const SstCut& c : sst_cuts(plan))
      {
         if (dead[static_cast<size_t>(c.leader)] || dead[static_cast<size_t>(c.follower)])
            continue;
         std::vector<int> row(static_cast<size_t>(cm.cols()), 0);
         row[static_cast<size_t>(inv[static_cast<size_t>(c.leader)])] = -1;
         row[static_cast<size_t>(inv[static_cast<size_t>(c.follower)])] = 1;
         rows.push_back(row);
      }
      auto va = is_totally_unimodular(a);
      auto vs = is_totally_unimodular(from_rows(rows));
      CHECK(va.is_tu == vs.is_tu);
   }
}

TEST_CASE("affine_rank")
{
   auto pt = [](std::initializer_list<long> v) {
      std::vector<Rat> p;
      for (long x : v)
         p.emplace_back(x);
      return p;
   };
   CHECK(affine_rank({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0})}) == 2);
   CHECK(affine_rank({pt({5, 5})}) == 0);
   CHECK(affine_rank({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}) == 3);
   CHECK_THROWS_AS(affine_rank({}), std::invalid_argument);
}

TEST_CASE("ineq system assembly")
{
   IneqSystem sys = IneqSystem::boxed(3);
   LinIneq r;
   r.terms = {{0, Rat(1)}, {2, Rat(-1)}};
   r.rhs = Rat(1, 2);
   sys.add_row(r);
   CHECK(sys.a.rows() == 1);
   CHECK(sys.a.at(0, 0) == 1);
   CHECK(sys.a.at(0, 2) == -1);
   sys.add_eq(r);
   CHECK(sys.a.rows() == 3);
   CHECK(sys.b[2] == -Rat(1, 2));
}

TEST_CASE("matrix text dump")
{
   RatMatrix m = from_rows({{1, -1}, {0, 1}});
   CHECK(m.to_text() == "1 -1\n0 1\n");
}
