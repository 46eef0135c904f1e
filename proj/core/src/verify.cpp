// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/verify.hpp"

#include "sst/autgroup.hpp"
#include "sst/auxiliary.hpp"
#include "sst/canonicalize.hpp"
#include "sst/generate.hpp"
#include "sst/presolve.hpp"
#include "sst/hull.hpp"
#include "sst/lp.hpp"
#include "sst/tu.hpp"

#include <random>
#include <sstream>

namespace sst
{

namespace
{

Bsgs group_of(const Graph& g)
{
   return schreier_sims(graph_automorphisms(g), {}, g.num_nodes());
}

std::vector<LinIneq> cut_rows(const SstPlan& plan)
{
   std::vector<LinIneq> rows;
   for (const SstCut& c : sst_cuts(plan))
   {
      LinIneq r;
      if (c.leader < c.follower)
      {
         r.terms.emplace_back(c.leader, Rat(-1));
         r.terms.emplace_back(c.follower, Rat(1));
      }
      else
      {
         r.terms.emplace_back(c.follower, Rat(1));
         r.terms.emplace_back(c.leader, Rat(-1));
      }
      r.rhs = 0;
      rows.push_back(std::move(r));
   }
   return rows;
}

} // namespace

VerifyReport verify_tu(unsigned seed, int count)
{
   VerifyReport rep;
   rep.suite = "tu";

   // control: fig4 with the non-stringent plan (leaders 6 then 2) is not TU
   {
      Graph g = builtin_fig4();
      SstPlan plan = run_sst_algorithm(group_of(g), std::vector<int>{6, 2});
      auto verdict = is_totally_unimodular(extend_for_theorem(g, plan));
      VerifyCase c{"fig4-non-stringent-not-tu", !verdict.is_tu,
                   verdict.witness ? verdict.witness->to_text() : "unexpectedly TU"};
      rep.cases.push_back(c);
   }
   // control: fig6 interval graph with one SST cut is not TU
   {
      Graph g = builtin_fig6();
      SstPlan plan = run_sst_algorithm(group_of(g), std::vector<int>{3});
      auto verdict = is_totally_unimodular(extend_for_theorem(g, plan));
      rep.cases.push_back({"fig6-not-tu", !verdict.is_tu,
                           verdict.witness ? verdict.witness->to_text() : "unexpectedly TU"});
   }
   // random TP graphs with stringent plans stay TU
   std::mt19937 rng(seed);
   for (int i = 0; i < count; ++i)
   {
      std::uniform_int_distribution<int> dn(4, 14);
      Graph g = random_tp_graph(dn(rng), rng);
      SstPlan plan = run_sst_algorithm(group_of(g), LeaderPolicy::Stringent);
      auto verdict = is_totally_unimodular(extend_for_theorem(g, plan));
      std::ostringstream name;
      name << "tp-stringent-" << i << "-n" << g.num_nodes();
      rep.cases.push_back({name.str(), verdict.is_tu,
                           verdict.is_tu ? "" : verdict.witness->to_text()});
   }
   return rep;
}

VerifyReport verify_bipartite_hull(unsigned seed, int count, int max_n)
{
   VerifyReport rep;
   rep.suite = "bipartite-hull";
   std::mt19937 rng(seed);
   for (int i = 0; i < count; ++i)
   {
      std::uniform_int_distribution<int> dn(4, max_n);
      int n = dn(rng);
      std::uniform_int_distribution<int> de(0, n / 2);
      Graph g = random_bipartite_graph(n, de(rng), rng);
      SstPlan plan = run_sst_algorithm(group_of(g), LeaderPolicy::MinOrbit);

      auto cuts = cut_rows(plan);
      auto paths = even_path_inequalities(g, plan);
      IneqSystem base = IneqSystem::boxed(n);
      for (auto [u, v] : g.edges())
      {
         LinIneq e;
         e.terms.emplace_back(u, Rat(1));
         e.terms.emplace_back(v, Rat(1));
         e.rhs = 1;
         base.add_row(e);
      }
      for (const LinIneq& r : cuts)
         base.add_row(r);
      std::vector<LinIneq> lazy = paths;

      bool ok = true;
      std::string detail;
      std::uniform_int_distribution<int> dw(-3, 5);
      for (int t = 0; t < 20 && ok; ++t)
      {
         std::vector<Rat> obj(static_cast<size_t>(n));
         for (int v = 0; v < n; ++v)
            obj[static_cast<size_t>(v)] = dw(rng);
         LpResult lp = solve_lp_lazy(base, lazy, obj);
         HullOptimum hull = integer_hull_oracle(g, cuts, obj);
         if (lp.status != LpResult::Status::Optimal || lp.value != hull.value)
         {
            ok = false;
            std::ostringstream d;
            d << "objective " << t << ": lp=" << (lp.status == LpResult::Status::Optimal ? to_string(lp.value) : "?")
              << " hull=" << to_string(hull.value);
            detail = d.str();
         }
      }
      std::ostringstream name;
      name << "bipartite-" << i << "-n" << n;
      rep.cases.push_back({name.str(), ok, detail});
   }
   return rep;
}

VerifyReport verify_presolve()
{
   VerifyReport rep;
   rep.suite = "presolve";
   Graph g = builtin_c8();
   Bsgs group = group_of(g);
   PresolveResult pre = presolve(g, group, std::vector<int>{0, 2}, true);

   {
      bool pass = pre.report.deleted == std::vector<int>{1, 7};
      std::ostringstream d;
      d << "deleted:";
      for (int v : pre.report.deleted)
         d << ' ' << v;
      rep.cases.push_back({"c8-deletes-1-7", pass, d.str()});
   }
   {
      bool pass = pre.report.added_edges == std::vector<std::pair<int, int>>{{3, 6}};
      std::ostringstream d;
      d << "added:";
      for (auto [u, v] : pre.report.added_edges)
         d << " {" << u << "," << v << "}";
      rep.cases.push_back({"c8-adds-edge-3-6", pass, d.str()});
   }
   {
      // the presolved graph admits the new symmetry swapping 4 and 6
      std::vector<int> img{0, 1, 2, 3, 6, 5, 4, 7};
      Perm swap46 = Perm::from_images(img);
      bool pass = is_automorphism(pre.graph, swap46);
      rep.cases.push_back({"c8-new-symmetry-4-6", pass, swap46.to_cycles()});
   }
   return rep;
}

VerifyReport verify_canonical(unsigned seed, int count, int max_n)
{
   VerifyReport rep;
   rep.suite = "canonical";
   std::mt19937 rng(seed);
   for (int i = 0; i < count; ++i)
   {
      std::uniform_int_distribution<int> dn(3, max_n);
      std::uniform_int_distribution<int> dp(20, 70);
      Graph g = random_graph(dn(rng), dp(rng), rng);
      // weights constant on orbits of the unit-weight group
      Bsgs group0 = group_of(g);
      std::uniform_int_distribution<int> dw(1, 3);
      std::vector<char> seen(static_cast<size_t>(g.num_nodes()), 0);
      for (int v = 0; v < g.num_nodes(); ++v)
      {
         if (seen[static_cast<size_t>(v)])
            continue;
         long w = dw(rng);
         for (int u : orbit(group0, v))
         {
            g.set_weight(u, w);
            seen[static_cast<size_t>(u)] = 1;
         }
      }
      SstPlan plan = run_sst_algorithm(group0, LeaderPolicy::MinOrbit);

      std::vector<Rat> obj(static_cast<size_t>(g.num_nodes()));
      for (int v = 0; v < g.num_nodes(); ++v)
         obj[static_cast<size_t>(v)] = static_cast<long>(g.weight(v));
      HullOptimum opt = integer_hull_oracle(g, {}, obj);
      std::vector<int> x(static_cast<size_t>(g.num_nodes()), 0);
      for (int v : opt.argmax)
         x[static_cast<size_t>(v)] = 1;

      std::vector<int> y = canonicalize(x, group0, plan);
      bool ok = true;
      std::string detail;
      Rat val = 0;
      for (int v = 0; v < g.num_nodes(); ++v)
         val += obj[static_cast<size_t>(v)] * y[static_cast<size_t>(v)];
      if (val != opt.value)
      {
         ok = false;
         detail = "objective changed";
      }
      for (const SstCut& c : sst_cuts(plan))
         if (y[static_cast<size_t>(c.follower)] > y[static_cast<size_t>(c.leader)])
         {
            ok = false;
            detail = "cut violated";
         }
      // still a stable set
      for (auto [u, v] : g.edges())
         if (y[static_cast<size_t>(u)] && y[static_cast<size_t>(v)])
         {
            ok = false;
            detail = "not stable";
         }
      std::ostringstream name;
      name << "canonical-" << i << "-n" << g.num_nodes();
      rep.cases.push_back({name.str(), ok, detail});
   }
   return rep;
}

VerifyReport verify_reduction(unsigned seed, int count)
{
   VerifyReport rep;
   rep.suite = "reduction";
   std::mt19937 rng(seed);
   for (int i = 0; i < count; ++i)
   {
      std::uniform_int_distribution<int> dk(1, 2);
      int k = dk(rng);
      std::uniform_int_distribution<int> dt(0, 4);
      auto triples = random_triples(k, dt(rng), rng);
      Reduction3dm red = reduction_3dm(k, triples);

      bool matching = has_3d_matching(k, triples);
      bool oracle_ge_k;
      if (red.graph.num_nodes() == 0)
         oracle_ge_k = k <= 0;
      else
      {
         HullOptimum opt = integer_hull_oracle(red.graph, cut_rows(red.plan), red.weights);
         oracle_ge_k = opt.value >= k;
      }
      bool pass = matching == oracle_ge_k;
      std::ostringstream name, detail;
      name << "3dm-" << i << "-k" << k << "-t" << triples.size();
      detail << "matching=" << matching << " oracle_ge_k=" << oracle_ge_k;
      rep.cases.push_back({name.str(), pass, detail.str()});
   }
   return rep;
}

} // namespace sst
