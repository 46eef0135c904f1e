// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/solver.hpp"

#include "sst/autgroup.hpp"
#include "sst/auxiliary.hpp"
#include "sst/lp.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace sst
{

namespace
{

using Clock = std::chrono::steady_clock;

// Exact max-weight clique (weights >= 0) via DFS with a weight-sum bound.
struct CliqueSearch
{
   const Graph& g;
   const std::vector<Rat>& w;
   std::vector<int> best;
   Rat best_w = 0;

   CliqueSearch(const Graph& graph, const std::vector<Rat>& weights) : g(graph), w(weights) {}

   void run(std::vector<int> cand)
   {
      std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
         return w[static_cast<size_t>(a)] != w[static_cast<size_t>(b)]
                   ? w[static_cast<size_t>(a)] > w[static_cast<size_t>(b)]
                   : a < b;
      });
      std::vector<int> cur;
      dfs(cur, Rat(0), cand);
   }

   void dfs(std::vector<int>& cur, const Rat& cur_w, const std::vector<int>& cand)
   {
      if (cur_w > best_w)
      {
         best_w = cur_w;
         best = cur;
      }
      for (size_t i = 0; i < cand.size(); ++i)
      {
         Rat tail = 0;
         for (size_t j = i; j < cand.size(); ++j)
            tail += w[static_cast<size_t>(cand[j])];
         if (cur_w + tail <= best_w)
            return;
         int v = cand[i];
         std::vector<int> next;
         for (size_t j = i + 1; j < cand.size(); ++j)
            if (g.adjacent(v, cand[j]))
               next.push_back(cand[j]);
         cur.push_back(v);
         dfs(cur, cur_w + w[static_cast<size_t>(v)], next);
         cur.pop_back();
      }
   }
};

std::vector<int> maximalize_clique(const Graph& g, std::vector<int> c, const std::vector<char>& alive)
{
   for (int v = 0; v < g.num_nodes(); ++v)
   {
      if (!alive[static_cast<size_t>(v)] || std::find(c.begin(), c.end(), v) != c.end())
         continue;
      bool all = true;
      for (int u : c)
         if (!g.adjacent(u, v))
         {
            all = false;
            break;
         }
      if (all)
         c.push_back(v);
   }
   std::sort(c.begin(), c.end());
   return c;
}

// Greedy clique cover by degree, as the root pool seed.
std::vector<std::vector<int>> greedy_clique_cover(const Graph& g, const std::vector<char>& alive)
{
   std::vector<char> covered(static_cast<size_t>(g.num_nodes()), 0);
   for (int v = 0; v < g.num_nodes(); ++v)
      if (!alive[static_cast<size_t>(v)])
         covered[static_cast<size_t>(v)] = 1;
   std::vector<std::vector<int>> cover;
   for (;;)
   {
      int seed = -1, seed_deg = -1;
      for (int v = 0; v < g.num_nodes(); ++v)
      {
         if (covered[static_cast<size_t>(v)])
            continue;
         int d = 0;
         for (int u : g.neighbors(v))
            if (!covered[static_cast<size_t>(u)])
               ++d;
         if (d > seed_deg)
         {
            seed = v;
            seed_deg = d;
         }
      }
      if (seed < 0)
         break;
      std::vector<int> clique{seed};
      for (;;)
      {
         int pick = -1, pick_deg = -1;
         for (int v = 0; v < g.num_nodes(); ++v)
         {
            if (covered[static_cast<size_t>(v)])
               continue;
            bool adj_all = true;
            for (int u : clique)
               if (u == v || !g.adjacent(u, v))
               {
                  adj_all = false;
                  break;
               }
            if (!adj_all)
               continue;
            int d = 0;
            for (int u : g.neighbors(v))
               if (!covered[static_cast<size_t>(u)])
                  ++d;
            if (d > pick_deg)
            {
               pick = v;
               pick_deg = d;
            }
         }
         if (pick < 0)
            break;
         clique.push_back(pick);
      }
      for (int v : clique)
         covered[static_cast<size_t>(v)] = 1;
      std::sort(clique.begin(), clique.end());
      cover.push_back(std::move(clique));
   }
   return cover;
}

struct BnB
{
   const Graph& work;
   const Settings& settings;
   const std::vector<char>& alive;
   const SstPlan& plan;
   SolveResult& res;

   BnB(const Graph& w, const Settings& s, const std::vector<char>& a, const SstPlan& p, SolveResult& r)
      : work(w), settings(s), alive(a), plan(p), res(r)
   {
   }

   std::vector<LinIneq> rows;
   std::set<std::vector<std::pair<int, Rat>>> row_keys;
   std::vector<std::vector<int>> clique_pool;
   std::vector<int> fix; // -1 free / 0 / 1
   long long best_value = 0;
   std::vector<int> best_set;
   long long prune_level = 0; // incumbents must exceed this
   Clock::time_point deadline{};
   bool timed_out = false;
   long long abandoned_bound = 0;

   static constexpr int kMaxRounds = 10;

   bool add_row(const LinIneq& r)
   {
      if (!row_keys.insert(r.terms).second)
         return false;
      rows.push_back(r);
      return true;
   }

   LinIneq clique_row(const std::vector<int>& clique) const
   {
      LinIneq r;
      for (int v : clique)
         r.terms.emplace_back(v, Rat(1));
      r.rhs = 1;
      return r;
   }

   LpResult solve_current()
   {
      const int n = work.num_nodes();
      IneqSystem sys = IneqSystem::boxed(n);
      for (int v = 0; v < n; ++v)
      {
         if (fix[static_cast<size_t>(v)] == 0)
            sys.bounds[static_cast<size_t>(v)] = {Rat(0), Rat(0)};
         else if (fix[static_cast<size_t>(v)] == 1)
            sys.bounds[static_cast<size_t>(v)] = {Rat(1), Rat(1)};
      }
      for (const LinIneq& r : rows)
         sys.add_row(r);
      std::vector<Rat> obj(static_cast<size_t>(n), Rat(0));
      for (int v = 0; v < n; ++v)
         if (alive[static_cast<size_t>(v)])
            obj[static_cast<size_t>(v)] = Rat(static_cast<long>(work.weight(v)));
      return solve_lp(sys, obj);
   }

   int separate(const std::vector<Rat>& x)
   {
      int added = 0;
      for (const auto& c : clique_pool)
      {
         Rat s = 0;
         for (int v : c)
            s += x[static_cast<size_t>(v)];
         if (s > 1 && add_row(clique_row(c)))
         {
            ++added;
            ++res.cuts_added["clique"];
         }
      }
      {
         std::vector<int> support;
         for (int v = 0; v < work.num_nodes(); ++v)
            if (alive[static_cast<size_t>(v)] && x[static_cast<size_t>(v)] > 0)
               support.push_back(v);
         CliqueSearch cs(work, x);
         cs.run(support);
         if (cs.best_w > 1)
         {
            auto c = maximalize_clique(work, cs.best, alive);
            clique_pool.push_back(c);
            if (add_row(clique_row(c)))
            {
               ++added;
               ++res.cuts_added["clique"];
            }
         }
      }
      if (settings.separate_sst_clique_cuts)
      {
         for (size_t i = 0; i < plan.leaders.size(); ++i)
         {
            int leader = plan.leaders[i];
            if (!alive[static_cast<size_t>(leader)])
               continue;
            std::vector<int> followers;
            for (int f : plan.orbits[i])
               if (f != leader && alive[static_cast<size_t>(f)])
                  followers.push_back(f);
            if (followers.empty())
               continue;
            CliqueSearch cs(work, x);
            cs.run(followers);
            if (cs.best.empty() || cs.best_w <= x[static_cast<size_t>(leader)])
               continue;
            LinIneq r;
            r.terms.emplace_back(leader, Rat(-1));
            std::vector<int> cl = cs.best;
            std::sort(cl.begin(), cl.end());
            for (int f : cl)
               r.terms.emplace_back(f, Rat(1));
            std::sort(r.terms.begin(), r.terms.end());
            r.rhs = 0;
            if (add_row(r))
            {
               ++added;
               ++res.cuts_added["sstclique"];
            }
         }
      }
      if (settings.separate_path_cuts && !plan.empty())
      {
         for (LinIneq& r : separate_sst_path_cuts(x, work, plan, 20))
            if (add_row(r))
            {
               ++added;
               ++res.cuts_added["path"];
            }
      }
      return added;
   }

   static bool integral(const std::vector<Rat>& x)
   {
      for (const Rat& v : x)
         if (v != 0 && v != 1)
            return false;
      return true;
   }

   // integral points must be stable; adds a clique row over a violated edge
   bool repair_stability(const std::vector<Rat>& x)
   {
      for (int u = 0; u < work.num_nodes(); ++u)
      {
         if (x[static_cast<size_t>(u)] != 1)
            continue;
         for (int v : work.neighbors(u))
            if (v > u && x[static_cast<size_t>(v)] == 1)
            {
               auto c = maximalize_clique(work, {u, v}, alive);
               clique_pool.push_back(c);
               if (add_row(clique_row(c)))
                  ++res.cuts_added["clique"];
               return true;
            }
      }
      return false;
   }

   void node(int depth)
   {
      if (timed_out || (deadline != Clock::time_point{} && Clock::now() > deadline))
      {
         timed_out = true;
         return;
      }
      ++res.nodes;
      const bool root = res.nodes == 1;

      LpResult lp;
      int rounds = 0;
      for (;;)
      {
         lp = solve_current();
         if (lp.status == LpResult::Status::Infeasible)
            return;
         if (floor_rat(lp.value) <= Int(static_cast<long>(prune_level)))
            return;
         if (integral(lp.point))
         {
            if (repair_stability(lp.point))
               continue; // never capped: validity of incumbents
            break;
         }
         if (rounds >= kMaxRounds)
            break;
         if (separate(lp.point) == 0)
            break;
         ++rounds;
      }

      if (integral(lp.point))
      {
         if (root)
            res.root_lp_integral = true;
         long long val = 0;
         std::vector<int> setv;
         for (int v = 0; v < work.num_nodes(); ++v)
            if (lp.point[static_cast<size_t>(v)] == 1)
            {
               val += work.weight(v);
               setv.push_back(v);
            }
         if (val > best_value)
         {
            best_value = val;
            best_set = setv;
            prune_level = std::max(prune_level, best_value);
         }
         return;
      }

      // branch on the free node with the most unfixed neighbors, ties by id
      int bv = -1, bcnt = -1;
      for (int v = 0; v < work.num_nodes(); ++v)
      {
         if (fix[static_cast<size_t>(v)] != -1)
            continue;
         int cnt = 0;
         for (int u : work.neighbors(v))
            if (fix[static_cast<size_t>(u)] == -1)
               ++cnt;
         if (cnt > bcnt)
         {
            bv = v;
            bcnt = cnt;
         }
      }
      if (bv < 0)
         return;

      long long node_bound = static_cast<long long>(floor_rat(lp.value).get_si());

      std::vector<int> touched{bv};
      fix[static_cast<size_t>(bv)] = 1;
      for (int u : work.neighbors(bv))
         if (fix[static_cast<size_t>(u)] == -1)
         {
            fix[static_cast<size_t>(u)] = 0;
            touched.push_back(u);
         }
      node(depth + 1);
      for (int u : touched)
         fix[static_cast<size_t>(u)] = -1;
      if (timed_out)
      {
         abandoned_bound = std::max(abandoned_bound, node_bound);
         return;
      }

      fix[static_cast<size_t>(bv)] = 0;
      node(depth + 1);
      fix[static_cast<size_t>(bv)] = -1;
      if (timed_out)
         abandoned_bound = std::max(abandoned_bound, node_bound);
   }
};

} // namespace

SolveResult branch_and_cut(const Graph& g, const Settings& settings, std::optional<long long> cutoff,
                           double time_limit_sec, const std::vector<Perm>* generators)
{
   auto t0 = Clock::now();
   const int n = g.num_nodes();
   SolveResult res;

   Graph work = g;
   SstPlan plan;
   plan.degree = n;
   std::vector<char> alive(static_cast<size_t>(n), 1);

   if (settings.use_symmetry)
   {
      auto tpre = Clock::now();
      Bsgs group = generators ? schreier_sims(*generators, {}, n)
                             : schreier_sims(graph_automorphisms(g), {}, n);
      if (settings.presolve)
      {
         PresolveResult pre = presolve(g, group, settings.policy, settings.add_edges);
         work = pre.graph;
         plan = pre.plan;
         res.presolve = pre.report;
         for (int v : pre.report.deleted)
            alive[static_cast<size_t>(v)] = 0;
         for (int round = 0; round < settings.resymmetrize; ++round)
         {
            std::vector<int> pinned;
            for (int v = 0; v < n; ++v)
               if (!alive[static_cast<size_t>(v)])
                  pinned.push_back(v);
            Bsgs regroup = schreier_sims(graph_automorphisms(work, pinned), {}, n);
            plan = run_sst_algorithm(regroup, settings.policy);
            if (round + 1 < settings.resymmetrize)
            {
               PresolveResult again = presolve(work, regroup, settings.policy, settings.add_edges);
               work = again.graph;
               plan = again.plan;
               for (int v : again.report.deleted)
               {
                  alive[static_cast<size_t>(v)] = 0;
                  res.presolve.deleted.push_back(v);
               }
               for (auto e : again.report.added_edges)
                  res.presolve.added_edges.push_back(e);
               res.presolve.rounds += again.report.rounds;
            }
         }
      }
      else
         plan = run_sst_algorithm(group, settings.policy);
      res.presolve_time_sec = std::chrono::duration<double>(Clock::now() - tpre).count();
   }
   res.plan = plan;

   // SST implication: a follower of a deleted leader is 0 in every optimal
   // cut-feasible point, so it can be fixed as well
   {
      bool changed = true;
      while (changed)
      {
         changed = false;
         for (const SstCut& c : sst_cuts(plan))
            if (!alive[static_cast<size_t>(c.leader)] && alive[static_cast<size_t>(c.follower)])
            {
               alive[static_cast<size_t>(c.follower)] = 0;
               res.presolve.deleted.push_back(c.follower);
               changed = true;
            }
      }
      std::sort(res.presolve.deleted.begin(), res.presolve.deleted.end());
   }

   BnB bnb(work, settings, alive, plan, res);
   bnb.fix.assign(static_cast<size_t>(n), -1);
   for (int v = 0; v < n; ++v)
      if (!alive[static_cast<size_t>(v)])
         bnb.fix[static_cast<size_t>(v)] = 0;
   if (time_limit_sec > 0)
      bnb.deadline =
         t0 + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(time_limit_sec));

   for (auto& c : greedy_clique_cover(work, alive))
   {
      bnb.clique_pool.push_back(c);
      if (c.size() >= 2 && bnb.add_row(bnb.clique_row(c)))
         ++res.cuts_added["clique"];
   }
   for (int v = 0; v < n; ++v)
   {
      if (!alive[static_cast<size_t>(v)])
         continue;
      std::vector<int> nb;
      for (int u : work.neighbors(v))
         if (alive[static_cast<size_t>(u)])
            nb.push_back(u);
      if (nb.empty() || static_cast<int>(nb.size()) > 20)
         continue;
      int a = stability_number(work, nb);
      LinIneq r;
      for (int u : nb)
         r.terms.emplace_back(u, Rat(1));
      r.terms.emplace_back(v, Rat(a));
      std::sort(r.terms.begin(), r.terms.end());
      r.rhs = a;
      if (bnb.add_row(r))
         ++res.cuts_added["neighborhood"];
   }
   if (settings.cuts == CutFamily::Sst || settings.cuts == CutFamily::Both)
   {
      for (const SstCut& c : sst_cuts(plan))
      {
         if (!alive[static_cast<size_t>(c.leader)] || !alive[static_cast<size_t>(c.follower)])
            continue;
         LinIneq r;
         r.terms.emplace_back(c.leader, Rat(-1));
         r.terms.emplace_back(c.follower, Rat(1));
         std::sort(r.terms.begin(), r.terms.end());
         r.rhs = 0;
         if (bnb.add_row(r))
            ++res.cuts_added["sst"];
      }
   }
   if (settings.cuts == CutFamily::SstClique || settings.cuts == CutFamily::Both)
   {
      for (const SstCliqueCut& c : sst_clique_cuts(plan, work))
      {
         if (!alive[static_cast<size_t>(c.leader)])
            continue;
         LinIneq r;
         r.terms.emplace_back(c.leader, Rat(-1));
         bool any = false;
         for (int f : c.clique)
            if (alive[static_cast<size_t>(f)])
            {
               r.terms.emplace_back(f, Rat(1));
               any = true;
            }
         if (!any)
            continue;
         std::sort(r.terms.begin(), r.terms.end());
         r.rhs = 0;
         if (bnb.add_row(r))
            ++res.cuts_added["sstclique"];
      }
   }

   if (cutoff)
      bnb.prune_level = std::max<long long>(0, *cutoff - 1);

   bnb.node(0);

   res.optimum = bnb.best_value;
   res.incumbent = bnb.best_set;
   res.complete = !bnb.timed_out;
   res.dual_bound = res.complete ? res.optimum : std::max(bnb.abandoned_bound, bnb.best_value);
   res.time_sec = std::chrono::duration<double>(Clock::now() - t0).count();
   return res;
}

} // namespace sst
