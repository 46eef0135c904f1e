// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/plan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sst
{

std::string to_string(LeaderPolicy p)
{
   switch (p)
   {
   case LeaderPolicy::FirstFree:
      return "first";
   case LeaderPolicy::MinOrbit:
      return "min";
   case LeaderPolicy::MaxOrbit:
      return "max";
   case LeaderPolicy::Stringent:
      return "stringent";
   }
   return "?";
}

LeaderPolicy leader_policy_from_string(const std::string& s)
{
   if (s == "first")
      return LeaderPolicy::FirstFree;
   if (s == "min")
      return LeaderPolicy::MinOrbit;
   if (s == "max")
      return LeaderPolicy::MaxOrbit;
   if (s == "stringent")
      return LeaderPolicy::Stringent;
   throw std::invalid_argument("unknown leader policy '" + s + "'");
}

int SstPlan::num_cuts() const
{
   int c = 0;
   for (const auto& o : orbits)
      c += static_cast<int>(o.size()) - 1;
   return c;
}

namespace
{

// All orbits of the group's level-0 generators, sorted by minimum element.
std::vector<std::vector<int>> all_orbits(const Bsgs& group)
{
   const int n = group.degree();
   std::vector<char> seen(static_cast<size_t>(n), 0);
   std::vector<std::vector<int>> orbs;
   for (int v = 0; v < n; ++v)
   {
      if (seen[static_cast<size_t>(v)])
         continue;
      auto o = orbit_of(group.generators(), v, n);
      for (int x : o)
         seen[static_cast<size_t>(x)] = 1;
      orbs.push_back(std::move(o));
   }
   return orbs;
}

// MinOrbit / MaxOrbit: first eligible element of a smallest/largest
// nontrivial orbit containing an eligible node; -1 if none.
int pick_by_orbit_size(const Bsgs& group, const std::vector<char>& taken,
                       const std::vector<char>& eligible, bool smallest)
{
   std::vector<int> best;
   for (const auto& o : all_orbits(group))
   {
      if (o.size() <= 1)
         continue;
      bool has_candidate = false;
      for (int v : o)
         if (eligible[static_cast<size_t>(v)] && !taken[static_cast<size_t>(v)])
            has_candidate = true;
      if (!has_candidate)
         continue;
      if (best.empty() || (smallest ? o.size() < best.size() : o.size() > best.size()))
         best = o;
   }
   for (int v : best)
      if (eligible[static_cast<size_t>(v)] && !taken[static_cast<size_t>(v)])
         return v;
   return -1;
}

} // namespace

SstPlan run_sst_algorithm_interleaved(
   const Bsgs& group, LeaderPolicy policy, bool run_to_full, std::vector<char> eligible,
   const std::function<void(int, const std::vector<int>&, std::vector<char>&)>& on_step)
{
   const int n = group.degree();
   if (static_cast<int>(eligible.size()) != n)
      throw std::invalid_argument("run_sst_algorithm: eligibility mask size mismatch");
   SstPlan plan;
   plan.degree = n;
   plan.policy = to_string(policy);

   Bsgs cur = group;
   std::vector<char> taken(static_cast<size_t>(n), 0);
   std::set<int> pool; // eligible members of earlier orbits, minus leaders

   while (static_cast<int>(plan.leaders.size()) < n)
   {
      int leader = -1;
      bool trivial = cur.is_trivial();
      if (policy == LeaderPolicy::Stringent && !pool.empty())
      {
         // prefer the pool candidate in the smallest nontrivial current
         // orbit, tie-break by node id; fall back to the smallest pool id
         size_t best_size = 0;
         for (int c : pool)
         {
            auto o = orbit_of(cur.generators(), c, n);
            if (o.size() <= 1)
               continue;
            if (leader < 0 || o.size() < best_size)
            {
               leader = c;
               best_size = o.size();
            }
         }
         if (leader < 0)
            leader = *pool.begin();
      }
      else
      {
         if (trivial && !run_to_full)
            break;
         switch (policy)
         {
         case LeaderPolicy::FirstFree:
            for (int v = 0; v < n && leader < 0; ++v)
               if (!taken[static_cast<size_t>(v)] && eligible[static_cast<size_t>(v)])
                  leader = v;
            break;
         case LeaderPolicy::MinOrbit:
         case LeaderPolicy::Stringent: // pool empty: free choice by MinOrbit
            leader = pick_by_orbit_size(cur, taken, eligible, true);
            break;
         case LeaderPolicy::MaxOrbit:
            leader = pick_by_orbit_size(cur, taken, eligible, false);
            break;
         }
         if (leader < 0)
         {
            if (!run_to_full)
               break;
            for (int v = 0; v < n && leader < 0; ++v)
               if (!taken[static_cast<size_t>(v)] && eligible[static_cast<size_t>(v)])
                  leader = v;
            if (leader < 0)
               break;
         }
      }

      auto orb = orbit_of(cur.generators(), leader, n);
      plan.leaders.push_back(leader);
      plan.orbits.push_back(orb);
      taken[static_cast<size_t>(leader)] = 1;
      if (on_step)
         on_step(leader, orb, eligible);
      for (int v : orb)
         if (!taken[static_cast<size_t>(v)] && eligible[static_cast<size_t>(v)])
            pool.insert(v);
      pool.erase(leader);
      for (auto it = pool.begin(); it != pool.end();)
      {
         if (!eligible[static_cast<size_t>(*it)])
            it = pool.erase(it);
         else
            ++it;
      }
      cur = pointwise_stabilizer(cur, {leader});
   }
   return plan;
}

SstPlan run_sst_algorithm(const Bsgs& group, LeaderPolicy policy, bool run_to_full)
{
   return run_sst_algorithm_interleaved(
      group, policy, run_to_full, std::vector<char>(static_cast<size_t>(group.degree()), 1), nullptr);
}

SstPlan run_sst_algorithm(const Bsgs& group, const std::vector<int>& leaders)
{
   const int n = group.degree();
   SstPlan plan;
   plan.degree = n;
   plan.policy = "explicit";
   Bsgs cur = group;
   std::vector<char> taken(static_cast<size_t>(n), 0);
   for (int leader : leaders)
   {
      if (leader < 0 || leader >= n)
         throw std::invalid_argument("run_sst_algorithm: leader out of range");
      if (taken[static_cast<size_t>(leader)])
         throw std::invalid_argument("run_sst_algorithm: repeated leader");
      taken[static_cast<size_t>(leader)] = 1;
      plan.leaders.push_back(leader);
      plan.orbits.push_back(orbit_of(cur.generators(), leader, n));
      cur = pointwise_stabilizer(cur, {leader});
   }
   return plan;
}

bool is_stringent(const SstPlan& plan, const Bsgs& group)
{
   if (plan.degree != group.degree())
      throw std::invalid_argument("is_stringent: plan/group degree mismatch");
   Bsgs cur = group;
   std::set<int> pool;
   std::vector<char> taken(static_cast<size_t>(plan.degree), 0);
   for (size_t i = 0; i < plan.leaders.size(); ++i)
   {
      int leader = plan.leaders[i];
      auto orb = orbit_of(cur.generators(), leader, plan.degree);
      if (orb != plan.orbits[i])
         throw std::invalid_argument("is_stringent: plan is not replayable from the group");
      if (!pool.empty() && pool.find(leader) == pool.end())
         return false;
      taken[static_cast<size_t>(leader)] = 1;
      for (int v : orb)
         if (!taken[static_cast<size_t>(v)])
            pool.insert(v);
      pool.erase(leader);
      cur = pointwise_stabilizer(cur, {leader});
   }
   return true;
}

std::vector<SstCut> sst_cuts(const SstPlan& plan)
{
   std::vector<SstCut> cuts;
   for (size_t i = 0; i < plan.leaders.size(); ++i)
      for (int f : plan.orbits[i])
         if (f != plan.leaders[i])
            cuts.push_back({plan.leaders[i], f});
   return cuts;
}

std::vector<SstCliqueCut> sst_clique_cuts(const SstPlan& plan, const Graph& g)
{
   if (plan.degree != g.num_nodes())
      throw std::invalid_argument("sst_clique_cuts: plan/graph degree mismatch");
   std::vector<SstCliqueCut> cuts;
   for (size_t i = 0; i < plan.leaders.size(); ++i)
   {
      std::vector<int> followers;
      for (int f : plan.orbits[i])
         if (f != plan.leaders[i])
            followers.push_back(f);
      if (followers.empty())
         continue;
      auto [sub, map] = induced_subgraph(g, followers);
      for (const auto& clique : maximal_cliques(sub))
      {
         SstCliqueCut cut;
         cut.leader = plan.leaders[i];
         for (int v : clique)
            cut.clique.push_back(map[static_cast<size_t>(v)]);
         std::sort(cut.clique.begin(), cut.clique.end());
         cuts.push_back(std::move(cut));
      }
   }
   return cuts;
}

std::string serialize_plan(const SstPlan& plan)
{
   std::ostringstream out;
   out << "# policy: " << plan.policy << " degree: " << plan.degree << '\n';
   for (size_t i = 0; i < plan.leaders.size(); ++i)
   {
      out << "leader " << plan.leaders[i] << " orbit";
      for (int v : plan.orbits[i])
         out << ' ' << v;
      out << '\n';
   }
   return out.str();
}

SstPlan parse_plan(const std::string& text)
{
   SstPlan plan;
   plan.policy = "explicit";
   std::istringstream in(text);
   std::string line;
   int lineno = 0;
   int maxid = -1;
   while (std::getline(in, line))
   {
      ++lineno;
      std::istringstream ls(line);
      std::string tok;
      if (!(ls >> tok) || tok[0] == '#')
      {
         if (tok == "#")
         {
            std::string key;
            while (ls >> key)
            {
               if (key == "policy:")
                  ls >> plan.policy;
               else if (key == "degree:")
                  ls >> plan.degree;
            }
         }
         continue;
      }
      if (tok != "leader")
         throw std::runtime_error("plan parse error at line " + std::to_string(lineno));
      int leader = -1;
      std::string kw;
      if (!(ls >> leader >> kw) || kw != "orbit")
         throw std::runtime_error("plan parse error at line " + std::to_string(lineno));
      std::vector<int> orb;
      int v;
      while (ls >> v)
         orb.push_back(v);
      std::sort(orb.begin(), orb.end());
      if (!std::binary_search(orb.begin(), orb.end(), leader))
         throw std::runtime_error("plan parse error at line " + std::to_string(lineno) +
                                  ": leader not in orbit");
      for (int x : orb)
         maxid = std::max(maxid, x);
      plan.leaders.push_back(leader);
      plan.orbits.push_back(std::move(orb));
   }
   plan.degree = std::max(plan.degree, maxid + 1);
   return plan;
}

} // namespace sst
