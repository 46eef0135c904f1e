// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/hull.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sst
{

namespace
{

// DFS over nodes in degree-descending order.  Optima are compared as the
// pair (objective value, lexicographic key); the key sum_{v chosen} 2^-(v+1)
// makes the reported argmax the lexicographically largest indicator vector
// among the optima, and both components admit suffix bounds, so ties prune.
struct OracleSearch
{
   const Graph& g;
   const std::vector<Rat>& obj;

   OracleSearch(const Graph& graph, const std::vector<Rat>& objective) : g(graph), obj(objective) {}

   std::vector<int> order;
   std::vector<Rat> tiekey;                  // per node: 2^-(v+1)
   std::vector<std::vector<size_t>> cuts_at; // order position -> cut ids with support there
   std::vector<const LinIneq*> cuts;
   std::vector<Rat> cut_partial;   // lhs over decided variables
   std::vector<Rat> cut_slack_neg; // most negative contribution still open
   std::vector<Rat> pos_suffix;    // positive objective mass from position i on
   std::vector<Rat> tie_suffix;

   bool have_best = false;
   Rat best_value = 0;
   Rat best_tie = 0;
   std::vector<int> best_set;

   std::vector<char> banned;

   bool cuts_can_hold() const
   {
      for (size_t ci = 0; ci < cuts.size(); ++ci)
         if (cut_partial[ci] + cut_slack_neg[ci] > cuts[ci]->rhs)
            return false;
      return true;
   }

   Rat coeff_of(size_t ci, int v) const
   {
      for (const auto& [var, c] : cuts[ci]->terms)
         if (var == v)
            return c;
      return 0;
   }

   void set_one(size_t pos, int dir)
   {
      for (size_t ci : cuts_at[pos])
      {
         Rat c = coeff_of(ci, order[pos]);
         cut_partial[ci] += dir * c;
         if (c < 0)
            cut_slack_neg[ci] -= dir * c;
      }
   }

   void set_zero(size_t pos, int dir)
   {
      for (size_t ci : cuts_at[pos])
      {
         Rat c = coeff_of(ci, order[pos]);
         if (c < 0)
            cut_slack_neg[ci] -= dir * c;
      }
   }

   void dfs(size_t pos, std::vector<int>& current, const Rat& value, const Rat& tie)
   {
      if (have_best)
      {
         Rat vbound = value + pos_suffix[pos];
         if (vbound < best_value)
            return;
         if (vbound == best_value && tie + tie_suffix[pos] <= best_tie)
            return;
      }
      if (pos == order.size())
      {
         if (!have_best || value > best_value || (value == best_value && tie > best_tie))
         {
            have_best = true;
            best_value = value;
            best_tie = tie;
            best_set = current;
            std::sort(best_set.begin(), best_set.end());
         }
         return;
      }
      int v = order[pos];
      if (!banned[pos])
      {
         std::vector<size_t> newly;
         for (size_t q = pos + 1; q < order.size(); ++q)
            if (!banned[q] && g.adjacent(v, order[q]))
            {
               banned[q] = 1;
               newly.push_back(q);
            }
         set_one(pos, 1);
         if (cuts_can_hold())
         {
            current.push_back(v);
            dfs(pos + 1, current, value + obj[static_cast<size_t>(v)], tie + tiekey[static_cast<size_t>(v)]);
            current.pop_back();
         }
         set_one(pos, -1);
         for (size_t q : newly)
            banned[q] = 0;
      }
      set_zero(pos, 1);
      if (cuts_can_hold())
         dfs(pos + 1, current, value, tie);
      set_zero(pos, -1);
   }
};

} // namespace

HullOptimum integer_hull_oracle(const Graph& g, const std::vector<LinIneq>& extra_cuts,
                                const std::vector<Rat>& objective)
{
   const int n = g.num_nodes();
   if (static_cast<int>(objective.size()) != n)
      throw std::invalid_argument("integer_hull_oracle: objective size mismatch");

   OracleSearch s(g, objective);
   s.order.resize(static_cast<size_t>(n));
   std::iota(s.order.begin(), s.order.end(), 0);
   std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
   });
   std::vector<size_t> pos_of(static_cast<size_t>(n));
   for (size_t i = 0; i < s.order.size(); ++i)
      pos_of[static_cast<size_t>(s.order[i])] = i;

   s.tiekey.resize(static_cast<size_t>(n));
   for (int v = 0; v < n; ++v)
   {
      Rat t(1);
      t /= Rat(Int(1) << (v + 1));
      s.tiekey[static_cast<size_t>(v)] = t;
   }

   s.cuts_at.assign(static_cast<size_t>(n) + 1, {});
   for (const LinIneq& cut : extra_cuts)
   {
      s.cuts.push_back(&cut);
      Rat neg = 0;
      for (const auto& [v, c] : cut.terms)
         if (c < 0)
            neg += c;
      s.cut_partial.push_back(0);
      s.cut_slack_neg.push_back(neg);
      for (const auto& [v, c] : cut.terms)
         s.cuts_at[pos_of[static_cast<size_t>(v)]].push_back(s.cuts.size() - 1);
   }

   s.pos_suffix.assign(static_cast<size_t>(n) + 1, Rat(0));
   s.tie_suffix.assign(static_cast<size_t>(n) + 1, Rat(0));
   for (size_t i = s.order.size(); i-- > 0;)
   {
      s.pos_suffix[i] = s.pos_suffix[i + 1];
      s.tie_suffix[i] = s.tie_suffix[i + 1] + s.tiekey[static_cast<size_t>(s.order[i])];
      const Rat& w = objective[static_cast<size_t>(s.order[i])];
      if (w > 0)
         s.pos_suffix[i] += w;
   }
   s.banned.assign(static_cast<size_t>(n), 0);

   std::vector<int> current;
   s.dfs(0, current, Rat(0), Rat(0));
   if (!s.have_best)
      throw std::logic_error("integer_hull_oracle: no feasible point (cuts exclude the empty set)");
   return {s.best_value, s.best_set};
}

std::vector<std::vector<int>> enumerate_cut_feasible_stable_sets(const Graph& g,
                                                                 const std::vector<LinIneq>& cuts)
{
   const int n = g.num_nodes();
   if (n > 24)
      throw std::invalid_argument("enumerate_cut_feasible_stable_sets: n too large");
   std::vector<std::vector<int>> out;
   for (unsigned long mask = 0; mask < (1ul << n); ++mask)
   {
      std::vector<int> x(static_cast<size_t>(n), 0);
      bool stable = true;
      for (int v = 0; v < n && stable; ++v)
      {
         if (!(mask >> v & 1))
            continue;
         x[static_cast<size_t>(v)] = 1;
         for (int u : g.neighbors(v))
            if (u < v && (mask >> u & 1))
            {
               stable = false;
               break;
            }
      }
      if (!stable)
         continue;
      bool ok = true;
      for (const LinIneq& cut : cuts)
      {
         Rat lhs = 0;
         for (const auto& [v, c] : cut.terms)
            lhs += c * x[static_cast<size_t>(v)];
         if (lhs > cut.rhs)
         {
            ok = false;
            break;
         }
      }
      if (ok)
         out.push_back(std::move(x));
   }
   return out;
}

} // namespace sst
