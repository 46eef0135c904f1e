// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace sst
{

namespace
{

constexpr int AT_LOWER = 0;
constexpr int AT_UPPER = 1;
constexpr int BASIC = 2;

struct Bound
{
   bool has_lo = false, has_hi = false;
   Rat lo = 0, hi = 0;
   bool fixed() const { return has_lo && has_hi && lo == hi; }
};

struct Simplex
{
   int m = 0;
   int nvars = 0;                                  // structural + slack + artificial
   std::vector<std::vector<std::pair<int, Rat>>> col; // sparse columns
   std::vector<Bound> bnd;
   std::vector<Rat> cost;

   std::vector<int> basis;    // row -> var
   std::vector<int> stat;     // var -> AT_LOWER/AT_UPPER/BASIC
   std::vector<Rat> xval;     // var -> value
   std::vector<std::vector<Rat>> binv;

   Rat col_dot(int j, const std::vector<Rat>& y) const
   {
      Rat s = 0;
      for (const auto& [i, a] : col[static_cast<size_t>(j)])
         s += y[static_cast<size_t>(i)] * a;
      return s;
   }

   std::vector<Rat> ftran(int j) const // Binv * col_j
   {
      std::vector<Rat> w(static_cast<size_t>(m), Rat(0));
      for (int i = 0; i < m; ++i)
      {
         Rat s = 0;
         for (const auto& [r, a] : col[static_cast<size_t>(j)])
            s += binv[static_cast<size_t>(i)][static_cast<size_t>(r)] * a;
         w[static_cast<size_t>(i)] = s;
      }
      return w;
   }

   std::vector<Rat> duals() const // y = c_B^T Binv
   {
      std::vector<Rat> y(static_cast<size_t>(m), Rat(0));
      for (int i = 0; i < m; ++i)
      {
         const Rat& cb = cost[static_cast<size_t>(basis[static_cast<size_t>(i)])];
         if (cb == 0)
            continue;
         for (int r = 0; r < m; ++r)
            y[static_cast<size_t>(r)] += cb * binv[static_cast<size_t>(i)][static_cast<size_t>(r)];
      }
      return y;
   }

   // Runs the primal simplex until optimal or unbounded; returns false on
   // unbounded.
   bool optimize()
   {
      for (;;)
      {
         std::vector<Rat> y = duals();
         int enter = -1;
         int dir = 0; // +1 increase, -1 decrease
         for (int j = 0; j < nvars; ++j)
         {
            if (stat[static_cast<size_t>(j)] == BASIC || bnd[static_cast<size_t>(j)].fixed())
               continue;
            Rat d = cost[static_cast<size_t>(j)] - col_dot(j, y);
            if (stat[static_cast<size_t>(j)] == AT_LOWER && d > 0)
            {
               enter = j;
               dir = 1;
               break; // Bland: first eligible index
            }
            if (stat[static_cast<size_t>(j)] == AT_UPPER && d < 0)
            {
               enter = j;
               dir = -1;
               break;
            }
         }
         if (enter < 0)
            return true;

         std::vector<Rat> w = ftran(enter);
         // basic values move at rate -dir * w_i
         bool has_limit = false;
         Rat tmax = 0;
         int leave_pos = -1;
         int leave_to = AT_LOWER;
         for (int i = 0; i < m; ++i)
         {
            Rat rate = -dir * w[static_cast<size_t>(i)];
            if (rate == 0)
               continue;
            int bv = basis[static_cast<size_t>(i)];
            const Bound& b = bnd[static_cast<size_t>(bv)];
            Rat limit;
            int to;
            if (rate < 0)
            {
               if (!b.has_lo)
                  continue;
               limit = (xval[static_cast<size_t>(bv)] - b.lo) / (-rate);
               to = AT_LOWER;
            }
            else
            {
               if (!b.has_hi)
                  continue;
               limit = (b.hi - xval[static_cast<size_t>(bv)]) / rate;
               to = AT_UPPER;
            }
            if (!has_limit || limit < tmax ||
                (limit == tmax && leave_pos >= 0 &&
                 bv < basis[static_cast<size_t>(leave_pos)]))
            {
               has_limit = true;
               tmax = limit;
               leave_pos = i;
               leave_to = to;
            }
         }
         // entering variable's own range
         const Bound& be = bnd[static_cast<size_t>(enter)];
         bool own_finite = dir > 0 ? be.has_hi : be.has_lo;
         Rat own_range = 0;
         if (own_finite)
            own_range = dir > 0 ? be.hi - xval[static_cast<size_t>(enter)]
                                : xval[static_cast<size_t>(enter)] - be.lo;

         if (!has_limit && !own_finite)
            return false; // unbounded ray

         if (own_finite && (!has_limit || own_range <= tmax))
         {
            // bound flip
            apply_step(enter, w, dir, own_range);
            stat[static_cast<size_t>(enter)] = dir > 0 ? AT_UPPER : AT_LOWER;
            continue;
         }

         // pivot
         apply_step(enter, w, dir, tmax);
         int leaving = basis[static_cast<size_t>(leave_pos)];
         stat[static_cast<size_t>(leaving)] = leave_to;
         xval[static_cast<size_t>(leaving)] =
            leave_to == AT_LOWER ? bnd[static_cast<size_t>(leaving)].lo : bnd[static_cast<size_t>(leaving)].hi;
         basis[static_cast<size_t>(leave_pos)] = enter;
         stat[static_cast<size_t>(enter)] = BASIC;

         // update the basis inverse: row leave_pos scaled by 1/w_r, others
         // eliminated
         Rat piv = w[static_cast<size_t>(leave_pos)];
         for (int r = 0; r < m; ++r)
            binv[static_cast<size_t>(leave_pos)][static_cast<size_t>(r)] /= piv;
         for (int i = 0; i < m; ++i)
         {
            if (i == leave_pos || w[static_cast<size_t>(i)] == 0)
               continue;
            Rat f = w[static_cast<size_t>(i)];
            for (int r = 0; r < m; ++r)
               binv[static_cast<size_t>(i)][static_cast<size_t>(r)] -=
                  f * binv[static_cast<size_t>(leave_pos)][static_cast<size_t>(r)];
         }
      }
   }

   void apply_step(int enter, const std::vector<Rat>& w, int dir, const Rat& t)
   {
      if (t == 0)
         return;
      xval[static_cast<size_t>(enter)] += dir * t;
      for (int i = 0; i < m; ++i)
      {
         if (w[static_cast<size_t>(i)] == 0)
            continue;
         int bv = basis[static_cast<size_t>(i)];
         xval[static_cast<size_t>(bv)] -= dir * t * w[static_cast<size_t>(i)];
      }
   }
};

} // namespace

LpResult solve_lp(const IneqSystem& sys, const std::vector<Rat>& objective)
{
   const int n = sys.num_vars();
   const int m = sys.a.rows();
   if (sys.a.cols() != n || static_cast<int>(sys.b.size()) != m ||
       static_cast<int>(objective.size()) != n)
      throw std::invalid_argument("solve_lp: dimension mismatch");
   for (const auto& [lo, hi] : sys.bounds)
      if (lo > hi)
         throw std::invalid_argument("solve_lp: empty bound interval");

   Simplex s;
   s.m = m;
   s.nvars = n + m; // artificials appended on demand
   s.col.resize(static_cast<size_t>(n + m));
   s.bnd.resize(static_cast<size_t>(n + m));
   for (int j = 0; j < n; ++j)
   {
      for (int i = 0; i < m; ++i)
         if (sys.a.at(i, j) != 0)
            s.col[static_cast<size_t>(j)].emplace_back(i, sys.a.at(i, j));
      s.bnd[static_cast<size_t>(j)] = {true, true, sys.bounds[static_cast<size_t>(j)].first,
                                       sys.bounds[static_cast<size_t>(j)].second};
   }
   for (int i = 0; i < m; ++i)
   {
      s.col[static_cast<size_t>(n + i)].emplace_back(i, Rat(1));
      s.bnd[static_cast<size_t>(n + i)] = {true, false, Rat(0), Rat(0)}; // slack in [0, inf)
   }

   s.stat.assign(static_cast<size_t>(s.nvars), AT_LOWER);
   s.xval.assign(static_cast<size_t>(s.nvars), Rat(0));
   for (int j = 0; j < n; ++j)
      s.xval[static_cast<size_t>(j)] = s.bnd[static_cast<size_t>(j)].lo;

   // initial residuals r = b - A * x_N decide slack vs artificial basis
   std::vector<Rat> resid = sys.b;
   for (int j = 0; j < n; ++j)
      if (s.xval[static_cast<size_t>(j)] != 0)
         for (const auto& [i, a] : s.col[static_cast<size_t>(j)])
            resid[static_cast<size_t>(i)] -= a * s.xval[static_cast<size_t>(j)];

   s.basis.assign(static_cast<size_t>(m), -1);
   s.binv.assign(static_cast<size_t>(m), std::vector<Rat>(static_cast<size_t>(m), Rat(0)));
   std::vector<int> artificials;
   for (int i = 0; i < m; ++i)
   {
      if (resid[static_cast<size_t>(i)] >= 0)
      {
         s.basis[static_cast<size_t>(i)] = n + i;
         s.stat[static_cast<size_t>(n + i)] = BASIC;
         s.xval[static_cast<size_t>(n + i)] = resid[static_cast<size_t>(i)];
         s.binv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
      }
      else
      {
         int aj = s.nvars + static_cast<int>(artificials.size());
         artificials.push_back(aj);
         s.col.push_back({{i, Rat(-1)}});
         s.bnd.push_back({true, false, Rat(0), Rat(0)});
         s.stat.push_back(BASIC);
         s.xval.push_back(-resid[static_cast<size_t>(i)]);
         s.basis[static_cast<size_t>(i)] = aj;
         s.binv[static_cast<size_t>(i)][static_cast<size_t>(i)] = -1;
      }
   }
   s.nvars = static_cast<int>(s.col.size());
   s.cost.assign(static_cast<size_t>(s.nvars), Rat(0));

   if (!artificials.empty())
   {
      for (int aj : artificials)
         s.cost[static_cast<size_t>(aj)] = -1; // maximize -sum of artificials
      bool ok = s.optimize();
      (void)ok; // phase 1 cannot be unbounded (costs <= 0, artificials >= 0)
      Rat infeas = 0;
      for (int aj : artificials)
         infeas += s.xval[static_cast<size_t>(aj)];
      if (infeas != 0)
         return {LpResult::Status::Infeasible, Rat(0), {}, {}};
      for (int aj : artificials)
      {
         s.cost[static_cast<size_t>(aj)] = 0;
         s.bnd[static_cast<size_t>(aj)].has_hi = true; // pin to zero for phase 2
         s.bnd[static_cast<size_t>(aj)].hi = 0;
      }
   }

   for (int j = 0; j < n; ++j)
      s.cost[static_cast<size_t>(j)] = objective[static_cast<size_t>(j)];
   for (int j = n; j < s.nvars; ++j)
      if (std::find(artificials.begin(), artificials.end(), j) == artificials.end())
         s.cost[static_cast<size_t>(j)] = 0;

   if (!s.optimize())
      return {LpResult::Status::Unbounded, Rat(0), {}, {}};

   LpResult res;
   res.status = LpResult::Status::Optimal;
   res.point.assign(static_cast<size_t>(n), Rat(0));
   for (int j = 0; j < n; ++j)
      res.point[static_cast<size_t>(j)] = s.xval[static_cast<size_t>(j)];
   res.row_duals = s.duals();
   res.value = 0;
   for (int j = 0; j < n; ++j)
      res.value += objective[static_cast<size_t>(j)] * res.point[static_cast<size_t>(j)];
   return res;
}

LpResult solve_lp_lazy(IneqSystem base, const std::vector<LinIneq>& lazy,
                       const std::vector<Rat>& objective)
{
   for (;;)
   {
      LpResult r = solve_lp(base, objective);
      if (r.status != LpResult::Status::Optimal)
         return r;
      bool added = false;
      for (const LinIneq& row : lazy)
      {
         if (row.violation(r.point) > 0)
         {
            base.add_row(row);
            added = true;
         }
      }
      if (!added)
         return r;
   }
}

} // namespace sst
