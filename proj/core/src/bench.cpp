// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/bench.hpp"

#include <atomic>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sst
{

double shifted_geometric_mean(const std::vector<double>& values, double shift)
{
   if (values.empty())
      return 0;
   double acc = 0;
   for (double v : values)
   {
      if (v + shift <= 0)
         throw std::invalid_argument("shifted_geometric_mean: t + s must be positive");
      acc += std::log(v + shift);
   }
   return std::exp(acc / static_cast<double>(values.size())) - shift;
}

std::optional<Rat> shifted_geometric_mean_exact(const std::vector<Rat>& values, const Rat& shift)
{
   if (values.empty())
      return Rat(0);
   Rat prod = 1;
   for (const Rat& v : values)
   {
      Rat t = v + shift;
      if (t < 0)
         throw std::invalid_argument("shifted_geometric_mean_exact: t + s must be nonnegative");
      prod *= t;
   }
   const unsigned long k = values.size();
   Int num_root, den_root;
   int num_exact = mpz_root(num_root.get_mpz_t(), prod.get_num_mpz_t(), k);
   int den_exact = mpz_root(den_root.get_mpz_t(), prod.get_den_mpz_t(), k);
   if (!num_exact || !den_exact)
      return std::nullopt;
   Rat root(num_root);
   root /= Rat(den_root);
   return root - shift;
}

namespace
{

struct Cell
{
   SolveResult result;
   bool solved = false;
};

} // namespace

BenchReport run_benchmark(const std::vector<BenchInstance>& instances,
                          const std::vector<std::string>& setting_names, double time_limit_sec,
                          int threads)
{
   BenchReport report;
   const size_t ns = setting_names.size();
   const size_t ni = instances.size();
   std::vector<std::vector<Cell>> cells(ns, std::vector<Cell>(ni));

   // parallel over (setting, instance) pairs; each solve is single-threaded
   std::atomic<size_t> next{0};
   const size_t total = ns * ni;
   auto worker = [&]() {
      for (;;)
      {
         size_t idx = next.fetch_add(1);
         if (idx >= total)
            return;
         size_t si = idx / ni, ii = idx % ni;
         Settings s = Settings::named(setting_names[si]);
         SolveResult r = branch_and_cut(instances[ii].graph, s, std::nullopt, time_limit_sec);
         cells[si][ii].result = std::move(r);
         cells[si][ii].solved = cells[si][ii].result.complete;
      }
   };
   int nthreads = std::max(1, threads);
   std::vector<std::thread> pool;
   for (int t = 1; t < nthreads; ++t)
      pool.emplace_back(worker);
   worker();
   for (auto& t : pool)
      t.join();

   report.optima.assign(ns, std::vector<std::optional<long long>>(ni));
   for (size_t si = 0; si < ns; ++si)
   {
      BenchRow row;
      row.setting = setting_names[si];
      std::vector<double> times, nodes;
      double fixed = 0, edges = 0, ptime = 0, leaders = 0, cuts = 0;
      for (size_t ii = 0; ii < ni; ++ii)
      {
         const Cell& c = cells[si][ii];
         if (c.solved)
         {
            ++row.solved;
            report.optima[si][ii] = c.result.optimum;
         }
         times.push_back(c.result.time_sec);
         nodes.push_back(static_cast<double>(c.result.nodes));
         fixed += static_cast<double>(c.result.presolve.deleted.size());
         edges += static_cast<double>(c.result.presolve.added_edges.size());
         ptime += c.result.presolve_time_sec;
         leaders += static_cast<double>(c.result.plan.leaders.size());
         cuts += static_cast<double>(c.result.plan.num_cuts());
      }
      row.sgm_time = shifted_geometric_mean(times, 1.0);
      row.sgm_nodes = shifted_geometric_mean(nodes, 100.0);
      if (ni > 0)
      {
         row.mean_fixed = fixed / static_cast<double>(ni);
         row.mean_edges = edges / static_cast<double>(ni);
         row.mean_presolve_time = ptime / static_cast<double>(ni);
         row.mean_leaders = leaders / static_cast<double>(ni);
         row.mean_cuts = cuts / static_cast<double>(ni);
      }
      report.rows.push_back(row);
   }
   return report;
}

std::string BenchReport::to_csv() const
{
   std::ostringstream out;
   out << "setting,opt,sgm_time,sgm_nodes,fixed,edges,presolve_time,leaders,cuts\n";
   for (const BenchRow& r : rows)
      out << r.setting << ',' << r.solved << ',' << r.sgm_time << ',' << r.sgm_nodes << ','
          << r.mean_fixed << ',' << r.mean_edges << ',' << r.mean_presolve_time << ','
          << r.mean_leaders << ',' << r.mean_cuts << '\n';
   return out.str();
}

std::string BenchReport::to_table() const
{
   std::ostringstream out;
   out << std::left << std::setw(16) << "setting" << std::right << std::setw(6) << "#opt"
       << std::setw(12) << "time" << std::setw(12) << "#nodes" << std::setw(9) << "#fixed"
       << std::setw(9) << "#edges" << std::setw(8) << "|L|" << std::setw(9) << "|S(L)|" << '\n';
   for (const BenchRow& r : rows)
   {
      out << std::left << std::setw(16) << r.setting << std::right << std::setw(6) << r.solved
          << std::setw(12) << std::fixed << std::setprecision(3) << r.sgm_time << std::setw(12)
          << std::setprecision(1) << r.sgm_nodes << std::setw(9) << r.mean_fixed << std::setw(9)
          << r.mean_edges << std::setw(8) << r.mean_leaders << std::setw(9) << r.mean_cuts << '\n';
   }
   return out.str();
}

} // namespace sst
