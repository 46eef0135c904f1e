// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#ifndef SST_BENCH_HPP
#define SST_BENCH_HPP

#include "sst/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sst
{

/// Shifted geometric mean (prod (t_i + s))^(1/n) - s.
double shifted_geometric_mean(const std::vector<double>& values, double shift);

/// Exact rational evaluation when prod (t_i + s) is a perfect n-th power of
/// a rational; nullopt otherwise.  Values and shift must keep t_i + s >= 0.
std::optional<Rat> shifted_geometric_mean_exact(const std::vector<Rat>& values, const Rat& shift);

struct BenchInstance
{
   std::string name;
   Graph graph;
};

struct BenchRow
{
   std::string setting;
   int solved = 0;
   double sgm_time = 0;   // shift 1
   double sgm_nodes = 0;  // shift 100
   double mean_fixed = 0;
   double mean_edges = 0;
   double mean_presolve_time = 0;
   double mean_leaders = 0;
   double mean_cuts = 0; // |S(L)|
};

struct BenchReport
{
   std::vector<BenchRow> rows;
   // per (setting, instance): optimum or nullopt on timeout
   std::vector<std::vector<std::optional<long long>>> optima;

   std::string to_csv() const;
   std::string to_table() const;
};

/// Runs every setting on every instance.  Instances are processed in
/// parallel up to `threads` workers (one solve stays single-threaded);
/// results are independent of the schedule.
BenchReport run_benchmark(const std::vector<BenchInstance>& instances,
                          const std::vector<std::string>& setting_names, double time_limit_sec,
                          int threads = 1);

} // namespace sst

#endif
