// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include "sst/autgroup.hpp"
#include "sst/bench.hpp"
#include "sst/canonicalize.hpp"
#include "sst/generate.hpp"
#include "sst/solver.hpp"
#include "sst/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace
{

std::string slurp(const std::string& path)
{
   std::ifstream in(path);
   if (!in)
      throw std::runtime_error("cannot open '" + path + "'");
   std::ostringstream ss;
   ss << in.rdbuf();
   return ss.str();
}

void spit(const std::string& path, const std::string& text)
{
   std::ofstream out(path);
   if (!out)
      throw std::runtime_error("cannot write '" + path + "'");
   out << text;
}

struct LoadOptions
{
   bool complement = false;
   std::string weights_file;
   std::string generators_file;
};

sst::Graph load_instance(const std::string& path, const LoadOptions& opts)
{
   sst::Graph g = sst::parse_dimacs(slurp(path));
   if (!opts.weights_file.empty())
      sst::parse_weights(slurp(opts.weights_file), g);
   if (opts.complement)
      g = sst::complement(g);
   return g;
}

sst::Bsgs load_group(const sst::Graph& g, const LoadOptions& opts)
{
   if (!opts.generators_file.empty())
   {
      auto gens = sst::read_generators(slurp(opts.generators_file), g.num_nodes());
      return sst::schreier_sims(gens, {}, g.num_nodes());
   }
   return sst::schreier_sims(sst::graph_automorphisms(g), {}, g.num_nodes());
}

int threads_from_env()
{
   const char* env = std::getenv("SSTTOOL_THREADS");
   if (!env)
      return 1;
   int t = std::atoi(env);
   return t > 0 ? t : 1;
}

} // namespace

int main(int argc, char** argv)
{
   CLI::App app{"ssttool - symmetry-aware stable set toolkit"};
   app.require_subcommand(1);

   // ---- generate -----------------------------------------------------------
   auto* gen = app.add_subcommand("generate", "emit instances with a property manifest");
   std::string gen_kind = "tp";
   std::string gen_out = "instance";
   std::string gen_builtin = "c8";
   unsigned gen_seed = 0;
   int gen_n = 10, gen_m = 3, gen_l = 2, gen_k = 2, gen_triples = 3, gen_extra = 2;
   gen->add_option("--kind", gen_kind, "tp|bipartite|cycle|3dm|disjoint-cliques|builtin")
      ->check(CLI::IsMember({"tp", "bipartite", "cycle", "3dm", "disjoint-cliques", "builtin"}));
   gen->add_option("--builtin", gen_builtin, "c8|fig4|fig6")->check(CLI::IsMember({"c8", "fig4", "fig6"}));
   gen->add_option("--n", gen_n, "node count");
   gen->add_option("--m", gen_m, "clique size (disjoint-cliques)");
   gen->add_option("--l", gen_l, "clique count (disjoint-cliques)");
   gen->add_option("--k", gen_k, "ground set size (3dm)");
   gen->add_option("--triples", gen_triples, "triple count (3dm)");
   gen->add_option("--extra", gen_extra, "extra cross edges (bipartite)");
   gen->add_option("--seed", gen_seed, "random seed (default 0)");
   gen->add_option("--out", gen_out, "output path prefix");

   // ---- inspect ------------------------------------------------------------
   auto* ins = app.add_subcommand("inspect", "print the SST plan of an instance");
   std::string ins_file, ins_policy = "first";
   LoadOptions ins_load;
   bool ins_full = false;
   ins->add_option("file", ins_file, "DIMACS instance")->required();
   ins->add_option("--policy", ins_policy, "first|min|max|stringent")
      ->check(CLI::IsMember({"first", "min", "max", "stringent"}));
   ins->add_flag("--complement", ins_load.complement, "complement the graph at ingestion");
   ins->add_option("--weights", ins_load.weights_file, "weights sidecar (w <node> <int>)");
   ins->add_option("--generators", ins_load.generators_file, "generator file; skips the in-house search");
   ins->add_flag("--run-to-full", ins_full, "run the SST algorithm until L = [n]");

   // ---- solve --------------------------------------------------------------
   auto* sol = app.add_subcommand("solve", "branch-and-cut for maximum-weight stable set");
   std::string sol_file, sol_setting = "default", sol_policy, sol_cuts;
   LoadOptions sol_load;
   long long sol_cutoff = 0;
   bool sol_has_cutoff = false;
   double sol_tl = 0;
   unsigned sol_seed = 0;
   bool sol_presolve = false, sol_no_add_edges = false, sol_path_cuts = false;
   int sol_resym = -1;
   sol->add_option("file", sol_file, "DIMACS instance")->required();
   sol->add_option("--setting", sol_setting, "named setting")
      ->check(CLI::IsMember(sst::Settings::all_names()));
   sol->add_option("--cutoff", sol_cutoff, "initial primal value")->each([&](const std::string&) {
      sol_has_cutoff = true;
   });
   sol->add_option("--time-limit", sol_tl, "seconds (0 = none)");
   sol->add_option("--seed", sol_seed, "random seed (reports only)");
   sol->add_flag("--complement", sol_load.complement, "complement the graph at ingestion");
   sol->add_option("--weights", sol_load.weights_file, "weights sidecar");
   sol->add_option("--generators", sol_load.generators_file, "generator file; skips the in-house search");
   sol->add_option("--policy", sol_policy, "override leader policy: first|min|max|stringent");
   sol->add_flag("--presolve", sol_presolve, "enable SST presolving");
   sol->add_flag("--no-add-edges", sol_no_add_edges, "presolve without the addition operation");
   sol->add_option("--cuts", sol_cuts, "sst|sstclique|both|none (static root cuts)");
   sol->add_flag("--path-cuts", sol_path_cuts, "separate SST path cuts");
   sol->add_option("--resymmetrize", sol_resym, "symmetry recomputation rounds after presolving");

   // ---- bench --------------------------------------------------------------
   auto* ben = app.add_subcommand("bench", "run a setting comparison over instances");
   std::string ben_path, ben_settings = "all", ben_out;
   double ben_tl = 60;
   ben->add_option("path", ben_path, "instance directory or list file")->required();
   ben->add_option("--settings", ben_settings, "'all' or comma-separated names");
   ben->add_option("--time-limit", ben_tl, "seconds per solve");
   ben->add_option("--out", ben_out, "CSV output path");

   // ---- verify -------------------------------------------------------------
   auto* ver = app.add_subcommand("verify", "run a verification suite");
   std::string ver_suite;
   unsigned ver_seed = 0;
   int ver_count = 20, ver_n = 10;
   ver->add_option("--suite", ver_suite, "tu|bipartite-hull|presolve|canonical|reduction")
      ->required()
      ->check(CLI::IsMember({"tu", "bipartite-hull", "presolve", "canonical", "reduction"}));
   ver->add_option("--seed", ver_seed, "random seed (default 0)");
   ver->add_option("--count", ver_count, "number of random cases");
   ver->add_option("--n", ver_n, "max node count for random cases");

   try
   {
      app.parse(argc, argv);
   }
   catch (const CLI::ParseError& e)
   {
      if (e.get_exit_code() == 0)
         return app.exit(e); // --help
      app.exit(e);
      return 2; // usage error contract
   }

   try
   {
      if (*gen)
      {
         sst::Graph g;
         unsigned seed = gen_seed;
         std::mt19937 rng(seed);
         std::string kind = gen_kind;
         if (kind == "tp")
            g = sst::random_tp_graph(gen_n, rng);
         else if (kind == "bipartite")
            g = sst::random_bipartite_graph(gen_n, gen_extra, rng);
         else if (kind == "cycle")
            g = sst::cycle_graph(gen_n);
         else if (kind == "disjoint-cliques")
            g = sst::disjoint_cliques(gen_m, gen_l);
         else if (kind == "3dm")
         {
            auto triples = sst::random_triples(gen_k, gen_triples, rng);
            auto red = sst::reduction_3dm(gen_k, triples);
            g = red.graph;
            spit(gen_out + ".plan", sst::serialize_plan(red.plan));
            std::ostringstream w;
            for (int v = 0; v < g.num_nodes(); ++v)
               w << "w " << v + 1 << ' ' << sst::to_string(red.weights[static_cast<size_t>(v)]) << '\n';
            spit(gen_out + ".w", w.str());
            kind = "3dm";
         }
         else // builtin
         {
            if (gen_builtin == "c8")
               g = sst::builtin_c8();
            else if (gen_builtin == "fig4")
               g = sst::builtin_fig4();
            else
               g = sst::builtin_fig6();
            kind = "builtin-" + gen_builtin;
         }
         spit(gen_out + ".col", sst::emit_dimacs(g));
         spit(gen_out + ".manifest.json", sst::instance_manifest(g, kind, seed));
         std::cout << "wrote " << gen_out << ".col (" << g.num_nodes() << " nodes, " << g.num_edges()
                   << " edges)\n";
         return 0;
      }

      if (*ins)
      {
         sst::Graph g = load_instance(ins_file, ins_load);
         sst::Bsgs group = load_group(g, ins_load);
         if (group.is_trivial())
         {
            std::cout << "no nontrivial symmetry\n";
            return 0;
         }
         std::cout << "automorphism group order " << sst::to_string(group.order()) << "\n";
         sst::SstPlan plan =
            sst::run_sst_algorithm(group, sst::leader_policy_from_string(ins_policy), ins_full);
         std::cout << sst::serialize_plan(plan);
         std::cout << "cuts: " << plan.num_cuts() << "\n";
         std::cout << "stringent: " << (sst::is_stringent(plan, group) ? "yes" : "no") << "\n";
         return 0;
      }

      if (*sol)
      {
         sst::Graph g = load_instance(sol_file, sol_load);
         sst::Settings settings = sst::Settings::named(sol_setting);
         if (!sol_policy.empty())
         {
            settings.policy = sst::leader_policy_from_string(sol_policy);
            settings.use_symmetry = true;
         }
         if (sol_presolve)
         {
            settings.presolve = true;
            settings.use_symmetry = true;
         }
         if (sol_no_add_edges)
            settings.add_edges = false;
         if (!sol_cuts.empty())
         {
            settings.use_symmetry = settings.use_symmetry || sol_cuts != "none";
            if (sol_cuts == "sst")
               settings.cuts = sst::CutFamily::Sst;
            else if (sol_cuts == "sstclique")
               settings.cuts = sst::CutFamily::SstClique;
            else if (sol_cuts == "both")
               settings.cuts = sst::CutFamily::Both;
            else if (sol_cuts == "none")
               settings.cuts = sst::CutFamily::None;
            else
               throw CLI::ValidationError("--cuts", "expected sst|sstclique|both|none");
         }
         if (sol_path_cuts)
         {
            settings.separate_path_cuts = true;
            settings.use_symmetry = true;
         }
         if (sol_resym >= 0)
            settings.resymmetrize = sol_resym;

         auto cutoff = sol_has_cutoff ? std::optional<long long>(sol_cutoff) : std::nullopt;
         std::optional<std::vector<sst::Perm>> gens;
         if (!sol_load.generators_file.empty())
            gens = sst::read_generators(slurp(sol_load.generators_file), g.num_nodes());
         sst::SolveResult r =
            sst::branch_and_cut(g, settings, cutoff, sol_tl, gens ? &*gens : nullptr);
         std::cout << "setting: " << settings.name << " (seed " << sol_seed << ")\n";
         std::cout << "status: " << (r.complete ? "optimal" : "time-limit") << "\n";
         std::cout << "optimum: " << r.optimum << "\n";
         if (!r.complete)
            std::cout << "dual bound: " << r.dual_bound << "\n";
         std::cout << "stable set:";
         for (int v : r.incumbent)
            std::cout << ' ' << v;
         std::cout << "\nnodes: " << r.nodes << "\ntime: " << r.time_sec << "s\n";
         std::cout << "presolve: fixed " << r.presolve.deleted.size() << ", added edges "
                   << r.presolve.added_edges.size() << "\n";
         for (const auto& [fam, cnt] : r.cuts_added)
            std::cout << "cuts[" << fam << "]: " << cnt << "\n";
         return 0;
      }

      if (*ben)
      {
         namespace fs = std::filesystem;
         std::vector<sst::BenchInstance> instances;
         auto add_file = [&](const fs::path& p) {
            sst::Graph g;
            try
            {
               g = sst::parse_dimacs(slurp(p.string()));
            }
            catch (const std::exception& e)
            {
               std::cerr << "warning: skipping " << p << ": " << e.what() << "\n";
               return;
            }
            instances.push_back({p.filename().string(), std::move(g)});
         };
         if (fs::is_directory(ben_path))
         {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(ben_path))
            {
               auto ext = entry.path().extension().string();
               if (ext == ".col" || ext == ".clq" || ext == ".dimacs")
                  files.push_back(entry.path());
            }
            std::sort(files.begin(), files.end());
            for (const auto& f : files)
               add_file(f);
         }
         else
         {
            std::istringstream list(slurp(ben_path));
            std::string line;
            while (std::getline(list, line))
               if (!line.empty())
                  add_file(line);
         }
         std::vector<std::string> names;
         if (ben_settings == "all")
            names = sst::Settings::all_names();
         else
         {
            std::istringstream ss(ben_settings);
            std::string tok;
            while (std::getline(ss, tok, ','))
               names.push_back(tok);
            for (const auto& nm : names)
               sst::Settings::named(nm); // validate
         }
         sst::BenchReport rep = sst::run_benchmark(instances, names, ben_tl, threads_from_env());
         std::cout << rep.to_table();
         if (!ben_out.empty())
         {
            spit(ben_out, rep.to_csv());
            std::cout << "wrote " << ben_out << "\n";
         }
         // consistency across settings, instance-wise
         for (size_t ii = 0; ii < instances.size(); ++ii)
         {
            std::optional<long long> ref;
            for (size_t si = 0; si < names.size(); ++si)
            {
               auto v = rep.optima[si][ii];
               if (!v)
                  continue;
               if (!ref)
                  ref = v;
               else if (*ref != *v)
               {
                  std::cerr << "error: optima disagree on " << instances[ii].name << "\n";
                  return 1;
               }
            }
         }
         return 0;
      }

      if (*ver)
      {
         sst::VerifyReport rep;
         if (ver_suite == "tu")
            rep = sst::verify_tu(ver_seed, ver_count);
         else if (ver_suite == "bipartite-hull")
            rep = sst::verify_bipartite_hull(ver_seed, ver_count, ver_n);
         else if (ver_suite == "presolve")
            rep = sst::verify_presolve();
         else if (ver_suite == "canonical")
            rep = sst::verify_canonical(ver_seed, ver_count, ver_n);
         else
            rep = sst::verify_reduction(ver_seed, ver_count);
         std::cout << "suite " << rep.suite << " (seed " << ver_seed << ")\n";
         for (const auto& c : rep.cases)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                      << (c.detail.empty() ? "" : "  | " + c.detail) << "\n";
         std::cout << (rep.all_pass() ? "all passed" : "FAILURES") << "\n";
         return rep.all_pass() ? 0 : 1;
      }
   }
   catch (const std::exception& e)
   {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
   }
   return 2;
}
