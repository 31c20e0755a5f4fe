// tworoute: generate, solve, verify and benchmark two-vehicle routing
// instances built from the solvable two-period case.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tworoute/errors.hpp"
#include "tworoute/generator.hpp"
#include "tworoute/io.hpp"
#include "tworoute/knn.hpp"
#include "tworoute/sliding.hpp"
#include "tworoute/stats.hpp"
#include "tworoute/two_tsp.hpp"
#include "tworoute/two_vrp.hpp"

namespace fs = std::filesystem;
using namespace tworoute;

namespace {

constexpr int kExitInfeasible = 2;
constexpr int kExitGuard = 3;
constexpr int kExitIo = 4;

VrpSolveOptions solver_options_from_env() {
  VrpSolveOptions opts;
  if (const char* s = std::getenv("TWOROUTE_MAX_SUBSET_BITS")) {
    const int bits = std::atoi(s);
    if (bits > 0) opts.max_subset_bits = bits;
  }
  return opts;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string instance_name(const std::string& prefix, int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s_%04d", prefix.c_str(), index);
  return buf;
}

// Mapped instances put each customer on a single node; the vehicle legs read
// back as the two closed tours.
TwoTourSolution lower_vrp_solution(const TwoVrpInstance& mapped, const TwoVrpSolution& sol) {
  TwoTourSolution out;
  out.tour1.push_back(1);
  for (const RouteStop& s : sol.route1) out.tour1.push_back(mapped.customer(s.customer).left);
  out.tour1.push_back(1);
  out.tour2.push_back(1);
  for (const RouteStop& s : sol.route2) out.tour2.push_back(mapped.customer(s.customer).left);
  out.tour2.push_back(1);
  out.total_length = sol.cost;
  return out;
}

struct GenArgs {
  std::string family = "kalmanson-2tsp";
  int n = 50;
  int fixed = 30;
  int count = 1;
  std::uint64_t seed = 0;
  double lo = 0.1, hi = 1.1;
  bool no_permute = false;
  bool blind = false;
  bool allow_odd = false;
  std::string out_dir = ".";
  std::string prefix = "inst";
};

int run_gen(const GenArgs& a) {
  fs::create_directories(a.out_dir);
  for (int i = 0; i < a.count; ++i) {
    const std::string base = (fs::path(a.out_dir) / instance_name(a.prefix, i)).string();
    if (a.family == "kalmanson-2tsp") {
      GeneratorParams p;
      p.n = a.n;
      p.lo = a.lo;
      p.hi = a.hi;
      p.seed = a.seed + static_cast<std::uint64_t>(i);
      p.permute_output = !a.no_permute;
      const auto g = generate_2tsp_instance(p, a.fixed, a.allow_odd);
      TwoTspBundle bundle;
      bundle.matrix = g.instance.matrix();
      bundle.fixed = g.instance.fixed();
      bundle.optimum = g.known_optimum;
      bundle.hidden_order = g.source.hidden_order;
      write_2tsp_bundle(base, bundle, a.blind);
      std::cout << base << " n=" << a.n << " fixed=" << a.fixed;
      if (!a.blind) std::cout << " optimum=" << format_number(g.known_optimum);
      std::cout << "\n";
    } else if (a.family == "random-2vrp") {
      RandomVrpParams p;
      p.n = a.n;
      const auto inst = random_2vrp_instance(a.seed + static_cast<std::uint64_t>(i), p);
      write_2vrp_instance(base + ".2vrp", inst);
      std::cout << base << ".2vrp n=" << a.n << "\n";
    } else {
      throw CLI::ValidationError("--family", "unknown family " + a.family);
    }
  }
  return 0;
}

struct SolveArgs {
  std::string mode;
  std::string input;
  std::string out;
  bool near_balanced = false;
  int s = 3, l = 1;
  std::string generator = "rndh";
  int repetitions = 100;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double time_budget_ms = 0.0;  // 0: fixed repetition count
  std::string log_file;
};

bool is_vrp_file(const std::string& path) {
  return path.size() > 5 && path.substr(path.size() - 5) == ".2vrp";
}

int run_solve(const SolveArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const VrpSolveOptions solver_opts = solver_options_from_env();

  auto report = [&](double cost, std::optional<double> optimum) {
    std::cout << "cost " << format_number(cost);
    if (optimum) std::cout << " gap " << format_number(gap_percent(cost, *optimum)) << "%";
    std::cout << " time " << format_number(elapsed_ms(t0)) << " ms\n";
  };

  if (a.mode == "2vrp-exact" || a.mode == "2vrp-oracle") {
    const auto inst = read_2vrp_instance(a.input);
    const auto sol = a.mode == "2vrp-exact" ? solve_2vrp_exact(inst, solver_opts)
                                            : oracle_2vrp(inst, solver_opts);
    write_2vrp_solution(a.out.empty() ? a.input + ".sol" : a.out, sol);
    report(sol.cost, std::nullopt);
    return 0;
  }

  if (a.mode == "heuristic" && is_vrp_file(a.input)) {
    if (a.generator == "ksh")
      throw CLI::ValidationError("--generator", "ksh needs a two-period bundle input");
    if (!a.seed_set) throw CLI::RequiredError("--seed (stochastic mode)");
    const auto inst = read_2vrp_instance(a.input);
    HeuristicOptions opts;
    opts.solver = solver_opts;
    if (a.time_budget_ms > 0) opts.time_budget_ms = a.time_budget_ms;
    const auto res = two_vrp_heuristic(inst, SlidingParams{a.s, a.l}, StartGenerator::rndh,
                                       a.repetitions, a.seed, nullptr, opts);
    write_2vrp_solution(a.out.empty() ? a.input + ".sol" : a.out, res.best);
    report(res.best.cost, std::nullopt);
    return 0;
  }

  // Everything else reads a two-period bundle base path.
  const auto bundle = read_2tsp_bundle(a.input);
  const auto inst = bundle.instance(a.near_balanced);
  const std::string out = a.out.empty() ? a.input + ".sol" : a.out;

  // The dynamic program is exact in the solvable ordering; when the bundle
  // discloses it, solve there and map the tours back. Blind bundles are
  // solved in their given labeling (the restricted-family optimum).
  auto solve_ordered = [&](bool lowmem) {
    if (!bundle.hidden_order) {
      return lowmem ? solve_balanced_2tsp_lowmem(inst, true) : solve_balanced_2tsp(inst);
    }
    const Permutation& order = *bundle.hidden_order;
    const Permutation inv = order.inverse();
    std::vector<int> fixed_rel;
    for (int v : bundle.fixed) fixed_rel.push_back(inv(v));
    TwoTspInstance ordered(permute(bundle.matrix, order), std::move(fixed_rel),
                           a.near_balanced);
    TwoTourSolution s =
        lowmem ? solve_balanced_2tsp_lowmem(ordered, true) : solve_balanced_2tsp(ordered);
    for (auto* t : {&s.tour1, &s.tour2})
      for (auto& v : *t) v = order(v);
    // The relabeled tours need not start at node 1; rotate them back.
    for (auto* t : {&s.tour1, &s.tour2}) {
      t->pop_back();
      const auto it = std::find(t->begin(), t->end(), 1);
      std::rotate(t->begin(), it, t->end());
      t->push_back(1);
    }
    return s;
  };

  TwoTourSolution sol;
  if (a.mode == "2tsp-exact") {
    sol = solve_ordered(false);
  } else if (a.mode == "2tsp-lowmem") {
    sol = solve_ordered(true);
  } else if (a.mode == "2tsp-oracle") {
    sol = oracle_2tsp(inst);
  } else if (a.mode == "ks") {
    sol = ks_heuristic(inst);
  } else if (a.mode == "heuristic") {
    if (!a.seed_set) throw CLI::RequiredError("--seed (stochastic mode)");
    const auto mapped = map_2tsp_to_2vrp(inst);
    HeuristicOptions opts;
    opts.solver = solver_opts;
    if (a.time_budget_ms > 0) opts.time_budget_ms = a.time_budget_ms;
    const auto gen = a.generator == "ksh" ? StartGenerator::ksh : StartGenerator::rndh;
    const auto res = two_vrp_heuristic(mapped, SlidingParams{a.s, a.l}, gen, a.repetitions,
                                       a.seed, &inst, opts);
    if (!a.log_file.empty()) {
      std::ofstream log(a.log_file);
      log << "repetition,pass,best_cost,elapsed_ms\n";
      for (const auto& row : res.log)
        log << row.repetition << ',' << row.pass << ',' << format_number(row.best_cost) << ','
            << format_number(row.elapsed_ms) << '\n';
    }
    sol = lower_vrp_solution(mapped, res.best);
  } else {
    throw CLI::ValidationError("mode", "unknown solve mode " + a.mode);
  }
  write_two_tour_solution(out, sol);
  report(sol.total_length, bundle.optimum);
  return 0;
}

int run_verify(const std::string& input, const std::string& solution) {
  if (is_vrp_file(input)) {
    const auto inst = read_2vrp_instance(input);
    const auto sol = read_2vrp_solution(solution);
    const auto rep = evaluate_2vrp(inst, sol);
    std::cout << (rep.feasible ? "feasible" : "infeasible") << " cost "
              << format_number(rep.cost) << "\n";
    for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    return rep.feasible ? 0 : kExitInfeasible;
  }
  const auto bundle = read_2tsp_bundle(input);
  const auto inst = bundle.instance(true);
  const auto sol = read_two_tour_solution(solution);
  const auto rep = evaluate_solution(inst, sol);
  std::cout << (rep.feasible ? "feasible" : "infeasible") << " total "
            << format_number(rep.total);
  if (bundle.optimum && rep.feasible)
    std::cout << " gap " << format_number(gap_percent(rep.total, *bundle.optimum)) << "%";
  std::cout << "\n";
  for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
  return rep.feasible ? 0 : kExitInfeasible;
}

struct ExperimentArgs {
  std::string family = "kalmanson-2tsp";
  int count = 20;
  int n = 50;
  int fixed = 30;
  int s = 3, l = 1;
  std::string generator = "rndh";
  int repetitions = 100;
  std::string checkpoints = "1,5,10,20,30,40,50,60,70,80,90,100";
  std::uint64_t seed = 0;
  std::string out_dir;
  int jobs = 1;
  std::string reference_file;
  std::string external_dir;
  bool stop_at_optimum = false;
};

std::vector<int> parse_checkpoints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw CLI::ValidationError("--checkpoints", "no checkpoints");
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1])
      throw CLI::ValidationError("--checkpoints", "checkpoints must increase");
  return out;
}

struct InstanceRun {
  int id = 0;
  std::optional<double> optimum;
  double best = 0.0;
  double elapsed = 0.0;
  std::vector<double> at_checkpoint;  // best cost after each checkpoint repetition
  std::vector<HeuristicLogRow> log;
  std::string error;
};

int run_experiment(const ExperimentArgs& a) {
  const auto checkpoints = parse_checkpoints(a.checkpoints);
  if (a.out_dir.empty()) throw CLI::RequiredError("--out");
  fs::create_directories(a.out_dir);
  const VrpSolveOptions solver_opts = solver_options_from_env();

  std::map<int, double> reference;
  if (!a.reference_file.empty()) {
    std::ifstream in(a.reference_file);
    if (!in) throw IoError("cannot read reference file " + a.reference_file);
    int id;
    double value;
    while (in >> id >> value) reference[id] = value;
  }

  std::vector<std::string> external_bases;
  if (a.family == "external") {
    if (a.external_dir.empty()) throw CLI::RequiredError("--external-dir");
    for (const auto& entry : fs::directory_iterator(a.external_dir))
      if (entry.path().extension() == ".matrix") {
        auto base = entry.path();
        base.replace_extension();
        external_bases.push_back(base.string());
      }
    std::sort(external_bases.begin(), external_bases.end());
    if (external_bases.empty()) throw IoError("no .matrix files in " + a.external_dir);
  }
  const int count = a.family == "external" ? static_cast<int>(external_bases.size()) : a.count;

  std::vector<InstanceRun> runs(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int id = next.fetch_add(1);
      if (id >= count) return;
      InstanceRun& r = runs[static_cast<std::size_t>(id)];
      r.id = id;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        std::optional<TwoTspInstance> source;
        std::optional<TwoVrpInstance> vrp;
        if (a.family == "kalmanson-2tsp") {
          GeneratorParams p;
          p.n = a.n;
          p.seed = a.seed + static_cast<std::uint64_t>(id);
          const auto g = generate_2tsp_instance(p, a.fixed);
          r.optimum = g.known_optimum;
          source = g.instance;
          vrp = map_2tsp_to_2vrp(*source);
        } else if (a.family == "random-2vrp") {
          RandomVrpParams p;
          p.n = a.n;
          vrp = random_2vrp_instance(a.seed + static_cast<std::uint64_t>(id), p);
        } else {
          const auto bundle = read_2tsp_bundle(external_bases[static_cast<std::size_t>(id)]);
          r.optimum = bundle.optimum;
          source = bundle.instance(true);
          vrp = map_2tsp_to_2vrp(*source);
        }

        HeuristicOptions opts;
        opts.solver = solver_opts;
        if (a.stop_at_optimum && r.optimum) opts.stop_at = *r.optimum;
        const auto gen = a.generator == "ksh" ? StartGenerator::ksh : StartGenerator::rndh;
        const auto res = two_vrp_heuristic(
            *vrp, SlidingParams{a.s, a.l}, gen, a.repetitions,
            a.seed * 1000003ULL + static_cast<std::uint64_t>(id), source ? &*source : nullptr,
            opts);
        r.best = res.best.cost;
        r.log = res.log;
        r.at_checkpoint.assign(checkpoints.size(), res.best.cost);
        for (std::size_t c = 0; c < checkpoints.size(); ++c) {
          double best = kInf;
          for (const auto& row : res.log)
            if (row.repetition <= checkpoints[c]) best = std::min(best, row.best_cost);
          if (std::isfinite(best)) r.at_checkpoint[c] = best;
        }
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      r.elapsed = elapsed_ms(t0);
    }
  };
  {
    std::vector<std::thread> pool;
    const int jobs = std::max(1, a.jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // All artifact writes happen on this thread, one file at a time.
  {
    std::ofstream iters(fs::path(a.out_dir) / "iterations.csv");
    iters << "instance_id,repetition,iteration,best_cost,gap_percent,elapsed_ms\n";
    for (const auto& r : runs) {
      for (const auto& row : r.log) {
        iters << r.id << ',' << row.repetition << ',' << row.pass << ','
              << format_number(row.best_cost) << ',';
        if (r.optimum) iters << format_number(gap_percent(row.best_cost, *r.optimum));
        iters << ',' << format_number(row.elapsed_ms) << '\n';
      }
    }
  }
  {
    std::ofstream insts(fs::path(a.out_dir) / "instances.csv");
    insts << "instance_id,optimum,best_cost,best_gap_percent,reference,improved,elapsed_ms,error\n";
    for (const auto& r : runs) {
      insts << r.id << ',';
      if (r.optimum) insts << format_number(*r.optimum);
      insts << ',' << format_number(r.best) << ',';
      if (r.optimum) insts << format_number(gap_percent(r.best, *r.optimum));
      insts << ',';
      const auto ref = reference.find(r.id);
      if (ref != reference.end())
        insts << format_number(ref->second) << ',' << (r.best <= ref->second ? 1 : 0);
      else
        insts << ',';
      insts << ',' << format_number(r.elapsed) << ',' << r.error << '\n';
    }
  }

  bool all_known = true;
  for (const auto& r : runs) all_known = all_known && r.optimum.has_value() && r.error.empty();
  {
    std::ofstream cps(fs::path(a.out_dir) / "checkpoints.csv");
    cps << "checkpoint,mean_gap,median_gap,q1,q3,whisker_lo,whisker_hi,count_optimal,count\n";
    if (all_known) {
      for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        std::vector<double> gaps;
        for (const auto& r : runs) gaps.push_back(gap_percent(r.at_checkpoint[c], *r.optimum));
        const auto st = box_stats(gaps);
        cps << checkpoints[c] << ',' << format_number(st.mean) << ',' << format_number(st.median)
            << ',' << format_number(st.q1) << ',' << format_number(st.q3) << ','
            << format_number(st.whisker_lo) << ',' << format_number(st.whisker_hi) << ','
            << st.count_optimal << ',' << st.count << '\n';
      }
    }
  }

  int failures = 0;
  for (const auto& r : runs)
    if (!r.error.empty()) {
      ++failures;
      std::cout << "instance " << r.id << " failed: " << r.error << "\n";
    }
  if (all_known) {
    std::vector<double> final_gaps;
    for (const auto& r : runs) final_gaps.push_back(gap_percent(r.best, *r.optimum));
    const auto st = box_stats(final_gaps);
    std::cout << "instances " << st.count << "  mean% " << format_number(st.mean) << "  best% "
              << format_number(quantile(final_gaps, 0.0)) << "  worst% "
              << format_number(quantile(final_gaps, 1.0)) << "  optimal " << st.count_optimal
              << "/" << st.count << "\n";
    std::cout << "count-optimal by checkpoint:";
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
      int opt = 0;
      for (const auto& r : runs)
        opt += gap_percent(r.at_checkpoint[c], *r.optimum) == 0.0 ? 1 : 0;
      std::cout << ' ' << opt;
    }
    std::cout << "\n";
  } else {
    std::vector<double> costs;
    for (const auto& r : runs)
      if (r.error.empty()) costs.push_back(r.best);
    if (!costs.empty())
      std::cout << "instances " << costs.size() << "  mean cost "
                << format_number(box_stats(costs).mean) << "\n";
  }
  if (!reference.empty()) {
    int improved = 0, with_ref = 0;
    for (const auto& r : runs) {
      const auto it = reference.find(r.id);
      if (it == reference.end() || !r.error.empty()) continue;
      ++with_ref;
      improved += r.best <= it->second ? 1 : 0;
    }
    std::cout << "improved " << improved << "/" << with_ref << " vs reference\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-vehicle routing toolkit"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate seeded instances");
  gen->add_option("--family", gen_args.family, "kalmanson-2tsp | random-2vrp");
  gen->add_option("--n", gen_args.n, "number of nodes / customers");
  gen->add_option("--fixed", gen_args.fixed, "nodes visited in both periods");
  gen->add_option("--count", gen_args.count, "instances to generate");
  gen->add_option("--seed", gen_args.seed, "base seed; instance i uses seed+i")->required();
  gen->add_option("--lo", gen_args.lo, "draw interval lower end");
  gen->add_option("--hi", gen_args.hi, "draw interval upper end");
  gen->add_flag("--no-permute", gen_args.no_permute, "keep the solvable ordering visible");
  gen->add_flag("--blind", gen_args.blind, "omit optimum and hidden order from bundles");
  gen->add_flag("--allow-odd", gen_args.allow_odd, "accept odd n+fixed (near-balanced)");
  gen->add_option("--out", gen_args.out_dir, "output directory");
  gen->add_option("--prefix", gen_args.prefix, "file name prefix");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve
      ->add_option("mode", solve_args.mode,
                   "2tsp-exact | 2tsp-lowmem | 2tsp-oracle | ks | 2vrp-exact | 2vrp-oracle | "
                   "heuristic")
      ->required();
  solve->add_option("input", solve_args.input, "bundle base path or .2vrp file")->required();
  solve->add_option("--out", solve_args.out, "solution file");
  solve->add_flag("--near-balanced", solve_args.near_balanced, "allow odd n+|fixed|");
  solve->add_option("--s", solve_args.s, "window size for heuristic");
  solve->add_option("--l", solve_args.l, "window step for heuristic");
  solve->add_option("--generator", solve_args.generator, "ksh | rndh");
  solve->add_option("--repetitions", solve_args.repetitions, "outer iterations");
  auto* seed_opt = solve->add_option("--seed", solve_args.seed, "seed (required for heuristic)");
  solve->add_option("--time-budget-ms", solve_args.time_budget_ms,
                    "stop starting repetitions after this long (matches runs by time)");
  solve->add_option("--log", solve_args.log_file, "write the per-pass heuristic log CSV");

  std::string verify_input, verify_solution;
  auto* verify = app.add_subcommand("verify", "check a solution file against an instance");
  verify->add_option("input", verify_input, "bundle base path or .2vrp file")->required();
  verify->add_option("solution", verify_solution, "solution file")->required();

  ExperimentArgs exp_args;
  auto* experiment = app.add_subcommand("experiment", "seeded benchmark harness");
  experiment->add_option("--family", exp_args.family, "kalmanson-2tsp | random-2vrp | external");
  experiment->add_option("--count", exp_args.count, "instances (generated families)");
  experiment->add_option("--n", exp_args.n, "nodes per instance");
  experiment->add_option("--fixed", exp_args.fixed, "fixed nodes (kalmanson-2tsp)");
  experiment->add_option("--s", exp_args.s, "window size");
  experiment->add_option("--l", exp_args.l, "window step");
  experiment->add_option("--generator", exp_args.generator, "ksh | rndh");
  experiment->add_option("--repetitions", exp_args.repetitions, "outer iterations per instance");
  experiment->add_option("--checkpoints", exp_args.checkpoints, "ascending list, e.g. 1,5,10");
  experiment->add_option("--seed", exp_args.seed, "base seed")->required();
  experiment->add_option("--out", exp_args.out_dir, "artifact directory")->required();
  experiment->add_option("--jobs", exp_args.jobs, "worker threads");
  experiment->add_option("--reference", exp_args.reference_file,
                         "file of `instance_id value` reference costs");
  experiment->add_option("--external-dir", exp_args.external_dir,
                         "bundle directory for --family external");
  experiment->add_flag("--stop-at-optimum", exp_args.stop_at_optimum,
                       "stop an instance once the known optimum is reached");

  try {
    app.parse(argc, argv);
    solve_args.seed_set = seed_opt->count() > 0;
    if (*gen) return run_gen(gen_args);
    if (*solve) return run_solve(solve_args);
    if (*verify) return run_verify(verify_input, verify_solution);
    if (*experiment) return run_experiment(exp_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const IoError& e) {
    std::cerr << "io: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
