// pmt: command-line front end for the solvers, the oracle and the benchmark.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pmt/bench.hpp"
#include "pmt/io.hpp"
#include "pmt/oracle.hpp"
#include "pmt/pmt.hpp"

namespace {

using namespace pmt;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInternal = 4;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

Variant parse_variant(const std::string& s) {
  return s == "ts" ? Variant::TransShipment : Variant::Plain;
}

ProblemKind parse_kind(const std::string& s) {
  if (s == "unlabeled") return ProblemKind::Unlabeled;
  if (s == "motion") return ProblemKind::Motion;
  if (s == "gather") return ProblemKind::Gather;
  return ProblemKind::Pmt;
}

int cmd_solve(const std::string& instance_path, const std::string& out) {
  Instance inst;
  try {
    inst = parse_instance(read_file(instance_path));
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  try {
    emit(out, serialize_plan(solve(inst)));
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::InfeasibleAssumption ? kExitInfeasible : kExitInternal;
  }
  return kExitOk;
}

int cmd_validate(const std::string& instance_path, const std::string& plan_path) {
  Instance inst;
  Plan plan;
  try {
    inst = parse_instance(read_file(instance_path));
    plan = parse_plan(read_file(plan_path));
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  ValidationReport rep = replay(inst.tree, inst.start, plan, inst.variant);
  if (!rep.legal) {
    std::cout << "ILLEGAL at move " << rep.failed_at << " (" << to_string(rep.cause) << "): " << rep.message
              << "\n";
    return 1;
  }
  if (!goal_reached(inst, rep.final_config)) {
    std::cout << "LEGAL but goal not reached after " << rep.length << " moves\n";
    return 1;
  }
  std::cout << "OK " << rep.length << " moves\n";
  return kExitOk;
}

int cmd_oracle(const std::string& instance_path, const std::string& limits, const std::string& out) {
  Instance inst;
  try {
    inst = parse_instance(read_file(instance_path));
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  OracleLimits lim;
  if (!limits.empty()) {
    std::istringstream in(limits);
    char comma = 0;
    in >> lim.max_states;
    if (in >> comma && comma == ',') in >> lim.max_depth;
  }
  OracleResult r = bfs_solve(inst, lim);
  switch (r.status) {
    case OracleStatus::Optimal:
      std::cout << "OPTIMAL " << r.plan.size() << "\n";
      if (!out.empty()) emit(out, serialize_plan(r.plan));
      return kExitOk;
    case OracleStatus::Infeasible:
      std::cout << "INFEASIBLE\n";
      return kExitInfeasible;
    case OracleStatus::LimitExceeded:
      break;
  }
  std::cout << "LIMIT\n";
  return kExitLimit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pebble motion on trees: solve, validate, oracle, generate, bench"};
  app.require_subcommand(1);

  std::string instance_path, plan_path, out, limits, variant = "plain", kind = "pmt";
  std::uint64_t seed = 1;
  int n = 20, pebbles = 2;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file, write a plan file");
  solve_cmd->add_option("instance", instance_path, "instance file")->required();
  solve_cmd->add_option("--out", out, "plan output (default stdout)");

  auto* validate_cmd = app.add_subcommand("validate", "replay a plan against an instance");
  validate_cmd->add_option("instance", instance_path, "instance file")->required();
  validate_cmd->add_option("plan", plan_path, "plan file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive shortest plan for a small instance");
  oracle_cmd->add_option("instance", instance_path, "instance file")->required();
  oracle_cmd->add_option("--limits", limits, "max_states[,max_depth]");
  oracle_cmd->add_option("--out", out, "write the optimal plan here");

  auto* gen_cmd = app.add_subcommand("generate", "emit a random instance file");
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("--n", n, "vertices")->check(CLI::Range(2, 100000));
  gen_cmd->add_option("--pebbles", pebbles, "pebbles")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--variant", variant, "plain or ts")->check(CLI::IsMember({"plain", "ts"}));
  gen_cmd->add_option("--kind", kind, "problem kind")
      ->check(CLI::IsMember({"pmt", "unlabeled", "motion", "gather"}));
  gen_cmd->add_option("--out", out, "instance output (default stdout)");

  BenchConfig bc;
  std::string problem = "motion";
  auto* bench_cmd = app.add_subcommand("bench", "run the (n, p) benchmark grid, write CSV");
  bench_cmd->add_option("--problem,--kind", problem, "motion or pmt")->check(CLI::IsMember({"motion", "pmt"}));
  bench_cmd->add_option("--variant", variant, "plain or ts")->check(CLI::IsMember({"plain", "ts"}));
  bench_cmd->add_option("--seeds", bc.seeds, "instances per cell");
  bench_cmd->add_option("--seed", bc.seed_base, "seed base");
  bench_cmd->add_option("--n-min", bc.n_min);
  bench_cmd->add_option("--n-max", bc.n_max);
  bench_cmd->add_option("--n-step", bc.n_step);
  bench_cmd->add_option("--p-step", bc.p_step, "pebble step (default 1 motion, 5 pmt)");
  bench_cmd->add_option("--threads", bc.threads, "worker threads (0 = all cores)");
  bench_cmd->add_option("--out", out, "CSV output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return cmd_solve(instance_path, out);
    if (*validate_cmd) return cmd_validate(instance_path, plan_path);
    if (*oracle_cmd) return cmd_oracle(instance_path, limits, out);
    if (*gen_cmd) {
      Instance inst = generate_random_instance(seed, n, pebbles, parse_variant(variant), parse_kind(kind));
      emit(out, serialize_instance(inst));
      return kExitOk;
    }
    if (*bench_cmd) {
      bc.kind = problem == "pmt" ? ProblemKind::Pmt : ProblemKind::Motion;
      bc.variant = parse_variant(variant);
      auto cells = run_bench(bc);
      std::ostringstream csv;
      write_csv(csv, cells);
      emit(out, csv.str());
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::AssumptionUnsatisfiable ? kExitInfeasible : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
