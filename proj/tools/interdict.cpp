// Command-line front end: parse instances, run the solver, the brute-force
// oracle, lambda*/enumeration diagnostics, and the instance generator.
//
// Exit codes: 0 success, 1 check mismatch, 2 parse/guard/usage error,
// 3 internal assertion failure.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "interdict/engine.hpp"
#include "interdict/generator.hpp"
#include "interdict/oracle.hpp"
#include "interdict/serialize.hpp"

namespace {

using namespace interdict;

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

struct CommonOptions {
  std::string input;
  bool json = false;
  std::uint64_t seed = 0;
  std::string enum_mode = "auto";
  int exhaustive_limit = 20;
  std::string knapsack = "exact";
  std::string epsilon;  // only valid with --knapsack fptas
  bool non_strict = false;
  double delta = 0;
  std::int64_t rep_budget = 1'000'000;
  int threads = 0;  // 0: env override or 1
};

int env_threads() {
  if (const char* env = std::getenv("INTERDICT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_solver_flags) {
  cmd->add_option("input", opts.input, "instance file, or - for stdin")
      ->required();
  cmd->add_flag("--json", opts.json, "machine-readable JSON output");
  cmd->add_option("--seed", opts.seed, "seed for randomized enumeration");
  if (with_solver_flags) {
    cmd->add_option("--enum", opts.enum_mode,
                    "enumeration method: auto|exhaustive|contraction")
        ->check(CLI::IsMember({"auto", "exhaustive", "contraction"}));
    cmd->add_option("--exhaustive-limit", opts.exhaustive_limit,
                    "largest n for exhaustive enumeration");
    cmd->add_option("--knapsack", opts.knapsack,
                    "per-candidate deletion solver: exact|fptas")
        ->check(CLI::IsMember({"exact", "fptas"}));
    cmd->add_option("--epsilon", opts.epsilon,
                    "fptas accuracy, rational in (0,1) (default 1/10); "
                    "requires --knapsack fptas");
    cmd->add_flag("--non-strict", opts.non_strict,
                  "widen the 2L* threshold to <= (non-canonical)");
    cmd->add_option("--delta", opts.delta,
                    "contraction failure probability (default 1/n)");
    cmd->add_option("--rep-budget", opts.rep_budget,
                    "cap on contraction repetitions");
    cmd->add_option("--threads", opts.threads,
                    "worker threads (default: $INTERDICT_THREADS or 1)");
  }
}

InterdictionInstance load_instance(const std::string& path) {
  if (path == "-") return InterdictionInstance::parse(std::cin);
  return InterdictionInstance::parse_file(path);
}

SolveOptions to_solve_options(const CommonOptions& opts) {
  SolveOptions s;
  if (opts.enum_mode == "exhaustive") s.enumeration = EnumMode::exhaustive;
  if (opts.enum_mode == "contraction") s.enumeration = EnumMode::contraction;
  s.exhaustive_limit = opts.exhaustive_limit;
  s.strict_threshold = !opts.non_strict;
  if (opts.knapsack == "fptas") {
    s.knapsack = KnapsackMode::fptas;
    s.epsilon =
        Rational::from_string(opts.epsilon.empty() ? "1/10" : opts.epsilon);
    if (!(Rational{0} < s.epsilon) || !(s.epsilon < Rational{1}))
      throw std::invalid_argument("--epsilon must lie in (0,1)");
  } else if (!opts.epsilon.empty()) {
    throw std::invalid_argument("--epsilon requires --knapsack fptas");
  }
  s.seed = opts.seed;
  s.delta = opts.delta;
  s.repetition_budget = opts.rep_budget;
  s.threads = opts.threads > 0 ? opts.threads : env_threads();
  return s;
}

std::int64_t ms_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void print_line(const char* name, const ActiveLine& line) {
  std::cout << name << ": value(lambda) = " << line.intercept.to_string()
            << " + " << line.slope.to_string() << " * lambda, S = "
            << line.witness_S.to_string()
            << ", R = " << line.witness_R.to_string() << "\n";
}

int cmd_solve(const CommonOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const auto inst = load_instance(opts.input);
  const Solution sol = solve(inst, to_solve_options(opts));
  if (opts.json) {
    std::cout << dump(solution_to_json(sol, ms_since(start)));
    return 0;
  }
  std::cout << "value " << sol.value << "\n"
            << "S = " << sol.S.to_string() << "\n"
            << "R = " << sol.R.to_string() << "\n"
            << "lambda* = " << sol.lambda_star.to_string()
            << "  L* = " << sol.L_star.to_string()
            << "  Lambda = " << sol.Lambda.to_string() << "\n"
            << "candidates " << sol.candidates << "  degenerate "
            << (sol.degenerate ? "yes" : "no") << "\n"
            << "enumeration " << to_string(sol.enumeration_used)
            << "  knapsack " << to_string(sol.knapsack_used) << "  seed "
            << sol.seed << "\n"
            << "time " << ms_since(start) << " ms\n";
  return 0;
}

int cmd_oracle(const CommonOptions& opts, int grid_points) {
  const auto inst = load_instance(opts.input);
  OracleReport report = brute_solve(inst);
  if (grid_points > 0) {
    std::vector<Rational> lambdas;
    Rational lambda_max{0};
    for (const Edge& e : inst.edges())
      lambda_max = max(lambda_max, Rational{e.weight, e.cost});
    const std::int64_t steps = std::max(grid_points - 1, 1);
    for (int k = 0; k < grid_points; ++k)
      lambdas.push_back(lambda_max * Rational{k, steps});
    report.lambda_grid = oracle_lambda_grid(inst, lambdas);
  }
  if (opts.json) {
    std::cout << dump(oracle_report_to_json(report));
    return 0;
  }
  std::cout << "value " << report.value << "\n"
            << "S = " << report.best_S.to_string() << "\n"
            << "R = " << report.best_R.to_string() << "\n"
            << "cuts " << report.table.size() << "\n";
  for (const auto& entry : report.table)
    std::cout << "  cut " << entry.cut.to_string() << "  g_b " << entry.g_b
              << "\n";
  for (const auto& [lambda, value] : report.lambda_grid)
    std::cout << "  phi(" << lambda.to_string() << ") = " << value.to_string()
              << "\n";
  return 0;
}

int cmd_check(const CommonOptions& opts) {
  const auto inst = load_instance(opts.input);
  const Solution sol = solve(inst, to_solve_options(opts));
  const OracleReport truth = brute_solve(inst);
  if (sol.value == truth.value) {
    std::cout << "MATCH value " << sol.value << "\n";
    return 0;
  }
  std::cout << "MISMATCH engine " << sol.value << " (S = "
            << sol.S.to_string() << ", R = " << sol.R.to_string()
            << ") oracle " << truth.value << " (S = "
            << truth.best_S.to_string() << ", R = "
            << truth.best_R.to_string() << ")\n";
  return kExitMismatch;
}

// Mirrors the engine's two-pass degeneracy test so that the lambda and
// enumerate diagnostics reject instances with no meaningful lambda*.
void reject_degenerate(const InterdictionInstance& inst) {
  const GraphCutFamily family(inst);
  if (family.min_cost_member(inst.cost_vector()).cost <= inst.budget())
    throw std::invalid_argument(
        "instance is degenerate: a whole cut fits the budget");
  std::vector<std::int64_t> reduced = inst.cost_vector();
  for (const Edge& e : inst.edges())
    if (e.weight == 0) reduced[std::size_t(e.id)] = 0;
  if (family.min_cost_member(reduced).cost <= inst.budget())
    throw std::invalid_argument(
        "instance is degenerate: a cut's positive-weight edges fit the "
        "budget");
}

int cmd_lambda(const CommonOptions& opts) {
  const auto inst = load_instance(opts.input);
  reject_degenerate(inst);
  const GraphCutFamily family(inst);
  const LambdaCertificate cert = find_lambda_star(inst, family);
  validate_certificate(cert, inst.weight_vector(), inst.cost_vector(),
                       inst.budget());
  if (opts.json) {
    std::cout << dump(certificate_to_json(cert));
    return 0;
  }
  std::cout << "lambda* = " << cert.lambda_star.to_string() << "\n"
            << "L* = " << cert.L_star.to_string() << "\n"
            << "Lambda = " << cert.Lambda.to_string() << "\n";
  print_line("line_lo", cert.line_lo);
  print_line("line_hi", cert.line_hi);
  return 0;
}

int cmd_enumerate(const CommonOptions& opts, const std::string& mult) {
  const auto inst = load_instance(opts.input);
  reject_degenerate(inst);
  const Rational q = Rational::from_string(mult);
  if (!(Rational{0} < q))
    throw std::invalid_argument("--threshold-mult must be positive");
  EnumerationConfig config;
  if (opts.enum_mode == "exhaustive") config.mode = EnumMode::exhaustive;
  if (opts.enum_mode == "contraction") config.mode = EnumMode::contraction;
  config.exhaustive_limit = opts.exhaustive_limit;
  config.contraction.delta = opts.delta;
  config.contraction.repetition_budget = opts.rep_budget;
  config.contraction.threads = opts.threads > 0 ? opts.threads : env_threads();
  const GraphCutFamily family(inst, config);
  const LambdaCertificate cert = find_lambda_star(inst, family);
  const auto w_star = truncate_weights(inst, cert.lambda_star);
  const CutFamily cuts = family.enumerate_family(
      w_star, q * cert.L_star, !opts.non_strict, opts.seed);
  if (opts.json) {
    json j = cut_family_to_json(cuts);
    j["lambda_star"] = rational_to_json(cert.lambda_star);
    j["L_star"] = rational_to_json(cert.L_star);
    std::cout << dump(j);
    return 0;
  }
  std::cout << "lambda* = " << cert.lambda_star.to_string()
            << "  L* = " << cert.L_star.to_string() << "  threshold "
            << (q * cert.L_star).to_string()
            << (cuts.strict ? " (strict)" : " (non-strict)") << "\n"
            << "cuts " << cuts.cuts.size() << "\n";
  for (const CutResult& cut : cuts.cuts)
    std::cout << "  value " << cut.value.to_string() << "  edges "
              << cut.cut_edges.to_string() << "\n";
  return 0;
}

int cmd_gen(int n, int m, std::int64_t wmax, std::int64_t cmax,
            std::int64_t bmax, std::uint64_t seed, const std::string& out) {
  GenParams params;
  params.n = n;
  params.m = m;
  params.wmax = wmax;
  params.cmax = cmax;
  params.bmax = bmax;
  params.seed = seed;
  const auto inst = generate_instance(params);
  std::string text = "# generated: n=" + std::to_string(n) +
                     " m=" + std::to_string(m) + " wmax=" +
                     std::to_string(wmax) + " cmax=" + std::to_string(cmax) +
                     " bmax=" + std::to_string(bmax) +
                     " seed=" + std::to_string(seed) + "\n" + inst.format();
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write '" + out + "'");
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"budget-constrained interdiction solver for linear "
               "minimization over graph cuts"};
  app.require_subcommand(1);

  CommonOptions solve_opts, oracle_opts, check_opts, lambda_opts, enum_opts;
  int grid_points = 0;
  std::string threshold_mult = "2";

  CLI::App* c_solve = app.add_subcommand("solve", "solve an instance");
  add_common(c_solve, solve_opts, true);

  CLI::App* c_oracle =
      app.add_subcommand("oracle", "brute-force reference solver (n <= 16)");
  add_common(c_oracle, oracle_opts, false);
  c_oracle->add_option("--grid", grid_points,
                       "sample phi on this many lambda grid points");

  CLI::App* c_check = app.add_subcommand(
      "check", "solve and cross-validate against the oracle");
  add_common(c_check, check_opts, true);

  CLI::App* c_lambda =
      app.add_subcommand("lambda", "print the lambda* certificate");
  add_common(c_lambda, lambda_opts, false);

  CLI::App* c_enum = app.add_subcommand(
      "enumerate", "list cuts below a multiple of L* under w_lambda*");
  add_common(c_enum, enum_opts, true);
  c_enum->add_option("--threshold-mult", threshold_mult,
                     "threshold multiplier q (cuts below q*L*)");

  int gen_n = 6, gen_m = 10;
  std::int64_t gen_wmax = 10, gen_cmax = 10, gen_bmax = 15;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  CLI::App* c_gen =
      app.add_subcommand("gen", "generate a random connected instance");
  c_gen->add_option("n", gen_n, "vertex count")->required();
  c_gen->add_option("m", gen_m, "edge count (>= n-1)")->required();
  c_gen->add_option("--wmax", gen_wmax, "max weight");
  c_gen->add_option("--cmax", gen_cmax, "max cost");
  c_gen->add_option("--bmax", gen_bmax, "max budget");
  c_gen->add_option("--seed", gen_seed, "generator seed");
  c_gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  try {
    if (c_solve->parsed()) return cmd_solve(solve_opts);
    if (c_oracle->parsed()) return cmd_oracle(oracle_opts, grid_points);
    if (c_check->parsed()) return cmd_check(check_opts);
    if (c_lambda->parsed()) return cmd_lambda(lambda_opts);
    if (c_enum->parsed()) return cmd_enumerate(enum_opts, threshold_mult);
    if (c_gen->parsed())
      return cmd_gen(gen_n, gen_m, gen_wmax, gen_cmax, gen_bmax, gen_seed,
                     gen_out);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    if (e.certificate)
      std::cerr << dump(certificate_to_json(*e.certificate));
    return kExitInternal;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
