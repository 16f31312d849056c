// bp2d: solve, benchmark, generate, export and render 2BP|O|F instances.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 oracle refusal.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bp2d/bench.h"
#include "bp2d/bounds_exact.h"
#include "bp2d/genbench.h"
#include "bp2d/ilp.h"
#include "bp2d/model.h"
#include "bp2d/svg.h"

namespace {

namespace fs = std::filesystem;
using namespace bp2d;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitOracle = 3;

// Usage errors are raised for invalid parameters detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

uint64_t default_seed() {
  if (const char* env = std::getenv("BP2D_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("BP2D_SEED is not an integer: ") + env);
    }
  }
  return kDefaultSeed;
}

struct SolverFlags {
  std::string algo = "ea";
  SolveConfig config;
  std::string format = "csv";
};

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--algo", flags.algo, "lgfi | ms | ea | exact")
      ->check(CLI::IsMember({"lgfi", "ms", "ea", "exact"}))
      ->capture_default_str();
  cmd->add_option("--kappa", flags.config.kappa, "sampling exponent (>= 1)")
      ->capture_default_str();
  cmd->add_option("--delta", flags.config.delta,
                  "partner-selection exponent (>= 1)")
      ->capture_default_str();
  cmd->add_option("--psize", flags.config.population_size, "population size")
      ->capture_default_str();
  cmd->add_option("--crate", flags.config.crossover_rate, "crossover rate")
      ->capture_default_str();
  cmd->add_option("--budget", flags.config.budget, "solution evaluations")
      ->capture_default_str();
  cmd->add_option("--seed", flags.config.seed,
                  "master seed (default: $BP2D_SEED or built-in)");
  cmd->add_option("--oracle-items", flags.config.oracle.max_items,
                  "item limit for --algo exact (<= 10)")
      ->capture_default_str();
  cmd->add_option("--format", flags.format, "csv | markdown")
      ->check(CLI::IsMember({"csv", "markdown"}))
      ->capture_default_str();
}

void finalize(SolverFlags& flags, bool seed_given) {
  flags.config.algorithm = parse_algorithm(flags.algo);
  if (!seed_given) flags.config.seed = default_seed();
  try {
    flags.config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Instance load_instance(const fs::path& path, bool legacy) {
  const std::string text = read_text_file(path);
  Instance instance;
  try {
    if (legacy) {
      std::vector<Instance> all = import_legacy(text);
      if (all.size() != 1) {
        throw DataError(path.string() + ": legacy file holds " +
                        std::to_string(all.size()) +
                        " instances; use 'bench --legacy' for multi-instance files");
      }
      instance = std::move(all.front());
    } else {
      instance = read_instance(text, path.stem().string());
    }
  } catch (const ParseError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  const ValidationReport report = validate_instance(instance);
  if (!report.ok()) {
    throw DataError(path.string() + ": invalid instance: " + report.summary());
  }
  return instance;
}

std::vector<Instance> load_instances(const std::vector<std::string>& paths,
                                     bool legacy) {
  std::vector<Instance> instances;
  for (const std::string& p : paths) {
    if (!legacy) {
      instances.push_back(load_instance(p, false));
      continue;
    }
    try {
      for (Instance& instance : import_legacy(read_text_file(p))) {
        if (!validate_instance(instance).ok()) {
          throw DataError(p + ": invalid instance " + instance.name);
        }
        instances.push_back(std::move(instance));
      }
    } catch (const ParseError& e) {
      throw DataError(p + ": " + e.what());
    }
  }
  return instances;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

int run_solve(const std::string& input, SolverFlags& flags, bool seed_given,
              bool legacy, std::optional<int> target,
              const std::string& solution_path, const std::string& svg_path) {
  finalize(flags, seed_given);
  const Instance instance = load_instance(input, legacy);
  const SolveOutcome outcome = solve_instance(instance, flags.config, target);
  const ValidationReport check = validate_solution(instance, outcome.solution);
  if (!check.ok()) {
    throw std::logic_error("solver produced an invalid packing: " +
                           check.summary());
  }
  if (!solution_path.empty()) {
    write_text_file(solution_path, write_solution(instance, outcome.solution));
  }
  if (!svg_path.empty()) {
    write_text_file(svg_path, render_svg(instance, outcome.solution));
  }
  BenchReport report;
  report.rows.push_back(outcome.row);
  std::cout << (flags.format == "csv" ? format_csv(report)
                                      : format_markdown(report));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented two-dimensional bin packing with LGFi-based solvers"};
  app.require_subcommand(1);

  // solve
  SolverFlags solve_flags;
  std::string solve_input;
  std::string solve_output;
  std::string solve_svg;
  std::optional<int> solve_target;
  bool solve_legacy = false;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("instance", solve_input, "instance file")->required();
  add_solver_flags(solve, solve_flags);
  solve->add_option("-o,--output", solve_output, "write the solution here");
  solve->add_option("--svg", solve_svg, "also render the packing as SVG");
  solve->add_option("--target", solve_target,
                    "stop once this many bins are reached");
  solve->add_flag("--legacy", solve_legacy,
                  "read the classic benchmark file layout");

  // bench
  SolverFlags bench_flags;
  std::vector<std::string> bench_inputs;
  bool bench_suite = false;
  uint64_t bench_suite_seed = kDefaultSeed;
  std::vector<std::string> bench_classes;
  std::vector<int> bench_sizes;
  int bench_replicates = kSuiteReplicates;
  int bench_jobs = 1;
  std::string bench_targets;
  std::string bench_output;
  std::string bench_summary;
  bool bench_legacy = false;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark sweep");
  bench->add_option("instances", bench_inputs, "instance files");
  bench->add_flag("--suite", bench_suite,
                  "generate the class I-X benchmark suite instead of reading files");
  bench->add_option("--suite-seed", bench_suite_seed, "seed of the generated suite")
      ->capture_default_str();
  bench->add_option("--class", bench_classes, "restrict the suite to classes");
  bench->add_option("--sizes", bench_sizes, "restrict the suite to sizes");
  bench->add_option("--replicates", bench_replicates,
                    "instances per class and size")
      ->capture_default_str();
  add_solver_flags(bench, bench_flags);
  bench->add_option("--jobs", bench_jobs, "parallel instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--target-file", bench_targets,
                    "per-instance target bins ('name bins' lines)");
  bench->add_option("-o,--output", bench_output, "per-instance report file");
  bench->add_option("--summary", bench_summary,
                    "write class x size aggregates as CSV");
  bench->add_flag("--legacy", bench_legacy,
                  "read the classic multi-instance benchmark files");

  // generate
  std::string gen_class = "I";
  int gen_n = 20;
  int gen_replicate = 1;
  uint64_t gen_seed = kDefaultSeed;
  bool gen_suite = false;
  std::string gen_output;
  CLI::App* generate = app.add_subcommand("generate", "Generate instances");
  generate->add_option("--class", gen_class, "class I..X")->capture_default_str();
  generate->add_option("--n", gen_n, "number of items")->capture_default_str();
  generate->add_option("--replicate", gen_replicate, "replicate index")
      ->capture_default_str();
  generate->add_option("--seed", gen_seed, "suite seed")->capture_default_str();
  generate->add_flag("--suite", gen_suite,
                     "write all 500 suite instances into the output directory");
  generate->add_option("-o,--output", gen_output,
                       "output file (directory with --suite)");

  // ilp
  std::string ilp_input;
  std::string ilp_output;
  CLI::App* ilp = app.add_subcommand("ilp", "Export the ILP model as CPLEX LP");
  ilp->add_option("instance", ilp_input, "instance file")->required();
  ilp->add_option("-o,--output", ilp_output, "LP file")->required();

  // render
  std::string render_instance;
  std::string render_solution;
  std::string render_output;
  CLI::App* render = app.add_subcommand("render", "Render a solution as SVG");
  render->add_option("instance", render_instance, "instance file")->required();
  render->add_option("solution", render_solution, "solution file")->required();
  render->add_option("-o,--output", render_output, "SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      return run_solve(solve_input, solve_flags,
                       solve->count("--seed") > 0, solve_legacy, solve_target,
                       solve_output, solve_svg);
    }

    if (*bench) {
      finalize(bench_flags, bench->count("--seed") > 0);
      std::vector<Instance> instances;
      if (bench_suite) {
        std::vector<int> classes;
        for (const std::string& c : bench_classes) {
          try {
            classes.push_back(parse_class(c));
          } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
          }
        }
        if (classes.empty()) {
          for (int c = 1; c <= kClassCount; ++c) classes.push_back(c);
        }
        std::vector<int> sizes = bench_sizes;
        if (sizes.empty()) sizes.assign(kSuiteSizes.begin(), kSuiteSizes.end());
        for (int c : classes) {
          for (int n : sizes) {
            for (int r = 1; r <= bench_replicates; ++r) {
              instances.push_back(
                  generate_suite_instance(bench_suite_seed, c, n, r));
            }
          }
        }
      } else {
        if (bench_inputs.empty()) {
          throw UsageError("bench needs instance files or --suite");
        }
        instances = load_instances(bench_inputs, bench_legacy);
      }

      BenchConfig config;
      config.solve = bench_flags.config;
      config.jobs = bench_jobs;
      if (!bench_targets.empty()) {
        try {
          config.targets = parse_targets(read_text_file(bench_targets));
        } catch (const ParseError& e) {
          throw DataError(bench_targets + ": " + e.what());
        }
      }
      const BenchReport report = run_bench(instances, config);
      emit(bench_flags.format == "csv" ? format_csv(report)
                                       : format_markdown(report),
           bench_output);
      if (!bench_summary.empty()) {
        write_text_file(bench_summary, format_aggregate_csv(report));
      }
      for (const ReportRow& row : report.rows) {
        if (!row.error.empty()) {
          std::cerr << row.instance << ": " << row.error << '\n';
        }
      }
      return kExitOk;
    }

    if (*generate) {
      ClassId id = 0;
      try {
        id = parse_class(gen_class);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (gen_suite) {
        if (gen_output.empty()) throw UsageError("--suite needs -o <directory>");
        fs::create_directories(gen_output);
        for (const Instance& instance : generate_suite(gen_seed)) {
          write_text_file(fs::path(gen_output) / (instance.name + ".txt"),
                          write_instance(instance));
        }
        return kExitOk;
      }
      if (gen_n < 1) throw UsageError("--n must be >= 1");
      emit(write_instance(
               generate_suite_instance(gen_seed, id, gen_n, gen_replicate)),
           gen_output);
      return kExitOk;
    }

    if (*ilp) {
      const Instance instance = load_instance(ilp_input, false);
      if (instance.items.empty()) throw DataError("instance has no items");
      export_lp_file(build_model(instance), ilp_output, instance.name);
      return kExitOk;
    }

    if (*render) {
      const Instance instance = load_instance(render_instance, false);
      PackingSolution solution;
      try {
        solution = read_solution(read_text_file(render_solution), instance);
      } catch (const ParseError& e) {
        throw DataError(render_solution + ": " + e.what());
      }
      const ValidationReport check = validate_solution(instance, solution);
      if (!check.ok()) {
        throw DataError(render_solution + ": invalid solution: " +
                        check.summary());
      }
      emit(render_svg(instance, solution), render_output);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleLimitExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitOracle;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
