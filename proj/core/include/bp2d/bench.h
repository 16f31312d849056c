// Single-instance solving and benchmark sweeps with per-instance rows and
// class x size aggregates.
//
// Every instance's random stream is derived from (master seed, instance
// name), so results do not depend on the number of worker threads or the
// order instances are listed in.

#ifndef BP2D_BENCH_H_
#define BP2D_BENCH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bp2d/bounds_exact.h"
#include "bp2d/model.h"

namespace bp2d {

enum class Algorithm { kLgfi, kMs, kEa, kExact };

// "lgfi", "ms", "ea" or "exact"; throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view text);
std::string algorithm_name(Algorithm algorithm);

inline constexpr uint64_t kDefaultSeed = 20111;

struct SolveConfig {
  Algorithm algorithm = Algorithm::kEa;
  double kappa = 10.0;
  double delta = 20.0;
  int population_size = 10;
  double crossover_rate = 0.7;
  int64_t budget = 5'000'000;
  uint64_t seed = kDefaultSeed;
  OracleLimits oracle;

  // Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
};

struct ReportRow {
  std::string instance;
  int n = 0;
  int lower_bound = 0;  // L0, the continuous area bound
  int res = 0;
  int64_t eval = 0;
  double time_seconds = 0.0;  // time until the reported solution was found
  std::string error;          // non-empty when the instance failed
};

struct SolveOutcome {
  ReportRow row;
  PackingSolution solution;
};

// Runs the configured algorithm. Throws OracleLimitExceeded for exact on
// oversized instances and std::runtime_error if the oracle gives up.
SolveOutcome solve_instance(const Instance& instance, const SolveConfig& config,
                            std::optional<int> target_bins = std::nullopt);

struct BenchConfig {
  SolveConfig solve;
  int jobs = 1;
  std::map<std::string, int> targets;  // instance name -> early-stop target
};

struct AggregateRow {
  std::string group;  // class label, or "-" for names without one
  int n = 0;
  int instances = 0;
  int64_t lower_bound = 0;
  int64_t res = 0;
  int64_t eval = 0;
  double mean_time = 0.0;
};

struct BenchReport {
  std::vector<ReportRow> rows;            // sorted by instance name
  std::vector<AggregateRow> aggregates;   // by class, then size
  AggregateRow total;
};

BenchReport run_bench(const std::vector<Instance>& instances,
                      const BenchConfig& config);

// Header "instance,n,L0,res,eval,time". Failed rows show "error" in the
// result columns.
std::string format_csv(const BenchReport& report);
std::string format_markdown(const BenchReport& report);
// Header "class,n,instances,L0,res,eval,mean_time"; last line is the summary.
std::string format_aggregate_csv(const BenchReport& report);

// Lines "instance_name target"; '#' comments allowed.
std::map<std::string, int> parse_targets(std::string_view text);

}  // namespace bp2d

#endif  // BP2D_BENCH_H_
