#include "bp2d/bench.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "bp2d/ea.h"
#include "bp2d/genbench.h"
#include "bp2d/lgfi.h"
#include "bp2d/ms.h"
#include "bp2d/random.h"

namespace bp2d {

Algorithm parse_algorithm(std::string_view text) {
  if (text == "lgfi") return Algorithm::kLgfi;
  if (text == "ms") return Algorithm::kMs;
  if (text == "ea") return Algorithm::kEa;
  if (text == "exact") return Algorithm::kExact;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) +
                              "' (expected lgfi, ms, ea or exact)");
}

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kLgfi: return "lgfi";
    case Algorithm::kMs: return "ms";
    case Algorithm::kEa: return "ea";
    case Algorithm::kExact: return "exact";
  }
  return "?";
}

namespace {

MsParams ms_params(const SolveConfig& config, std::optional<int> target) {
  MsParams params;
  params.kappa = config.kappa;
  params.eval_budget = config.budget;
  params.target_bins = target;
  return params;
}

EaParams ea_params(const SolveConfig& config, std::optional<int> target) {
  EaParams params;
  params.population_size = config.population_size;
  params.crossover_rate = config.crossover_rate;
  params.kappa = config.kappa;
  params.delta = config.delta;
  params.eval_budget = config.budget;
  params.target_bins = target;
  return params;
}

}  // namespace

void SolveConfig::validate() const {
  switch (algorithm) {
    case Algorithm::kMs: ms_params(*this, std::nullopt).validate(); break;
    case Algorithm::kEa: ea_params(*this, std::nullopt).validate(); break;
    case Algorithm::kExact: oracle.validate(); break;
    case Algorithm::kLgfi: break;
  }
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
}

SolveOutcome solve_instance(const Instance& instance, const SolveConfig& config,
                            std::optional<int> target_bins) {
  SolveOutcome outcome;
  ReportRow& row = outcome.row;
  row.instance = instance.name;
  row.n = instance.size();
  row.lower_bound = area_lower_bound(instance);

  RandomStream rng =
      RandomStream::derive(config.seed, stable_hash(instance.name));
  switch (config.algorithm) {
    case Algorithm::kLgfi: {
      const auto start = std::chrono::steady_clock::now();
      outcome.solution = pack(instance, preprocess_sort(instance));
      row.time_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
      row.eval = 1;
      break;
    }
    case Algorithm::kMs:
    case Algorithm::kEa: {
      const RunRecord record =
          config.algorithm == Algorithm::kMs
              ? run_ms(instance, ms_params(config, target_bins), rng)
              : run_ea(instance, ea_params(config, target_bins), rng);
      outcome.solution = pack(instance, record.best_sequence);
      row.eval = record.found_at_eval;
      row.time_seconds = record.found_at_time;
      break;
    }
    case Algorithm::kExact: {
      const auto start = std::chrono::steady_clock::now();
      const ExactResult exact = exact_min_bins(instance, config.oracle);
      if (!exact.min_bins) {
        throw std::runtime_error("oracle node budget exhausted after " +
                                 std::to_string(exact.nodes) + " nodes");
      }
      outcome.solution = *exact.witness;
      row.eval = std::max<int64_t>(1, exact.nodes);
      row.time_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
      break;
    }
  }
  row.res = outcome.solution.bins_used;
  return outcome;
}

namespace {

// Class id encoded in generated names ("c07_n040_r03"), or 0.
int class_of(const std::string& name) {
  if (name.size() < 3 || name[0] != 'c') return 0;
  int id = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + 3, id);
  if (ec != std::errc() || ptr != name.data() + 3) return 0;
  if (name.size() > 3 && name[3] != '_') return 0;
  return id >= 1 && id <= kClassCount ? id : 0;
}

}  // namespace

BenchReport run_bench(const std::vector<Instance>& instances,
                      const BenchConfig& config) {
  config.solve.validate();
  if (config.jobs < 1) throw std::invalid_argument("jobs must be >= 1");

  BenchReport report;
  report.rows.resize(instances.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < instances.size();
         i = next.fetch_add(1)) {
      const Instance& instance = instances[i];
      std::optional<int> target;
      if (auto it = config.targets.find(instance.name);
          it != config.targets.end()) {
        target = it->second;
      }
      try {
        report.rows[i] = solve_instance(instance, config.solve, target).row;
      } catch (const std::exception& e) {
        ReportRow& row = report.rows[i];
        row.instance = instance.name;
        row.n = instance.size();
        row.lower_bound = area_lower_bound(instance);
        row.error = e.what();
      }
    }
  };
  const size_t threads =
      std::min<size_t>(static_cast<size_t>(config.jobs), instances.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ReportRow& a, const ReportRow& b) {
                     return a.instance < b.instance;
                   });

  std::map<std::pair<int, int>, AggregateRow> cells;
  report.total.group = "Summary";
  double total_time = 0.0;
  for (const ReportRow& row : report.rows) {
    if (!row.error.empty()) continue;
    const int id = class_of(row.instance);
    AggregateRow& cell = cells[{id, row.n}];
    cell.group = id ? class_label(id) : "-";
    cell.n = row.n;
    ++cell.instances;
    cell.lower_bound += row.lower_bound;
    cell.res += row.res;
    cell.eval += row.eval;
    cell.mean_time += row.time_seconds;
    ++report.total.instances;
    report.total.lower_bound += row.lower_bound;
    report.total.res += row.res;
    report.total.eval += row.eval;
    total_time += row.time_seconds;
  }
  for (auto& [key, cell] : cells) {
    cell.mean_time /= cell.instances;
    report.aggregates.push_back(cell);
  }
  if (report.total.instances > 0) {
    report.total.mean_time = total_time / report.total.instances;
  }
  return report;
}

namespace {

std::string seconds(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

}  // namespace

std::string format_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "instance,n,L0,res,eval,time\n";
  for (const ReportRow& row : report.rows) {
    out << row.instance << ',' << row.n << ',' << row.lower_bound << ',';
    if (row.error.empty()) {
      out << row.res << ',' << row.eval << ',' << seconds(row.time_seconds);
    } else {
      out << "error,error,error";
    }
    out << '\n';
  }
  return out.str();
}

std::string format_markdown(const BenchReport& report) {
  std::ostringstream out;
  out << "| instance | n | L0 | res | eval | time (s) |\n"
         "|---|---:|---:|---:|---:|---:|\n";
  for (const ReportRow& row : report.rows) {
    out << "| " << row.instance << " | " << row.n << " | " << row.lower_bound
        << " | ";
    if (row.error.empty()) {
      out << row.res << " | " << row.eval << " | " << seconds(row.time_seconds);
    } else {
      out << "error | error | " << row.error;
    }
    out << " |\n";
  }
  out << "\n| class | n | instances | L0 | res | mean time (s) |\n"
         "|---|---:|---:|---:|---:|---:|\n";
  auto line = [&](const AggregateRow& a, bool summary) {
    out << "| " << a.group << " | " << (summary ? "" : std::to_string(a.n))
        << " | " << a.instances << " | " << a.lower_bound << " | " << a.res
        << " | " << seconds(a.mean_time) << " |\n";
  };
  for (const AggregateRow& a : report.aggregates) line(a, false);
  line(report.total, true);
  return out.str();
}

std::string format_aggregate_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "class,n,instances,L0,res,eval,mean_time\n";
  auto line = [&](const AggregateRow& a, bool summary) {
    out << a.group << ',' << (summary ? "" : std::to_string(a.n)) << ','
        << a.instances << ',' << a.lower_bound << ',' << a.res << ',' << a.eval
        << ',' << seconds(a.mean_time) << '\n';
  };
  for (const AggregateRow& a : report.aggregates) line(a, false);
  line(report.total, true);
  return out.str();
}

std::map<std::string, int> parse_targets(std::string_view text) {
  std::map<std::string, int> targets;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name) || name.front() == '#') continue;
    int target = 0;
    std::string extra;
    if (!(fields >> target) || (fields >> extra && extra.front() != '#')) {
      throw ParseError(number, "expected '<instance> <target bins>'");
    }
    targets[name] = target;
  }
  return targets;
}

}  // namespace bp2d
