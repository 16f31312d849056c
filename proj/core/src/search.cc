#include "bp2d/search.h"

#include "bp2d/lgfi.h"

namespace bp2d {

SearchState::SearchState(const Instance& instance,
                         std::optional<int> target_bins)
    : instance_(instance),
      target_bins_(target_bins),
      start_(std::chrono::steady_clock::now()) {}

double SearchState::elapsed() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start_)
      .count();
}

Fitness SearchState::evaluate(const Sequence& sequence) {
  const Fitness fitness = fitness_of(pack(instance_, sequence));
  ++evaluations_;
  if (evaluations_ == 1 || fitness < record_.best_fitness) {
    record_.best_fitness = fitness;
    record_.best_bins = fitness.bins;
    record_.best_sequence = sequence;
    record_.found_at_eval = evaluations_;
    record_.found_at_time = elapsed();
    record_.improvements.push_back({evaluations_, fitness});
  }
  return fitness;
}

bool SearchState::target_reached() const {
  return target_bins_.has_value() && has_incumbent() &&
         record_.best_bins <= *target_bins_;
}

RunRecord SearchState::finish() const {
  RunRecord record = record_;
  record.total_evals = evaluations_;
  record.total_time = elapsed();
  return record;
}

}  // namespace bp2d
