// Evaluation accounting shared by the multi-start and evolutionary drivers.
// One evaluation is one LGFi packing of one sequence.

#ifndef BP2D_SEARCH_H_
#define BP2D_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "bp2d/model.h"

namespace bp2d {

struct Improvement {
  int64_t eval = 0;  // 1-based evaluation index
  Fitness fitness;
};

struct RunRecord {
  int best_bins = 0;
  Fitness best_fitness;
  Sequence best_sequence;
  int64_t found_at_eval = 0;
  double found_at_time = 0.0;  // seconds since the run started
  int64_t total_evals = 0;
  double total_time = 0.0;
  // Every strict improvement of the incumbent, in order.
  std::vector<Improvement> improvements;
};

class SearchState {
 public:
  explicit SearchState(const Instance& instance,
                       std::optional<int> target_bins = std::nullopt);

  const Instance& instance() const { return instance_; }

  // Packs `sequence`, counts one evaluation and updates the incumbent when
  // the result is strictly better.
  Fitness evaluate(const Sequence& sequence);

  int64_t evaluations() const { return evaluations_; }
  bool has_incumbent() const { return evaluations_ > 0; }
  const Fitness& best_fitness() const { return record_.best_fitness; }
  bool target_reached() const;

  RunRecord finish() const;

 private:
  double elapsed() const;

  const Instance& instance_;
  std::optional<int> target_bins_;
  std::chrono::steady_clock::time_point start_;
  int64_t evaluations_ = 0;
  RunRecord record_;
};

}  // namespace bp2d

#endif  // BP2D_SEARCH_H_
