// EA-LGFi: a steady population of input sequences improved by rank-biased
// crossover with elitist per-slot replacement and random refill.
//
// One generation recreates the best floor(c_rate * p_size) members by
// crossover (an offspring replaces its parent only if strictly fitter) and
// refills the remaining slots with freshly sampled sequences, so every
// generation costs exactly p_size evaluations.

#ifndef BP2D_EA_H_
#define BP2D_EA_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bp2d/model.h"
#include "bp2d/random.h"
#include "bp2d/sampling.h"
#include "bp2d/search.h"

namespace bp2d {

struct EaParams {
  int population_size = 10;
  double crossover_rate = 0.7;
  double kappa = 10.0;
  double delta = 20.0;
  double better_bias = 0.75;  // chance of inheriting from the fitter parent
  int64_t eval_budget = 5'000'000;
  std::optional<int> target_bins;

  // floor(c_rate * p_size).
  int crossover_count() const;
  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct Individual {
  Sequence sequence;
  Fitness fitness;
};

// Sorted best-first; index 0 is the fittest. Ties keep insertion order.
struct Population {
  std::vector<Individual> members;

  int size() const { return static_cast<int>(members.size()); }
  void sort();
  bool is_sorted() const;
};

Population generate_initial_population(SearchState& state,
                                       const SequenceSampler& sampler,
                                       int population_size, RandomStream& rng);

// Probability of each member being chosen as the crossover partner of the
// member at `self`. Entry `self` is 0. Candidates get weight
// (p_size - 1 - pos)^delta; all-zero weights fall back to uniform.
std::vector<double> partner_probabilities(const Population& population,
                                          int self, double delta);

// Three-pointer crossover. `first_is_better` says which parent receives
// `better_bias`. Throws std::invalid_argument if the parents are not
// permutations of the same ids.
Sequence crossover(const Sequence& first, const Sequence& second,
                   bool first_is_better, double better_bias,
                   RandomStream& rng);

// Fitness ties favour `self`.
Sequence crossover(const Individual& self, const Individual& partner,
                   double better_bias, RandomStream& rng);

// One generation; costs population_size evaluations.
Population ea_step(SearchState& state, const SequenceSampler& sampler,
                   const Population& population, const EaParams& params,
                   RandomStream& rng);

// Called after the initial population and after every generation.
using GenerationObserver =
    std::function<void(int generation, const Population&, const SearchState&)>;

// Runs whole generations while they fit in the budget, so the evaluation
// total is always p_size * (generations + 1).
RunRecord run_ea(const Instance& instance, const EaParams& params,
                 RandomStream& rng,
                 const GenerationObserver& observer = nullptr);

}  // namespace bp2d

#endif  // BP2D_EA_H_
