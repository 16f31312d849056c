#include "bp2d/ea.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bp2d {

int EaParams::crossover_count() const {
  // The epsilon absorbs representation error in products like 0.7 * 10.
  return static_cast<int>(std::floor(crossover_rate * population_size + 1e-9));
}

void EaParams::validate() const {
  if (population_size < 2) {
    throw std::invalid_argument("ea: population size must be >= 2");
  }
  if (!(crossover_rate > 0.0 && crossover_rate <= 1.0)) {
    throw std::invalid_argument("ea: crossover rate must lie in (0, 1]");
  }
  if (crossover_count() < 1) {
    throw std::invalid_argument(
        "ea: crossover rate * population size must be >= 1");
  }
  if (!(kappa >= 1.0)) throw std::invalid_argument("ea: kappa must be >= 1");
  if (!(delta >= 1.0)) throw std::invalid_argument("ea: delta must be >= 1");
  if (!(better_bias >= 0.0 && better_bias <= 1.0)) {
    throw std::invalid_argument("ea: better bias must lie in [0, 1]");
  }
  if (eval_budget < population_size) {
    throw std::invalid_argument("ea: budget " + std::to_string(eval_budget) +
                                " is smaller than the population size");
  }
}

void Population::sort() {
  std::stable_sort(members.begin(), members.end(),
                   [](const Individual& a, const Individual& b) {
                     return a.fitness < b.fitness;
                   });
}

bool Population::is_sorted() const {
  return std::is_sorted(members.begin(), members.end(),
                        [](const Individual& a, const Individual& b) {
                          return a.fitness < b.fitness;
                        });
}

Population generate_initial_population(SearchState& state,
                                       const SequenceSampler& sampler,
                                       int population_size, RandomStream& rng) {
  Population population;
  population.members.reserve(static_cast<size_t>(population_size));
  for (int i = 0; i < population_size; ++i) {
    Sequence sequence = sampler.sample(rng);
    const Fitness fitness = state.evaluate(sequence);
    population.members.push_back({std::move(sequence), fitness});
  }
  population.sort();
  return population;
}

std::vector<double> partner_probabilities(const Population& population,
                                          int self, double delta) {
  const int size = population.size();
  if (size < 2 || self < 0 || self >= size) {
    throw ContractViolation("partner_probabilities: need |P| >= 2 and a member");
  }
  // Bases p_size - 1 - pos; dividing by the largest candidate base keeps
  // the powers in range without changing the normalised result.
  const int max_base = self == 0 ? size - 2 : size - 1;
  std::vector<double> probabilities(static_cast<size_t>(size), 0.0);
  double total = 0.0;
  for (int pos = 0; pos < size; ++pos) {
    if (pos == self) continue;
    const int base = size - 1 - pos;
    const double w =
        base == 0 ? 0.0 : std::pow(double(base) / double(max_base), delta);
    probabilities[static_cast<size_t>(pos)] = w;
    total += w;
  }
  if (total > 0.0) {
    for (double& p : probabilities) p /= total;
  } else {
    const double uniform = 1.0 / double(size - 1);
    for (int pos = 0; pos < size; ++pos) {
      if (pos != self) probabilities[static_cast<size_t>(pos)] = uniform;
    }
  }
  return probabilities;
}

Sequence crossover(const Sequence& first, const Sequence& second,
                   bool first_is_better, double better_bias,
                   RandomStream& rng) {
  const int n = first.size();
  if (!is_permutation_of(first, n) || !is_permutation_of(second, n)) {
    throw std::invalid_argument("crossover: parents must be permutations of the same ids");
  }
  const double take_first = first_is_better ? better_bias : 1.0 - better_bias;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  Sequence child;
  child.order.reserve(static_cast<size_t>(n));
  size_t k = 0;
  size_t l = 0;
  for (int r = 0; r < n; ++r) {
    while (used[static_cast<size_t>(first.order[k])]) ++k;
    while (used[static_cast<size_t>(second.order[l])]) ++l;
    const int a = first.order[k];
    const int b = second.order[l];
    int pick = a;
    if (a != b && !(rng.uniform01() < take_first)) pick = b;
    used[static_cast<size_t>(pick)] = true;
    child.order.push_back(pick);
  }
  return child;
}

Sequence crossover(const Individual& self, const Individual& partner,
                   double better_bias, RandomStream& rng) {
  const bool self_better = !(partner.fitness < self.fitness);
  return crossover(self.sequence, partner.sequence, self_better, better_bias,
                   rng);
}

Population ea_step(SearchState& state, const SequenceSampler& sampler,
                   const Population& population, const EaParams& params,
                   RandomStream& rng) {
  const int size = population.size();
  const int recreated = std::min(params.crossover_count(), size);
  Population next;
  next.members.reserve(static_cast<size_t>(size));

  for (int self = 0; self < recreated; ++self) {
    const Individual& parent = population.members[static_cast<size_t>(self)];
    const std::vector<double> probabilities =
        partner_probabilities(population, self, params.delta);
    const size_t partner_index = roulette_select(probabilities, rng);
    const Individual& partner = population.members[partner_index];

    Sequence child = crossover(parent, partner, params.better_bias, rng);
    const Fitness child_fitness = state.evaluate(child);
    if (child_fitness < parent.fitness) {
      next.members.push_back({std::move(child), child_fitness});
    } else {
      next.members.push_back(parent);
    }
  }
  while (next.size() < size) {
    Sequence sequence = sampler.sample(rng);
    const Fitness fitness = state.evaluate(sequence);
    next.members.push_back({std::move(sequence), fitness});
  }
  next.sort();
  return next;
}

RunRecord run_ea(const Instance& instance, const EaParams& params,
                 RandomStream& rng, const GenerationObserver& observer) {
  params.validate();
  const SequenceSampler sampler(instance, params.kappa);
  SearchState state(instance, params.target_bins);

  Population population = generate_initial_population(
      state, sampler, params.population_size, rng);
  int generation = 0;
  if (observer) observer(generation, population, state);
  while (!state.target_reached() &&
         state.evaluations() + params.population_size <= params.eval_budget) {
    population = ea_step(state, sampler, population, params, rng);
    ++generation;
    if (observer) observer(generation, population, state);
  }
  return state.finish();
}

}  // namespace bp2d
