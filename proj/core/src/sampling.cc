#include "bp2d/sampling.h"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bp2d/lgfi.h"

namespace bp2d {

std::vector<double> sequence_weights(int n, const Sequence& base_order,
                                     double kappa) {
  if (!is_permutation_of(base_order, n)) {
    throw std::invalid_argument("sequence_weights: base order is not a permutation");
  }
  std::vector<double> weights(static_cast<size_t>(n), 0.0);
  for (int pos = 1; pos <= n; ++pos) {
    const int id = base_order.order[static_cast<size_t>(pos - 1)];
    weights[static_cast<size_t>(id - 1)] = std::pow(double(n - pos), kappa);
  }
  return weights;
}

size_t roulette_select(std::span<const double> weights, RandomStream& rng) {
  if (weights.empty()) {
    throw ContractViolation("roulette_select: empty candidate set");
  }
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) return static_cast<size_t>(rng.below(weights.size()));

  const double target = rng.uniform01() * total;
  double cumulative = 0.0;
  size_t last_positive = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    last_positive = i;
    if (target < cumulative) return i;
  }
  // Rounding left target at or past the final partial sum.
  return last_positive;
}

SequenceSampler::SequenceSampler(const Instance& instance, double kappa)
    : base_order_(preprocess_sort(instance)), kappa_(kappa) {
  if (!(kappa >= 1.0)) {
    throw std::invalid_argument("sampler: kappa must be >= 1, got " +
                                std::to_string(kappa));
  }
  const int n = instance.size();
  scaled_.assign(static_cast<size_t>(std::max(n, 1)), 0.0);
  if (n < 2) return;
  for (int rank = 1; rank < n; ++rank) {
    const double w = std::pow(double(rank) / double(n - 1), kappa);
    if (!(w >= DBL_MIN)) log_domain_ = true;
    scaled_[static_cast<size_t>(rank)] = w;
  }
}

double SequenceSampler::weight(int rank, int max_rank) const {
  if (rank == 0) return 0.0;
  if (!log_domain_) return scaled_[static_cast<size_t>(rank)];
  return std::pow(double(rank) / double(max_rank), kappa_);
}

Sequence SequenceSampler::sample(RandomStream& rng) const {
  const int n = base_order_.size();
  // Remaining positions of the base order, kept in base order; the rank of
  // base position p (0-based) is n - 1 - p.
  std::vector<int> remaining(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) remaining[static_cast<size_t>(p)] = p;
  std::vector<double> weights;
  weights.reserve(static_cast<size_t>(n));

  Sequence result;
  result.order.reserve(static_cast<size_t>(n));
  while (!remaining.empty()) {
    const int max_rank = n - 1 - remaining.front();
    weights.clear();
    for (int p : remaining) weights.push_back(weight(n - 1 - p, max_rank));
    const size_t pick = roulette_select(weights, rng);
    result.order.push_back(base_order_.order[static_cast<size_t>(remaining[pick])]);
    remaining.erase(remaining.begin() + static_cast<ptrdiff_t>(pick));
  }
  return result;
}

Sequence sample_sequence(const Instance& instance, double kappa,
                         RandomStream& rng) {
  return SequenceSampler(instance, kappa).sample(rng);
}

}  // namespace bp2d
