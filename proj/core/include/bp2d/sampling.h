// Probabilistic input sequences built around the deterministic LGFi order.
//
// Item i at 1-based position pos_i of the sorted order gets weight
// v_i = (n - pos_i)^kappa. Positions of a new sequence are filled front to
// back by roulette-wheel selection over the items not yet used; the weights
// stay fixed for the whole construction. Larger kappa keeps sequences
// closer to the deterministic order.

#ifndef BP2D_SAMPLING_H_
#define BP2D_SAMPLING_H_

#include <span>
#include <vector>

#include "bp2d/model.h"
#include "bp2d/random.h"

namespace bp2d {

struct SamplerParams {
  double kappa = 10.0;  // >= 1
};

// v indexed by item id - 1. Entries may overflow to +inf for huge kappa;
// SequenceSampler does not rely on them.
std::vector<double> sequence_weights(int n, const Sequence& base_order,
                                     double kappa);

// Index i drawn with probability weights[i] / sum(weights); uniform when the
// sum is 0. Throws ContractViolation on an empty span.
size_t roulette_select(std::span<const double> weights, RandomStream& rng);

// Precomputes the weight table once per (instance, kappa) so repeated draws
// cost O(n^2) arithmetic and no transcendental calls.
class SequenceSampler {
 public:
  // Throws std::invalid_argument if kappa < 1.
  SequenceSampler(const Instance& instance, double kappa);

  const Sequence& base_order() const { return base_order_; }
  double kappa() const { return kappa_; }

  Sequence sample(RandomStream& rng) const;

 private:
  // Weight of the item whose rank (n - pos) is `rank`, relative to the
  // largest rank still unused.
  double weight(int rank, int max_rank) const;

  Sequence base_order_;
  double kappa_;
  // (rank / (n - 1))^kappa, valid when log_domain_ is false.
  std::vector<double> scaled_;
  // Set when some scaled_ entry would underflow; weights are then computed
  // per draw from the ratio to the largest remaining rank.
  bool log_domain_ = false;
};

Sequence sample_sequence(const Instance& instance, double kappa,
                         RandomStream& rng);

}  // namespace bp2d

#endif  // BP2D_SAMPLING_H_
