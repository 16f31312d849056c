#include "bp2d/ms.h"

#include <stdexcept>

#include "bp2d/sampling.h"

namespace bp2d {

void MsParams::validate() const {
  if (!(kappa >= 1.0)) throw std::invalid_argument("ms: kappa must be >= 1");
  if (eval_budget < 1) throw std::invalid_argument("ms: budget must be >= 1");
}

RunRecord run_ms(const Instance& instance, const MsParams& params,
                 RandomStream& rng) {
  params.validate();
  const SequenceSampler sampler(instance, params.kappa);
  SearchState state(instance, params.target_bins);
  while (state.evaluations() < params.eval_budget) {
    state.evaluate(sampler.sample(rng));
    if (state.target_reached()) break;
  }
  return state.finish();
}

}  // namespace bp2d
