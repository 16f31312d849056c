// MS-LGFi: repeated sampling of input sequences, each packed by LGFi.

#ifndef BP2D_MS_H_
#define BP2D_MS_H_

#include <cstdint>
#include <optional>

#include "bp2d/model.h"
#include "bp2d/random.h"
#include "bp2d/search.h"

namespace bp2d {

struct MsParams {
  double kappa = 10.0;
  int64_t eval_budget = 5'000'000;
  // Stop as soon as the incumbent uses at most this many bins.
  std::optional<int> target_bins;

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

RunRecord run_ms(const Instance& instance, const MsParams& params,
                 RandomStream& rng);

}  // namespace bp2d

#endif  // BP2D_MS_H_
