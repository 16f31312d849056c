// Continuous area bound and an exact oracle for desk-sized instances.
//
// The oracle places items only at normal positions: x is a subset sum of the
// widths of the other items of the bin, y a subset sum of their heights.
// Every feasible packing can be pushed left and down until each coordinate
// has that form, so the restriction loses no solutions.

#ifndef BP2D_BOUNDS_EXACT_H_
#define BP2D_BOUNDS_EXACT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bp2d/model.h"

namespace bp2d {

// ceil(total item area / bin area); 0 for an empty instance.
int area_lower_bound(const Instance& instance);

inline constexpr int kOracleHardItemLimit = 10;

struct OracleLimits {
  int max_items = 7;
  int64_t node_budget = 20'000'000;

  // Throws std::invalid_argument unless 0 <= max_items <= 10 and the
  // budget is positive.
  void validate() const;
};

// Raised when an instance exceeds OracleLimits::max_items.
class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Feasibility { kFeasible, kInfeasible, kUnknown };

struct SingleBinResult {
  Feasibility feasibility = Feasibility::kUnknown;
  std::vector<Placement> placements;  // bin_index 0, set when feasible
  int64_t nodes = 0;
};

// Whether `items` pack into one bin_width x bin_height bin. kUnknown when
// the node budget runs out. Throws OracleLimitExceeded above max_items.
SingleBinResult feasible_single_bin(std::span<const Item> items, int bin_width,
                                    int bin_height, const OracleLimits& limits);

struct ExactResult {
  std::optional<int> min_bins;         // unset when the answer is unknown
  std::optional<PackingSolution> witness;
  int64_t nodes = 0;
};

// Fewest bins over all set partitions of the items. Throws
// OracleLimitExceeded above max_items.
ExactResult exact_min_bins(const Instance& instance, const OracleLimits& limits);

}  // namespace bp2d

#endif  // BP2D_BOUNDS_EXACT_H_
