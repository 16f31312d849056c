// Core domain types for oriented two-dimensional bin packing (2BP|O|F).

#ifndef BP2D_MODEL_H_
#define BP2D_MODEL_H_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bp2d {

// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Item {
  int id = 0;  // 1-based
  int width = 0;
  int height = 0;

  int64_t area() const { return int64_t{width} * height; }
  friend bool operator==(const Item&, const Item&) = default;
};

struct Instance {
  std::string name;
  int bin_width = 0;
  int bin_height = 0;
  std::vector<Item> items;  // items[k].id == k + 1 for a valid instance

  int size() const { return static_cast<int>(items.size()); }
  int64_t bin_area() const { return int64_t{bin_width} * bin_height; }
  int64_t total_item_area() const;
  // Requires a valid instance (ids are 1..n in order).
  const Item& item(int id) const { return items[static_cast<size_t>(id - 1)]; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// A permutation of item ids; the input order consumed by the packing stage.
struct Sequence {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }
  friend bool operator==(const Sequence&, const Sequence&) = default;
};

// True iff `sequence` contains each of 1..n exactly once.
bool is_permutation_of(const Sequence& sequence, int n);

struct Placement {
  int item_id = 0;
  int bin_index = 0;  // 0-based
  int x = 0;          // bottom-left corner
  int y = 0;
  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Rect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  int64_t area() const { return int64_t{width} * height; }
  // Open rectangles intersect.
  bool overlaps(const Rect& other) const {
    return x < other.x + other.width && other.x < x + width &&
           y < other.y + other.height && other.y < y + height;
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

struct WastageRect {
  int bin_index = 0;
  Rect rect;
  friend bool operator==(const WastageRect&, const WastageRect&) = default;
};

// Lexicographic: fewer bins first, then the lighter last bin.
struct Fitness {
  int bins = 0;
  int64_t last_load = 0;

  friend auto operator<=>(const Fitness&, const Fitness&) = default;
};

struct PackingSolution {
  std::vector<Placement> placements;  // in placement order
  std::vector<WastageRect> wastage;
  int bins_used = 0;
  int64_t last_bin_load = 0;  // item area in bin bins_used - 1

  friend bool operator==(const PackingSolution&,
                         const PackingSolution&) = default;
};

Fitness fitness_of(const PackingSolution& solution);

struct Violation {
  int item_id = 0;  // 0 when the rule is not tied to one item
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has_rule(const std::string& rule) const;
  std::string summary() const;
};

// Rule names used in reports.
namespace rules {
inline constexpr const char* kBinDimensions = "bin dimensions nonpositive";
inline constexpr const char* kItemDimensions = "item dimensions nonpositive";
inline constexpr const char* kWidthExceeds = "width exceeds W";
inline constexpr const char* kHeightExceeds = "height exceeds H";
inline constexpr const char* kIdsNotPermutation = "ids not a permutation";
inline constexpr const char* kUnplaced = "item unplaced";
inline constexpr const char* kPlacedTwice = "item placed twice";
inline constexpr const char* kUnknownItem = "unknown item";
inline constexpr const char* kOutOfBounds = "out of bounds";
inline constexpr const char* kOverlap = "overlap";
inline constexpr const char* kWastageOutOfBounds = "wastage out of bounds";
inline constexpr const char* kWastageOverlap = "wastage overlaps item";
inline constexpr const char* kBinsUsed = "bins_used inconsistent";
inline constexpr const char* kLastBinLoad = "last_bin_load inconsistent";
}  // namespace rules

ValidationReport validate_instance(const Instance& instance);

// Expects a valid instance.
ValidationReport validate_solution(const Instance& instance,
                                   const PackingSolution& solution);

}  // namespace bp2d

#endif  // BP2D_MODEL_H_
