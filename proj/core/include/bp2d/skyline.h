// Frontier of the open bin. Everything below the skyline is either an item
// or declared wastage; holes are never revisited.

#ifndef BP2D_SKYLINE_H_
#define BP2D_SKYLINE_H_

#include <optional>
#include <span>
#include <vector>

#include "bp2d/model.h"

namespace bp2d {

struct Segment {
  int x_begin = 0;
  int x_end = 0;
  int height = 0;

  int width() const { return x_end - x_begin; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Gaps measured from the current (lowest, then leftmost) position.
struct GapInfo {
  int x = 0;
  int y = 0;
  int hgap = 0;  // up to the next taller segment or the right border
  int vgap = 0;  // up to the bin ceiling
  bool horizontal_is_current = true;  // hgap <= vgap

  int current_gap() const { return horizontal_is_current ? hgap : vgap; }
  friend bool operator==(const GapInfo&, const GapInfo&) = default;
};

class Skyline {
 public:
  // Throws std::invalid_argument on nonpositive dimensions.
  Skyline(int bin_width, int bin_height);

  // Builds a skyline from explicit segments. Throws std::invalid_argument
  // unless they partition [0, W], lie within [0, H] and are merged.
  static Skyline from_segments(int bin_width, int bin_height,
                               std::vector<Segment> segments);

  int bin_width() const { return bin_width_; }
  int bin_height() const { return bin_height_; }
  std::span<const Segment> segments() const { return segments_; }

  // std::nullopt means the bin is full.
  std::optional<GapInfo> current_position() const;
  bool full() const { return !current_position().has_value(); }

  // Raises [x, x + width) of the current segment by `height`. Throws
  // ContractViolation if the item does not fit at the current position.
  void place_at_current(int width, int height);

  // Fills the current segment up to its lowest neighbour (or the ceiling if
  // it spans the whole bin) and returns the filled rectangle.
  Rect declare_wastage();

  // Area under the frontier.
  int64_t filled_area() const;

 private:
  Skyline(int bin_width, int bin_height, std::vector<Segment> segments);

  size_t current_index() const;
  void raise(size_t index, int width, int new_height);

  int bin_width_;
  int bin_height_;
  std::vector<Segment> segments_;
};

}  // namespace bp2d

#endif  // BP2D_SKYLINE_H_
