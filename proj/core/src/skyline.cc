#include "bp2d/skyline.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace bp2d {

Skyline::Skyline(int bin_width, int bin_height)
    : bin_width_(bin_width), bin_height_(bin_height) {
  if (bin_width < 1 || bin_height < 1) {
    throw std::invalid_argument("skyline: bin dimensions must be positive, got " +
                                std::to_string(bin_width) + "x" +
                                std::to_string(bin_height));
  }
  segments_.push_back({0, bin_width, 0});
}

Skyline::Skyline(int bin_width, int bin_height, std::vector<Segment> segments)
    : bin_width_(bin_width),
      bin_height_(bin_height),
      segments_(std::move(segments)) {}

Skyline Skyline::from_segments(int bin_width, int bin_height,
                               std::vector<Segment> segments) {
  if (bin_width < 1 || bin_height < 1) {
    throw std::invalid_argument("skyline: bin dimensions must be positive");
  }
  int expected_x = 0;
  for (size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    if (s.x_begin != expected_x || s.x_end <= s.x_begin || s.height < 0 ||
        s.height > bin_height) {
      throw std::invalid_argument("skyline: segment " + std::to_string(i) +
                                  " breaks the partition of [0, W]");
    }
    if (i > 0 && segments[i - 1].height == s.height) {
      throw std::invalid_argument("skyline: adjacent segments " +
                                  std::to_string(i - 1) + " and " +
                                  std::to_string(i) + " share a height");
    }
    expected_x = s.x_end;
  }
  if (expected_x != bin_width) {
    throw std::invalid_argument("skyline: segments do not reach W");
  }
  return Skyline(bin_width, bin_height, std::move(segments));
}

size_t Skyline::current_index() const {
  size_t best = 0;
  for (size_t i = 1; i < segments_.size(); ++i) {
    if (segments_[i].height < segments_[best].height) best = i;
  }
  return best;
}

std::optional<GapInfo> Skyline::current_position() const {
  const Segment& s = segments_[current_index()];
  if (s.height >= bin_height_) return std::nullopt;
  GapInfo gap;
  gap.x = s.x_begin;
  gap.y = s.height;
  gap.hgap = s.width();
  gap.vgap = bin_height_ - s.height;
  gap.horizontal_is_current = gap.hgap <= gap.vgap;
  return gap;
}

void Skyline::raise(size_t index, int width, int new_height) {
  Segment& s = segments_[index];
  if (width < s.width()) {
    Segment rest{s.x_begin + width, s.x_end, s.height};
    s.x_end = s.x_begin + width;
    s.height = new_height;
    segments_.insert(segments_.begin() + static_cast<ptrdiff_t>(index) + 1,
                     rest);
  } else {
    s.height = new_height;
  }
  // Only the raised segment can now equal a neighbour.
  if (index + 1 < segments_.size() &&
      segments_[index + 1].height == segments_[index].height) {
    segments_[index].x_end = segments_[index + 1].x_end;
    segments_.erase(segments_.begin() + static_cast<ptrdiff_t>(index) + 1);
  }
  if (index > 0 && segments_[index - 1].height == segments_[index].height) {
    segments_[index - 1].x_end = segments_[index].x_end;
    segments_.erase(segments_.begin() + static_cast<ptrdiff_t>(index));
  }
}

void Skyline::place_at_current(int width, int height) {
  const size_t index = current_index();
  const Segment& s = segments_[index];
  if (width < 1 || height < 1 || width > s.width() ||
      s.height + height > bin_height_) {
    throw ContractViolation("skyline: item " + std::to_string(width) + "x" +
                            std::to_string(height) +
                            " does not fit at the current position");
  }
  raise(index, width, s.height + height);
}

Rect Skyline::declare_wastage() {
  const size_t index = current_index();
  const Segment s = segments_[index];
  if (s.height >= bin_height_) {
    throw ContractViolation("skyline: declare_wastage on a full bin");
  }
  int target = std::numeric_limits<int>::max();
  if (index > 0) target = std::min(target, segments_[index - 1].height);
  if (index + 1 < segments_.size()) {
    target = std::min(target, segments_[index + 1].height);
  }
  if (target == std::numeric_limits<int>::max()) target = bin_height_;
  raise(index, s.width(), target);
  return Rect{s.x_begin, s.height, s.width(), target - s.height};
}

int64_t Skyline::filled_area() const {
  int64_t area = 0;
  for (const Segment& s : segments_) area += int64_t{s.width()} * s.height;
  return area;
}

}  // namespace bp2d
