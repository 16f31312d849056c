#include "bp2d/bounds_exact.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace bp2d {

int area_lower_bound(const Instance& instance) {
  if (instance.items.empty()) return 0;
  const int64_t area = instance.total_item_area();
  const int64_t bin = instance.bin_area();
  return static_cast<int>(std::max<int64_t>(1, (area + bin - 1) / bin));
}

void OracleLimits::validate() const {
  if (max_items < 0 || max_items > kOracleHardItemLimit) {
    throw std::invalid_argument("oracle: max_items must lie in [0, " +
                                std::to_string(kOracleHardItemLimit) + "]");
  }
  if (node_budget < 1) {
    throw std::invalid_argument("oracle: node budget must be positive");
  }
}

namespace {

struct Candidate {
  int x;
  int y;
};

// Subset sums of `values` that do not exceed `limit`, ascending.
std::vector<int> subset_sums(const std::vector<int>& values, int limit) {
  std::vector<bool> reachable(static_cast<size_t>(limit) + 1, false);
  reachable[0] = true;
  for (int v : values) {
    for (int s = limit - v; s >= 0; --s) {
      if (reachable[static_cast<size_t>(s)]) {
        reachable[static_cast<size_t>(s + v)] = true;
      }
    }
  }
  std::vector<int> sums;
  for (int s = 0; s <= limit; ++s) {
    if (reachable[static_cast<size_t>(s)]) sums.push_back(s);
  }
  return sums;
}

class SingleBinSearch {
 public:
  SingleBinSearch(std::vector<Item> items, int bin_width, int bin_height,
                  int64_t node_budget)
      : items_(std::move(items)), node_budget_(node_budget) {
    const size_t n = items_.size();
    candidates_.resize(n);
    same_as_previous_.assign(n, false);
    for (size_t i = 0; i < n; ++i) {
      std::vector<int> widths;
      std::vector<int> heights;
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        widths.push_back(items_[j].width);
        heights.push_back(items_[j].height);
      }
      const std::vector<int> xs =
          subset_sums(widths, bin_width - items_[i].width);
      const std::vector<int> ys =
          subset_sums(heights, bin_height - items_[i].height);
      for (int x : xs) {
        for (int y : ys) candidates_[i].push_back({x, y});
      }
      if (i > 0 && items_[i].width == items_[i - 1].width &&
          items_[i].height == items_[i - 1].height) {
        same_as_previous_[i] = true;
      }
    }
    placed_.resize(n);
    chosen_.assign(n, 0);
  }

  Feasibility run() {
    if (search(0)) return Feasibility::kFeasible;
    return exhausted_ ? Feasibility::kUnknown : Feasibility::kInfeasible;
  }

  const std::vector<Rect>& positions() const { return placed_; }
  int64_t nodes() const { return nodes_; }

 private:
  bool search(size_t depth) {
    if (depth == items_.size()) return true;
    const Item& item = items_[depth];
    // Identical items are interchangeable; order their positions.
    const size_t first =
        same_as_previous_[depth] ? chosen_[depth - 1] + 1 : 0;
    const std::vector<Candidate>& options = candidates_[depth];
    for (size_t c = first; c < options.size(); ++c) {
      if (++nodes_ > node_budget_) {
        exhausted_ = true;
        return false;
      }
      const Rect rect{options[c].x, options[c].y, item.width, item.height};
      bool clear = true;
      for (size_t j = 0; j < depth && clear; ++j) {
        clear = !rect.overlaps(placed_[j]);
      }
      if (!clear) continue;
      placed_[depth] = rect;
      chosen_[depth] = c;
      if (search(depth + 1)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  std::vector<Item> items_;
  int64_t node_budget_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<bool> same_as_previous_;
  std::vector<Rect> placed_;
  std::vector<size_t> chosen_;
  int64_t nodes_ = 0;
  bool exhausted_ = false;
};

// Cheap necessary conditions; false means certainly infeasible.
bool passes_quick_checks(std::span<const Item> items, int bin_width,
                         int bin_height) {
  int64_t area = 0;
  int64_t wide_height = 0;  // items wider than W/2 cannot sit side by side
  int64_t tall_width = 0;
  for (const Item& item : items) {
    if (item.width > bin_width || item.height > bin_height) return false;
    area += item.area();
    if (2 * item.width > bin_width) wide_height += item.height;
    if (2 * item.height > bin_height) tall_width += item.width;
  }
  return area <= int64_t{bin_width} * bin_height && wide_height <= bin_height &&
         tall_width <= bin_width;
}

}  // namespace

SingleBinResult feasible_single_bin(std::span<const Item> items, int bin_width,
                                    int bin_height,
                                    const OracleLimits& limits) {
  limits.validate();
  if (static_cast<int>(items.size()) > limits.max_items) {
    throw OracleLimitExceeded("oracle: " + std::to_string(items.size()) +
                              " items exceed the limit of " +
                              std::to_string(limits.max_items));
  }
  SingleBinResult result;
  if (!passes_quick_checks(items, bin_width, bin_height)) {
    result.feasibility = Feasibility::kInfeasible;
    return result;
  }

  std::vector<Item> sorted(items.begin(), items.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Item& a, const Item& b) {
                     if (a.area() != b.area()) return a.area() > b.area();
                     if (a.width != b.width) return a.width > b.width;
                     return a.height > b.height;
                   });
  SingleBinSearch search(sorted, bin_width, bin_height, limits.node_budget);
  result.feasibility = search.run();
  result.nodes = search.nodes();
  if (result.feasibility == Feasibility::kFeasible) {
    for (size_t i = 0; i < sorted.size(); ++i) {
      const Rect& r = search.positions()[i];
      result.placements.push_back({sorted[i].id, 0, r.x, r.y});
    }
  }
  return result;
}

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const Instance& instance, const OracleLimits& limits)
      : instance_(instance), limits_(limits) {
    order_.resize(instance.items.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return instance.items[static_cast<size_t>(a)].area() >
             instance.items[static_cast<size_t>(b)].area();
    });
  }

  // Masks of a partition into at most `blocks` feasible bins, or empty.
  std::vector<uint32_t> solve(int blocks, bool* saw_unknown) {
    blocks_limit_ = blocks;
    masks_.clear();
    areas_.clear();
    saw_unknown_ = false;
    const bool found = assign(0);
    *saw_unknown = saw_unknown_;
    return found ? masks_ : std::vector<uint32_t>{};
  }

  const SingleBinResult& bin(uint32_t mask) { return lookup(mask); }
  int64_t nodes() const { return nodes_; }

 private:
  const SingleBinResult& lookup(uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    std::vector<Item> items;
    for (size_t i = 0; i < instance_.items.size(); ++i) {
      if (mask & (1u << i)) items.push_back(instance_.items[i]);
    }
    OracleLimits remaining = limits_;
    remaining.node_budget = std::max<int64_t>(1, limits_.node_budget - nodes_);
    SingleBinResult result;
    if (nodes_ >= limits_.node_budget) {
      result.feasibility = Feasibility::kUnknown;
    } else {
      result = feasible_single_bin(items, instance_.bin_width,
                                   instance_.bin_height, remaining);
      nodes_ += result.nodes;
    }
    return memo_.emplace(mask, std::move(result)).first->second;
  }

  bool assign(size_t depth) {
    if (depth == order_.size()) return true;
    const int index = order_[depth];
    const Item& item = instance_.items[static_cast<size_t>(index)];
    const uint32_t bit = 1u << index;
    const int64_t capacity = instance_.bin_area();

    for (size_t b = 0; b <= masks_.size(); ++b) {
      const bool opening = b == masks_.size();
      if (opening && static_cast<int>(masks_.size()) >= blocks_limit_) break;
      if (opening) {
        masks_.push_back(0);
        areas_.push_back(0);
      }
      if (areas_[b] + item.area() <= capacity) {
        const uint32_t grown = masks_[b] | bit;
        const Feasibility f = lookup(grown).feasibility;
        if (f == Feasibility::kUnknown) saw_unknown_ = true;
        if (f == Feasibility::kFeasible) {
          const uint32_t before = masks_[b];
          masks_[b] = grown;
          areas_[b] += item.area();
          if (assign(depth + 1)) return true;
          masks_[b] = before;
          areas_[b] -= item.area();
        }
      }
      if (opening) {
        masks_.pop_back();
        areas_.pop_back();
      }
    }
    return false;
  }

  const Instance& instance_;
  OracleLimits limits_;
  std::vector<int> order_;
  std::unordered_map<uint32_t, SingleBinResult> memo_;
  std::vector<uint32_t> masks_;
  std::vector<int64_t> areas_;
  int blocks_limit_ = 0;
  bool saw_unknown_ = false;
  int64_t nodes_ = 0;
};

}  // namespace

ExactResult exact_min_bins(const Instance& instance,
                           const OracleLimits& limits) {
  limits.validate();
  const int n = instance.size();
  if (n > limits.max_items) {
    throw OracleLimitExceeded("oracle: " + std::to_string(n) +
                              " items exceed the limit of " +
                              std::to_string(limits.max_items));
  }
  ExactResult result;
  if (n == 0) {
    result.min_bins = 0;
    result.witness = PackingSolution{};
    return result;
  }

  PartitionSearch search(instance, limits);
  for (int k = area_lower_bound(instance); k <= n; ++k) {
    bool saw_unknown = false;
    const std::vector<uint32_t> masks = search.solve(k, &saw_unknown);
    if (!masks.empty()) {
      PackingSolution witness;
      for (size_t b = 0; b < masks.size(); ++b) {
        for (Placement p : search.bin(masks[b]).placements) {
          p.bin_index = static_cast<int>(b);
          witness.placements.push_back(p);
        }
      }
      witness.bins_used = static_cast<int>(masks.size());
      for (int i = 0; i < n; ++i) {
        if (masks.back() & (1u << i)) {
          witness.last_bin_load += instance.items[static_cast<size_t>(i)].area();
        }
      }
      result.min_bins = witness.bins_used;
      result.witness = std::move(witness);
      break;
    }
    // A failed level only proves k bins insufficient if nothing was unknown.
    if (saw_unknown) break;
  }
  result.nodes = search.nodes();
  return result;
}

}  // namespace bp2d
