#include "bp2d/model.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace bp2d {

int64_t Instance::total_item_area() const {
  int64_t total = 0;
  for (const Item& item : items) total += item.area();
  return total;
}

bool is_permutation_of(const Sequence& sequence, int n) {
  if (sequence.size() != n) return false;
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int id : sequence.order) {
    if (id < 1 || id > n || seen[static_cast<size_t>(id)]) return false;
    seen[static_cast<size_t>(id)] = true;
  }
  return true;
}

Fitness fitness_of(const PackingSolution& solution) {
  return Fitness{solution.bins_used, solution.last_bin_load};
}

bool ValidationReport::has_rule(const std::string& rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (size_t i = 0; i < violations.size(); ++i) {
    const Violation& v = violations[i];
    if (i > 0) out << "; ";
    if (v.item_id != 0) out << "item " << v.item_id << ": ";
    out << v.rule;
    if (!v.detail.empty()) out << " (" << v.detail << ")";
  }
  return out.str();
}

ValidationReport validate_instance(const Instance& instance) {
  ValidationReport report;
  auto add = [&](int id, const char* rule, std::string detail = {}) {
    report.violations.push_back({id, rule, std::move(detail)});
  };
  if (instance.bin_width < 1 || instance.bin_height < 1) {
    add(0, rules::kBinDimensions,
        std::to_string(instance.bin_width) + "x" +
            std::to_string(instance.bin_height));
  }

  const int n = instance.size();
  std::vector<int> id_count(static_cast<size_t>(n) + 1, 0);
  bool ids_ok = true;
  for (const Item& item : instance.items) {
    if (item.id < 1 || item.id > n) {
      ids_ok = false;
    } else if (++id_count[static_cast<size_t>(item.id)] > 1) {
      ids_ok = false;
    }
    if (item.width < 1 || item.height < 1) {
      add(item.id, rules::kItemDimensions,
          std::to_string(item.width) + "x" + std::to_string(item.height));
    }
    if (item.width > instance.bin_width) {
      add(item.id, rules::kWidthExceeds,
          std::to_string(item.width) + " > " +
              std::to_string(instance.bin_width));
    }
    if (item.height > instance.bin_height) {
      add(item.id, rules::kHeightExceeds,
          std::to_string(item.height) + " > " +
              std::to_string(instance.bin_height));
    }
  }
  // Ids must also sit in order so that item(id) is an O(1) lookup.
  for (int k = 0; ids_ok && k < n; ++k) {
    if (instance.items[static_cast<size_t>(k)].id != k + 1) ids_ok = false;
  }
  if (!ids_ok) add(0, rules::kIdsNotPermutation, "expected ids 1..n in order");
  return report;
}

ValidationReport validate_solution(const Instance& instance,
                                   const PackingSolution& solution) {
  ValidationReport report;
  auto add = [&](int id, const char* rule, std::string detail = {}) {
    report.violations.push_back({id, rule, std::move(detail)});
  };
  const int n = instance.size();
  const int width = instance.bin_width;
  const int height = instance.bin_height;

  std::vector<int> placed(static_cast<size_t>(n) + 1, 0);
  std::map<int, std::vector<std::pair<int, Rect>>> by_bin;
  int max_bin = -1;
  for (const Placement& p : solution.placements) {
    if (p.item_id < 1 || p.item_id > n) {
      add(p.item_id, rules::kUnknownItem);
      continue;
    }
    if (++placed[static_cast<size_t>(p.item_id)] > 1) {
      add(p.item_id, rules::kPlacedTwice);
      continue;
    }
    const Item& item = instance.item(p.item_id);
    const Rect r{p.x, p.y, item.width, item.height};
    if (p.bin_index < 0 || r.x < 0 || r.y < 0 || r.x + r.width > width ||
        r.y + r.height > height) {
      add(p.item_id, rules::kOutOfBounds,
          "bin " + std::to_string(p.bin_index) + " at (" +
              std::to_string(p.x) + "," + std::to_string(p.y) + ")");
    }
    max_bin = std::max(max_bin, p.bin_index);
    by_bin[p.bin_index].emplace_back(p.item_id, r);
  }
  for (int id = 1; id <= n; ++id) {
    if (placed[static_cast<size_t>(id)] == 0) add(id, rules::kUnplaced);
  }

  for (const auto& [bin, rects] : by_bin) {
    for (size_t a = 0; a < rects.size(); ++a) {
      for (size_t b = a + 1; b < rects.size(); ++b) {
        if (rects[a].second.overlaps(rects[b].second)) {
          add(rects[a].first, rules::kOverlap,
              "with item " + std::to_string(rects[b].first) + " in bin " +
                  std::to_string(bin));
        }
      }
    }
  }

  for (const WastageRect& w : solution.wastage) {
    const Rect& r = w.rect;
    if (w.bin_index < 0 || r.width < 1 || r.height < 1 || r.x < 0 ||
        r.y < 0 || r.x + r.width > width || r.y + r.height > height) {
      add(0, rules::kWastageOutOfBounds, "bin " + std::to_string(w.bin_index));
      continue;
    }
    auto it = by_bin.find(w.bin_index);
    if (it == by_bin.end()) continue;
    for (const auto& [id, rect] : it->second) {
      if (r.overlaps(rect)) {
        add(id, rules::kWastageOverlap, "bin " + std::to_string(w.bin_index));
      }
    }
  }

  if (solution.bins_used != max_bin + 1) {
    add(0, rules::kBinsUsed,
        std::to_string(solution.bins_used) + " vs " +
            std::to_string(max_bin + 1));
  }
  int64_t last_load = 0;
  if (auto it = by_bin.find(max_bin); it != by_bin.end()) {
    for (const auto& [id, rect] : it->second) last_load += rect.area();
  }
  if (solution.last_bin_load != last_load) {
    add(0, rules::kLastBinLoad,
        std::to_string(solution.last_bin_load) + " vs " +
            std::to_string(last_load));
  }
  return report;
}

}  // namespace bp2d
