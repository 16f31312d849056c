#include "bp2d/lgfi.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace bp2d {

Sequence preprocess_sort(const Instance& instance) {
  std::vector<const Item*> items;
  items.reserve(instance.items.size());
  for (const Item& item : instance.items) items.push_back(&item);
  std::stable_sort(items.begin(), items.end(),
                   [](const Item* a, const Item* b) {
                     if (a->area() != b->area()) return a->area() > b->area();
                     const int da = std::abs(a->height - a->width);
                     const int db = std::abs(b->height - b->width);
                     if (da != db) return da > db;
                     return a->id < b->id;
                   });
  Sequence sequence;
  sequence.order.reserve(items.size());
  for (const Item* item : items) sequence.order.push_back(item->id);
  return sequence;
}

PackingSolution pack(const Instance& instance, const Sequence& sequence,
                     std::vector<TraceStep>* trace) {
  const int n = instance.size();
  if (!is_permutation_of(sequence, n)) {
    throw std::invalid_argument("pack: sequence is not a permutation of 1.." +
                                std::to_string(n));
  }
  PackingSolution solution;
  solution.placements.reserve(static_cast<size_t>(n));
  if (n == 0) return solution;

  std::vector<const Item*> unpacked;
  unpacked.reserve(static_cast<size_t>(n));
  for (int id : sequence.order) unpacked.push_back(&instance.item(id));

  const int bin_height = instance.bin_height;
  Skyline skyline(instance.bin_width, bin_height);
  int bin = 0;
  int64_t bin_load = 0;
  if (trace) trace->push_back({StepKind::kNewBin, bin, {}, 0, {}});

  while (!unpacked.empty()) {
    const std::optional<GapInfo> gap = skyline.current_position();
    if (!gap) {
      skyline = Skyline(instance.bin_width, bin_height);
      ++bin;
      bin_load = 0;
      if (trace) trace->push_back({StepKind::kNewBin, bin, {}, 0, {}});
      continue;
    }

    const int room = bin_height - gap->y;
    const int current = gap->current_gap();
    size_t exact = unpacked.size();
    size_t first_fit = unpacked.size();
    for (size_t k = 0; k < unpacked.size(); ++k) {
      const Item& item = *unpacked[k];
      if (item.width > gap->hgap || item.height > room) continue;
      const int side = gap->horizontal_is_current ? item.width : item.height;
      if (side == current) {
        exact = k;
        break;
      }
      if (first_fit == unpacked.size()) first_fit = k;
    }

    const size_t chosen = exact != unpacked.size() ? exact : first_fit;
    if (chosen == unpacked.size()) {
      const Rect waste = skyline.declare_wastage();
      solution.wastage.push_back({bin, waste});
      if (trace) trace->push_back({StepKind::kWastage, bin, *gap, 0, waste});
      continue;
    }

    const Item& item = *unpacked[chosen];
    skyline.place_at_current(item.width, item.height);
    solution.placements.push_back({item.id, bin, gap->x, gap->y});
    bin_load += item.area();
    if (trace) {
      trace->push_back({exact == chosen ? StepKind::kGapFill
                                        : StepKind::kFirstFit,
                        bin, *gap, item.id, {}});
    }
    unpacked.erase(unpacked.begin() + static_cast<ptrdiff_t>(chosen));
  }

  solution.bins_used = bin + 1;
  solution.last_bin_load = bin_load;
  return solution;
}

}  // namespace bp2d
