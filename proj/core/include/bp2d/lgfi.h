// The LGFi constructive heuristic: a preprocessing sort followed by a
// one-pass, gap-filling packing stage over a caller-supplied sequence.

#ifndef BP2D_LGFI_H_
#define BP2D_LGFI_H_

#include <vector>

#include "bp2d/model.h"
#include "bp2d/skyline.h"

namespace bp2d {

// Non-increasing area, then non-increasing |h - w|, then ascending id.
Sequence preprocess_sort(const Instance& instance);

enum class StepKind {
  kGapFill,   // item's gap-side dimension equals the current gap
  kFirstFit,  // first item that fits
  kWastage,
  kNewBin,
};

struct TraceStep {
  StepKind kind = StepKind::kNewBin;
  int bin_index = 0;
  GapInfo gap;      // position the decision was taken at (unset for kNewBin)
  int item_id = 0;  // kGapFill / kFirstFit
  Rect wastage;     // kWastage
};

// Packs `sequence` with LGFi. Deterministic. Throws std::invalid_argument if
// `sequence` is not a permutation of the instance's item ids. When `trace`
// is non-null every decision is appended to it.
PackingSolution pack(const Instance& instance, const Sequence& sequence,
                     std::vector<TraceStep>* trace = nullptr);

}  // namespace bp2d

#endif  // BP2D_LGFI_H_
