#ifndef BP2D_SVG_H_
#define BP2D_SVG_H_

#include <string>

#include "bp2d/model.h"

namespace bp2d {

struct SvgStyle {
  double scale = 0.0;  // pixels per length unit; 0 picks one from the bin size
  int margin = 10;
  int gap = 20;  // horizontal space between bins
};

// Bins side by side, items labelled "w×h", wastage hatched. Deterministic.
std::string render_svg(const Instance& instance,
                       const PackingSolution& solution,
                       const SvgStyle& style = {});

}  // namespace bp2d

#endif  // BP2D_SVG_H_
