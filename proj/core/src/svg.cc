#include "bp2d/svg.h"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace bp2d {

namespace {

std::string number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Instance& instance,
                       const PackingSolution& solution,
                       const SvgStyle& style) {
  const int bins = solution.bins_used;
  const int bin_w = std::max(instance.bin_width, 1);
  const int bin_h = std::max(instance.bin_height, 1);
  const double scale =
      style.scale > 0.0 ? style.scale : 300.0 / std::max(bin_w, bin_h);
  const double cell_w = bin_w * scale;
  const double cell_h = bin_h * scale;
  const double total_w =
      2.0 * style.margin + bins * cell_w + std::max(bins - 1, 0) * style.gap;
  const double total_h = 2.0 * style.margin + (bins > 0 ? cell_h : 0.0);

  auto left_of = [&](int bin) {
    return style.margin + bin * (cell_w + style.gap);
  };
  // SVG's y axis points down; packing coordinates point up.
  auto top_of = [&](int y, int h) {
    return style.margin + (bin_h - y - h) * scale;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << number(total_w)
      << "\" height=\"" << number(total_h) << "\" viewBox=\"0 0 "
      << number(total_w) << ' ' << number(total_h) << "\">\n";
  if (!instance.name.empty()) {
    out << "  <title>" << escape(instance.name) << "</title>\n";
  }
  out << "  <defs>\n"
         "    <pattern id=\"hatch\" width=\"6\" height=\"6\" "
         "patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">\n"
         "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555\" "
         "stroke-width=\"1.5\"/>\n"
         "    </pattern>\n"
         "  </defs>\n";

  std::vector<std::vector<const Placement*>> items(static_cast<size_t>(bins));
  for (const Placement& p : solution.placements) {
    if (p.bin_index >= 0 && p.bin_index < bins) {
      items[static_cast<size_t>(p.bin_index)].push_back(&p);
    }
  }
  // Id order, so a solution read back from a file renders identically.
  for (auto& bin_items : items) {
    std::sort(bin_items.begin(), bin_items.end(),
              [](const Placement* a, const Placement* b) {
                return a->item_id < b->item_id;
              });
  }
  std::vector<std::vector<const WastageRect*>> waste(static_cast<size_t>(bins));
  for (const WastageRect& w : solution.wastage) {
    if (w.bin_index >= 0 && w.bin_index < bins) {
      waste[static_cast<size_t>(w.bin_index)].push_back(&w);
    }
  }

  for (int b = 0; b < bins; ++b) {
    const double x0 = left_of(b);
    out << "  <g class=\"bin\" id=\"bin" << b << "\">\n";
    out << "    <rect x=\"" << number(x0) << "\" y=\"" << number(style.margin)
        << "\" width=\"" << number(cell_w) << "\" height=\"" << number(cell_h)
        << "\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    for (const Placement* p : items[static_cast<size_t>(b)]) {
      const Item& item = instance.item(p->item_id);
      const double rx = x0 + p->x * scale;
      const double ry = top_of(p->y, item.height);
      const double rw = item.width * scale;
      const double rh = item.height * scale;
      out << "    <rect class=\"item\" x=\"" << number(rx) << "\" y=\""
          << number(ry) << "\" width=\"" << number(rw) << "\" height=\""
          << number(rh)
          << "\" fill=\"#cfe2f3\" stroke=\"#1c4587\" stroke-width=\"1\"/>\n";
      out << "    <text x=\"" << number(rx + rw / 2) << "\" y=\""
          << number(ry + rh / 2)
          << "\" font-family=\"sans-serif\" font-size=\""
          << number(std::clamp(std::min(rw, rh) / 3.0, 4.0, 14.0))
          << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
          << item.width << "\xC3\x97" << item.height << "</text>\n";
    }
    for (const WastageRect* w : waste[static_cast<size_t>(b)]) {
      out << "    <rect class=\"wastage\" x=\"" << number(x0 + w->rect.x * scale)
          << "\" y=\"" << number(top_of(w->rect.y, w->rect.height))
          << "\" width=\"" << number(w->rect.width * scale) << "\" height=\""
          << number(w->rect.height * scale)
          << "\" fill=\"url(#hatch)\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace bp2d
