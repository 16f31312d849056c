#include "bp2d/genbench.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bp2d {

namespace {

constexpr const char* kRoman[] = {"I",   "II", "III", "IV", "V",
                                  "VI",  "VII", "VIII", "IX", "X"};

void check_class(ClassId id) {
  if (id < 1 || id > kClassCount) {
    throw std::invalid_argument("unknown instance class " + std::to_string(id));
  }
}

int ceil_div(int num, int den) { return (num + den - 1) / den; }

}  // namespace

std::string class_label(ClassId id) {
  check_class(id);
  return kRoman[id - 1];
}

ClassId parse_class(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (int id = 1; id <= kClassCount; ++id) {
    if (upper == kRoman[id - 1] || upper == std::to_string(id)) return id;
  }
  throw std::invalid_argument("unknown instance class '" + std::string(text) +
                              "'");
}

ClassSpec class_spec(ClassId id) {
  check_class(id);
  ClassSpec spec;
  spec.id = id;
  if (id <= 6) {
    struct Row {
      int dim_hi;
      int bin;
    };
    static constexpr Row kRows[] = {{10, 10}, {10, 30},   {35, 40},
                                    {35, 100}, {100, 100}, {100, 300}};
    const Row& row = kRows[id - 1];
    spec.bin_width = spec.bin_height = row.bin;
    spec.width = spec.height = {1, row.dim_hi};
    return spec;
  }
  spec.bin_width = spec.bin_height = 100;
  spec.typed = true;
  spec.type_mix = {0.1, 0.1, 0.1, 0.1};
  spec.type_mix[static_cast<size_t>(id - 7)] = 0.7;
  return spec;
}

ItemTypeRange item_type_range(int type, int bin_width, int bin_height) {
  const IntRange full_w{1, bin_width};
  const IntRange full_h{1, bin_height};
  const IntRange low_half_w{1, bin_width / 2};
  const IntRange low_half_h{1, bin_height / 2};
  switch (type) {
    case 1:
      return {{ceil_div(2 * bin_width, 3), full_w.hi}, low_half_h};
    case 2:
      return {low_half_w, {ceil_div(2 * bin_height, 3), full_h.hi}};
    case 3:
      return {{ceil_div(bin_width, 2), full_w.hi},
              {ceil_div(bin_height, 2), full_h.hi}};
    case 4:
      return {low_half_w, low_half_h};
    default:
      throw std::invalid_argument("item type must be 1..4");
  }
}

std::string suite_instance_name(ClassId id, int n, int replicate) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "c%02d_n%03d_r%02d", id, n, replicate);
  return buffer;
}

Instance generate_instance(ClassId id, int n, RandomStream& rng,
                           std::string name) {
  if (n < 1) throw std::invalid_argument("generate_instance: n must be >= 1");
  const ClassSpec spec = class_spec(id);
  Instance instance;
  instance.name = name.empty() ? "c" + std::to_string(id) + "_n" +
                                     std::to_string(n)
                               : std::move(name);
  instance.bin_width = spec.bin_width;
  instance.bin_height = spec.bin_height;
  instance.items.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    IntRange w = spec.width;
    IntRange h = spec.height;
    if (spec.typed) {
      const double u = rng.uniform01();
      int type = 4;
      double cumulative = 0.0;
      for (int t = 0; t < 4; ++t) {
        cumulative += spec.type_mix[static_cast<size_t>(t)];
        if (u < cumulative) {
          type = t + 1;
          break;
        }
      }
      const ItemTypeRange range =
          item_type_range(type, spec.bin_width, spec.bin_height);
      w = range.width;
      h = range.height;
    }
    const int width = rng.uniform_int(w.lo, w.hi);
    const int height = rng.uniform_int(h.lo, h.hi);
    instance.items.push_back({i, width, height});
  }
  return instance;
}

Instance generate_suite_instance(uint64_t master_seed, ClassId id, int n,
                                 int replicate) {
  const uint64_t task = (uint64_t(id) << 32) | (uint64_t(n) << 16) |
                        uint64_t(replicate);
  RandomStream rng = RandomStream::derive(master_seed, task);
  return generate_instance(id, n, rng, suite_instance_name(id, n, replicate));
}

std::vector<Instance> generate_suite(uint64_t master_seed) {
  std::vector<Instance> suite;
  suite.reserve(kClassCount * kSuiteSizes.size() * kSuiteReplicates);
  for (ClassId id = 1; id <= kClassCount; ++id) {
    for (int n : kSuiteSizes) {
      for (int r = 1; r <= kSuiteReplicates; ++r) {
        suite.push_back(generate_suite_instance(master_seed, id, n, r));
      }
    }
  }
  return suite;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    const size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    ++number;
    lines.push_back({number, trim(line)});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

std::optional<int64_t> to_integer(std::string_view token) {
  int64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// Exactly `count` integers on the line.
std::vector<int> integers(const Line& line, size_t count, const char* what) {
  const std::vector<std::string_view> parts = tokens(line.text);
  if (parts.size() != count) {
    throw ParseError(line.number, std::string("expected ") +
                                      std::to_string(count) + " value(s) for " +
                                      what + ", found " +
                                      std::to_string(parts.size()));
  }
  std::vector<int> values;
  for (std::string_view p : parts) {
    const std::optional<int64_t> v = to_integer(p);
    if (!v || *v < INT32_MIN || *v > INT32_MAX) {
      throw ParseError(line.number, "non-integer token '" + std::string(p) +
                                        "' in " + what);
    }
    values.push_back(static_cast<int>(*v));
  }
  return values;
}

}  // namespace

std::string write_instance(const Instance& instance) {
  std::ostringstream out;
  if (!instance.name.empty()) out << "# name: " << instance.name << '\n';
  out << instance.size() << '\n'
      << instance.bin_width << ' ' << instance.bin_height << '\n';
  for (const Item& item : instance.items) {
    out << item.width << ' ' << item.height << '\n';
  }
  return out.str();
}

Instance read_instance(std::string_view text, const std::string& fallback_name) {
  Instance instance;
  instance.name = fallback_name;
  std::vector<Line> data;
  int last_line = 0;
  for (const Line& line : split_lines(text)) {
    last_line = line.number;
    if (line.text.empty()) continue;
    if (line.text.front() == '#') {
      std::string_view body = trim(line.text.substr(1));
      if (body.starts_with("name:")) {
        instance.name = std::string(trim(body.substr(5)));
      }
      continue;
    }
    data.push_back(line);
  }
  if (data.empty()) throw ParseError(std::max(last_line, 1), "missing header");
  const int n = integers(data[0], 1, "item count")[0];
  if (n < 0) throw ParseError(data[0].number, "negative item count");
  if (data.size() < 2) {
    throw ParseError(last_line, "missing bin dimensions line");
  }
  const std::vector<int> bin = integers(data[1], 2, "bin dimensions");
  instance.bin_width = bin[0];
  instance.bin_height = bin[1];
  const size_t listed = data.size() - 2;
  if (listed != static_cast<size_t>(n)) {
    const int at = listed > static_cast<size_t>(n)
                       ? data[2 + static_cast<size_t>(n)].number
                       : last_line;
    throw ParseError(at, "count mismatch: header declares " +
                             std::to_string(n) + " items, found " +
                             std::to_string(listed));
  }
  for (int i = 0; i < n; ++i) {
    const std::vector<int> wh =
        integers(data[2 + static_cast<size_t>(i)], 2, "item dimensions");
    instance.items.push_back({i + 1, wh[0], wh[1]});
  }
  return instance;
}

std::vector<Instance> import_legacy(std::string_view text) {
  // Each line contributes its leading integers; trailing labels such as
  // "PROBLEM CLASS" or "H(I),W(I),I=1,...,N" are ignored.
  struct Numbers {
    int line;
    std::vector<int> values;
  };
  std::vector<Numbers> rows;
  for (const Line& line : split_lines(text)) {
    Numbers row{line.number, {}};
    for (std::string_view token : tokens(line.text)) {
      const std::optional<int64_t> v = to_integer(token);
      if (!v) break;
      row.values.push_back(static_cast<int>(*v));
    }
    if (!row.values.empty()) rows.push_back(std::move(row));
  }

  std::vector<Instance> instances;
  size_t r = 0;
  auto need = [&](size_t count, const char* what) -> const Numbers& {
    if (r >= rows.size()) {
      throw ParseError(rows.empty() ? 1 : rows.back().line,
                       std::string("unexpected end of file, expected ") + what);
    }
    const Numbers& row = rows[r++];
    if (row.values.size() < count) {
      throw ParseError(row.line, std::string("expected ") + what);
    }
    return row;
  };
  while (r < rows.size()) {
    const int cls = need(1, "problem class").values[0];
    const int n = need(1, "item count").values[0];
    const int index = need(1, "instance index").values[0];
    const Numbers& bin = need(2, "bin height and width");
    if (n < 0) throw ParseError(bin.line, "negative item count");
    Instance instance;
    const int replicate = (index - 1) % kSuiteReplicates + 1;
    instance.name = cls >= 1 && cls <= kClassCount
                        ? suite_instance_name(cls, n, replicate)
                        : "legacy_" + std::to_string(instances.size() + 1);
    instance.bin_height = bin.values[0];
    instance.bin_width = bin.values[1];
    for (int i = 1; i <= n; ++i) {
      const Numbers& item = need(2, "item height and width");
      instance.items.push_back({i, item.values[1], item.values[0]});
    }
    instances.push_back(std::move(instance));
  }
  return instances;
}

std::string write_solution(const Instance& instance,
                           const PackingSolution& solution) {
  std::vector<Placement> by_id = solution.placements;
  std::sort(by_id.begin(), by_id.end(),
            [](const Placement& a, const Placement& b) {
              return a.item_id < b.item_id;
            });
  std::ostringstream out;
  out << "# solution";
  if (!instance.name.empty()) out << " for " << instance.name;
  out << ": " << solution.bins_used << " bins\n";
  for (const Placement& p : by_id) {
    out << p.item_id << ' ' << p.bin_index << ' ' << p.x << ' ' << p.y << '\n';
  }
  for (const WastageRect& w : solution.wastage) {
    out << "W " << w.bin_index << ' ' << w.rect.x << ' ' << w.rect.y << ' '
        << w.rect.width << ' ' << w.rect.height << '\n';
  }
  return out.str();
}

PackingSolution read_solution(std::string_view text, const Instance& instance) {
  PackingSolution solution;
  int max_bin = -1;
  for (const Line& line : split_lines(text)) {
    if (line.text.empty() || line.text.front() == '#') continue;
    if (line.text.front() == 'W') {
      const std::vector<int> v = integers({line.number, trim(line.text.substr(1))},
                                          5, "wastage rectangle");
      solution.wastage.push_back({v[0], {v[1], v[2], v[3], v[4]}});
      continue;
    }
    const std::vector<int> v = integers(line, 4, "placement");
    if (v[0] < 1 || v[0] > instance.size()) {
      throw ParseError(line.number, "unknown item id " + std::to_string(v[0]));
    }
    solution.placements.push_back({v[0], v[1], v[2], v[3]});
    max_bin = std::max(max_bin, v[1]);
  }
  solution.bins_used = max_bin + 1;
  for (const Placement& p : solution.placements) {
    if (p.bin_index == max_bin) {
      solution.last_bin_load += instance.item(p.item_id).area();
    }
  }
  return solution;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  file << text;
  file.flush();
  if (!file) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace bp2d
