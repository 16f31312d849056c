// Benchmark instance classes I-X, and text formats for instances and
// solutions.
//
// Instance text:
//   n
//   W H
//   w_1 h_1
//   ...
// Lines starting with '#' are comments; "# name: <label>" sets the name.
//
// Solution text: one "item_id bin_index x y" line per item, ordered by id,
// then one "W bin_index x y width height" line per wastage rectangle.

#ifndef BP2D_GENBENCH_H_
#define BP2D_GENBENCH_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bp2d/model.h"
#include "bp2d/random.h"

namespace bp2d {

inline constexpr int kClassCount = 10;
inline constexpr std::array<int, 5> kSuiteSizes = {20, 40, 60, 80, 100};
inline constexpr int kSuiteReplicates = 10;

// 1..10 for classes I..X.
using ClassId = int;

// Roman numeral label, e.g. "VII". Throws std::invalid_argument outside 1..10.
std::string class_label(ClassId id);
// Accepts "I".."X" (any case) or "1".."10".
ClassId parse_class(std::string_view text);

struct IntRange {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct ClassSpec {
  ClassId id = 1;
  int bin_width = 0;
  int bin_height = 0;
  // Classes I-VI draw both dimensions from one range per axis.
  IntRange width;
  IntRange height;
  // Classes VII-X mix the four item types with these probabilities.
  bool typed = false;
  std::array<double, 4> type_mix{};
};

ClassSpec class_spec(ClassId id);

// Dimension ranges of item types 1-4 for a W x H bin; fractional bounds are
// rounded inwards (lower up, upper down).
struct ItemTypeRange {
  IntRange width;
  IntRange height;
};
ItemTypeRange item_type_range(int type, int bin_width, int bin_height);

// Name used for generated instances: "c<class>_n<n>_r<replicate>".
std::string suite_instance_name(ClassId id, int n, int replicate);

Instance generate_instance(ClassId id, int n, RandomStream& rng,
                           std::string name = {});

// Classes I-X x sizes {20..100} x 10 replicates, each drawn from a stream
// derived from (master_seed, class, n, replicate).
std::vector<Instance> generate_suite(uint64_t master_seed);
Instance generate_suite_instance(uint64_t master_seed, ClassId id, int n,
                                 int replicate);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

std::string write_instance(const Instance& instance);
// `fallback_name` is used when the text has no "# name:" comment.
Instance read_instance(std::string_view text,
                       const std::string& fallback_name = {});

// Importer for the classic two-column benchmark files, which carry
// class/count/index/"H W" header lines followed by "h w" item lines, with
// several instances per file. Tolerant of trailing labels.
std::vector<Instance> import_legacy(std::string_view text);

std::string write_solution(const Instance& instance,
                           const PackingSolution& solution);
PackingSolution read_solution(std::string_view text, const Instance& instance);

// File helpers; throw std::runtime_error naming the path on I/O failure.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace bp2d

#endif  // BP2D_GENBENCH_H_
