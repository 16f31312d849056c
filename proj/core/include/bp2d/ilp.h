// Assignment-based ILP model for 2BP|O|F and a CPLEX-LP writer.
//
// Variables (1-based item ids):
//   alpha_i_k  binary, i >= k   item i goes to bin k; alpha_k_k opens bin k
//   x_i, y_i   integer          bottom-left corner, bounded by W - w_i, H - h_i
//   ul/ua/ur/uu_i_j  binary, i < j   i left of / above / right of / below j
// Rows: one assignment row per item, bin-opening rows alpha_i_k <= alpha_k_k
// for i > k, one direction-choice row per pair, and four big-M
// non-overlap rows per (i, j, k) with k <= i < j.

#ifndef BP2D_ILP_H_
#define BP2D_ILP_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bp2d/model.h"

namespace bp2d {

enum class VarType { kBinary, kInteger };

struct Variable {
  std::string name;
  VarType type = VarType::kBinary;
  int64_t lower = 0;
  int64_t upper = 1;
};

struct Term {
  int variable = 0;  // index into IlpModel::variables
  int64_t coefficient = 0;
};

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

enum class ConstraintFamily {
  kAssignment,    // every item in exactly one bin
  kBinOpening,    // only open bins receive items
  kDirection,     // one relative direction per pair
  kLeftOf,        // big-M, x_i + w_i <= x_j
  kAbove,         // big-M, y_i >= y_j + h_j
  kRightOf,       // big-M, x_i >= x_j + w_j
  kBelow,         // big-M, y_i + h_i <= y_j
};

struct Constraint {
  std::string name;
  ConstraintFamily family = ConstraintFamily::kAssignment;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  int64_t rhs = 0;
};

class IlpModel {
 public:
  int item_count() const { return n_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Term>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  int alpha(int i, int k) const;  // requires 1 <= k <= i <= n
  int x(int i) const { return x_base_ + i - 1; }
  int y(int i) const { return y_base_ + i - 1; }
  int left(int i, int j) const { return ul_base_ + pair_index(i, j); }
  int above(int i, int j) const { return ua_base_ + pair_index(i, j); }
  int right(int i, int j) const { return ur_base_ + pair_index(i, j); }
  int below(int i, int j) const { return uu_base_ + pair_index(i, j); }

  int count(ConstraintFamily family) const;
  int count(VarType type) const;

  friend IlpModel build_model(const Instance& instance);

 private:
  int pair_index(int i, int j) const;  // requires 1 <= i < j <= n

  int n_ = 0;
  int x_base_ = 0;
  int y_base_ = 0;
  int ul_base_ = 0;
  int ua_base_ = 0;
  int ur_base_ = 0;
  int uu_base_ = 0;
  std::vector<Variable> variables_;
  std::vector<Term> objective_;
  std::vector<Constraint> constraints_;
};

// Throws std::invalid_argument for an empty or invalid instance.
IlpModel build_model(const Instance& instance);

// Deterministic CPLEX-LP text.
void export_lp(const IlpModel& model, std::ostream& out,
               const std::string& problem_name = "bp2d");
std::string export_lp(const IlpModel& model,
                      const std::string& problem_name = "bp2d");

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws IoError naming the path when the file cannot be written.
void export_lp_file(const IlpModel& model, const std::filesystem::path& path,
                    const std::string& problem_name = "bp2d");

// Variable values encoding `solution`: each bin is labelled by its lowest
// item id, and each same-bin pair takes the first separating direction of
// left, above, right, below.
std::vector<int64_t> assignment_from_solution(const IlpModel& model,
                                              const Instance& instance,
                                              const PackingSolution& solution);

int64_t objective_value(const IlpModel& model,
                        const std::vector<int64_t>& values);

// Names of violated rows and bounds; empty when `values` is feasible.
std::vector<std::string> violated_constraints(
    const IlpModel& model, const std::vector<int64_t>& values);

}  // namespace bp2d

#endif  // BP2D_ILP_H_
