#include "bp2d/ilp.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace bp2d {

int IlpModel::alpha(int i, int k) const { return (i - 1) * i / 2 + (k - 1); }

int IlpModel::pair_index(int i, int j) const {
  return (i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1);
}

int IlpModel::count(ConstraintFamily family) const {
  return static_cast<int>(std::count_if(
      constraints_.begin(), constraints_.end(),
      [&](const Constraint& c) { return c.family == family; }));
}

int IlpModel::count(VarType type) const {
  return static_cast<int>(
      std::count_if(variables_.begin(), variables_.end(),
                    [&](const Variable& v) { return v.type == type; }));
}

namespace {

std::string indexed(const char* stem, int a, int b = 0, int c = 0) {
  std::string name = stem;
  for (int v : {a, b, c}) {
    if (v == 0) break;
    name += '_';
    name += std::to_string(v);
  }
  return name;
}

}  // namespace

IlpModel build_model(const Instance& instance) {
  if (instance.items.empty()) {
    throw std::invalid_argument("build_model: instance has no items");
  }
  if (!validate_instance(instance).ok()) {
    throw std::invalid_argument("build_model: invalid instance");
  }
  const int n = instance.size();
  const int64_t width = instance.bin_width;
  const int64_t height = instance.bin_height;

  IlpModel model;
  model.n_ = n;
  auto& vars = model.variables_;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= i; ++k) {
      vars.push_back({indexed("alpha", i, k), VarType::kBinary, 0, 1});
    }
  }
  model.x_base_ = static_cast<int>(vars.size());
  for (int i = 1; i <= n; ++i) {
    vars.push_back(
        {indexed("x", i), VarType::kInteger, 0, width - instance.item(i).width});
  }
  model.y_base_ = static_cast<int>(vars.size());
  for (int i = 1; i <= n; ++i) {
    vars.push_back({indexed("y", i), VarType::kInteger, 0,
                    height - instance.item(i).height});
  }
  int* bases[] = {&model.ul_base_, &model.ua_base_, &model.ur_base_,
                  &model.uu_base_};
  const char* stems[] = {"ul", "ua", "ur", "uu"};
  for (int d = 0; d < 4; ++d) {
    *bases[d] = static_cast<int>(vars.size());
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        vars.push_back({indexed(stems[d], i, j), VarType::kBinary, 0, 1});
      }
    }
  }

  for (int i = 1; i <= n; ++i) model.objective_.push_back({model.alpha(i, i), 1});

  auto& rows = model.constraints_;
  for (int i = 1; i <= n; ++i) {
    Constraint row{indexed("assign", i), ConstraintFamily::kAssignment, {},
                   Sense::kEqual, 1};
    for (int k = 1; k <= i; ++k) row.terms.push_back({model.alpha(i, k), 1});
    rows.push_back(std::move(row));
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k < i; ++k) {
      rows.push_back({indexed("open", i, k), ConstraintFamily::kBinOpening,
                      {{model.alpha(i, k), 1}, {model.alpha(k, k), -1}},
                      Sense::kLessEqual, 0});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      rows.push_back({indexed("dir", i, j), ConstraintFamily::kDirection,
                      {{model.left(i, j), 1},
                       {model.above(i, j), 1},
                       {model.right(i, j), 1},
                       {model.below(i, j), 1}},
                      Sense::kEqual, 1});
    }
  }

  // Each big-M row is active only when the direction variable and both
  // alphas for bin k are 1.
  struct BigM {
    ConstraintFamily family;
    const char* stem;
  };
  const BigM families[] = {{ConstraintFamily::kLeftOf, "left"},
                           {ConstraintFamily::kAbove, "above"},
                           {ConstraintFamily::kRightOf, "right"},
                           {ConstraintFamily::kBelow, "below"}};
  for (const BigM& f : families) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = 1; k <= i; ++k) {
          Constraint row{indexed(f.stem, i, j, k), f.family, {}, {}, 0};
          const int a_ik = model.alpha(i, k);
          const int a_jk = model.alpha(j, k);
          const Item& item_i = instance.item(i);
          const Item& item_j = instance.item(j);
          switch (f.family) {
            case ConstraintFamily::kLeftOf:
              // x_i + w_i <= x_j + W (3 - ul - a_ik - a_jk)
              row.terms = {{model.x(i), 1}, {model.x(j), -1},
                           {model.left(i, j), width}, {a_ik, width},
                           {a_jk, width}};
              row.sense = Sense::kLessEqual;
              row.rhs = 3 * width - item_i.width;
              break;
            case ConstraintFamily::kAbove:
              // y_i + H (3 - ua - a_ik - a_jk) >= y_j + h_j
              row.terms = {{model.y(i), 1}, {model.y(j), -1},
                           {model.above(i, j), -height}, {a_ik, -height},
                           {a_jk, -height}};
              row.sense = Sense::kGreaterEqual;
              row.rhs = item_j.height - 3 * height;
              break;
            case ConstraintFamily::kRightOf:
              // x_i + W (3 - ur - a_ik - a_jk) >= x_j + w_j
              row.terms = {{model.x(i), 1}, {model.x(j), -1},
                           {model.right(i, j), -width}, {a_ik, -width},
                           {a_jk, -width}};
              row.sense = Sense::kGreaterEqual;
              row.rhs = item_j.width - 3 * width;
              break;
            default:
              // y_i + h_i <= y_j + H (3 - uu - a_ik - a_jk)
              row.terms = {{model.y(i), 1}, {model.y(j), -1},
                           {model.below(i, j), height}, {a_ik, height},
                           {a_jk, height}};
              row.sense = Sense::kLessEqual;
              row.rhs = 3 * height - item_i.height;
              break;
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return model;
}

namespace {

constexpr size_t kLineWidth = 78;

// Writes "name: t1 + t2 ..." wrapping long expressions across lines.
void write_expression(std::ostream& out, const std::string& label,
                      const std::vector<Term>& terms,
                      const std::vector<Variable>& vars) {
  std::string line = " " + label + ":";
  bool first = true;
  for (const Term& t : terms) {
    std::string piece;
    if (t.coefficient < 0) {
      piece = " -";
    } else if (!first) {
      piece = " +";
    }
    const int64_t magnitude = t.coefficient < 0 ? -t.coefficient : t.coefficient;
    if (magnitude != 1) piece += " " + std::to_string(magnitude);
    piece += " " + vars[static_cast<size_t>(t.variable)].name;
    if (line.size() + piece.size() > kLineWidth) {
      out << line << '\n';
      line = "   ";
    }
    line += piece;
    first = false;
  }
  out << line;
}

void write_names(std::ostream& out, const std::vector<Variable>& vars,
                 VarType type) {
  std::string line;
  for (const Variable& v : vars) {
    if (v.type != type) continue;
    if (line.size() + v.name.size() + 1 > kLineWidth) {
      out << line << '\n';
      line.clear();
    }
    line += " " + v.name;
  }
  if (!line.empty()) out << line << '\n';
}

}  // namespace

void export_lp(const IlpModel& model, std::ostream& out,
               const std::string& problem_name) {
  const auto& vars = model.variables();
  out << "\\ Problem: " << problem_name << '\n';
  out << "\\ 2BP|O|F assignment model, " << model.item_count() << " items, "
      << vars.size() << " variables, " << model.constraints().size()
      << " constraints\n";
  out << "Minimize\n";
  write_expression(out, "bins", model.objective(), vars);
  out << "\nSubject To\n";
  for (const Constraint& c : model.constraints()) {
    write_expression(out, c.name, c.terms, vars);
    switch (c.sense) {
      case Sense::kLessEqual: out << " <= "; break;
      case Sense::kGreaterEqual: out << " >= "; break;
      case Sense::kEqual: out << " = "; break;
    }
    out << c.rhs << '\n';
  }
  out << "Bounds\n";
  for (const Variable& v : vars) {
    if (v.type != VarType::kInteger) continue;
    out << " " << v.lower << " <= " << v.name << " <= " << v.upper << '\n';
  }
  out << "Generals\n";
  write_names(out, vars, VarType::kInteger);
  out << "Binaries\n";
  write_names(out, vars, VarType::kBinary);
  out << "End\n";
}

std::string export_lp(const IlpModel& model, const std::string& problem_name) {
  std::ostringstream out;
  export_lp(model, out, problem_name);
  return out.str();
}

void export_lp_file(const IlpModel& model, const std::filesystem::path& path,
                    const std::string& problem_name) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  export_lp(model, file, problem_name);
  file.flush();
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<int64_t> assignment_from_solution(const IlpModel& model,
                                              const Instance& instance,
                                              const PackingSolution& solution) {
  const int n = instance.size();
  if (model.item_count() != n) {
    throw std::invalid_argument("assignment_from_solution: size mismatch");
  }
  std::vector<const Placement*> where(static_cast<size_t>(n) + 1, nullptr);
  for (const Placement& p : solution.placements) {
    where.at(static_cast<size_t>(p.item_id)) = &p;
  }
  std::vector<int> lowest_in_bin(static_cast<size_t>(solution.bins_used), n + 1);
  for (int i = 1; i <= n; ++i) {
    if (!where[static_cast<size_t>(i)]) {
      throw std::invalid_argument("assignment_from_solution: item " +
                                  std::to_string(i) + " unplaced");
    }
    int& low = lowest_in_bin.at(static_cast<size_t>(where[static_cast<size_t>(i)]->bin_index));
    low = std::min(low, i);
  }

  std::vector<int64_t> values(model.variables().size(), 0);
  for (int i = 1; i <= n; ++i) {
    const Placement& p = *where[static_cast<size_t>(i)];
    const int k = lowest_in_bin[static_cast<size_t>(p.bin_index)];
    values[static_cast<size_t>(model.alpha(i, k))] = 1;
    values[static_cast<size_t>(model.x(i))] = p.x;
    values[static_cast<size_t>(model.y(i))] = p.y;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Placement& a = *where[static_cast<size_t>(i)];
      const Placement& b = *where[static_cast<size_t>(j)];
      const Item& ia = instance.item(i);
      const Item& ib = instance.item(j);
      int chosen = model.left(i, j);
      if (a.bin_index == b.bin_index) {
        if (a.x + ia.width <= b.x) {
          chosen = model.left(i, j);
        } else if (a.y >= b.y + ib.height) {
          chosen = model.above(i, j);
        } else if (a.x >= b.x + ib.width) {
          chosen = model.right(i, j);
        } else {
          chosen = model.below(i, j);
        }
      }
      values[static_cast<size_t>(chosen)] = 1;
    }
  }
  return values;
}

int64_t objective_value(const IlpModel& model,
                        const std::vector<int64_t>& values) {
  int64_t total = 0;
  for (const Term& t : model.objective()) {
    total += t.coefficient * values.at(static_cast<size_t>(t.variable));
  }
  return total;
}

std::vector<std::string> violated_constraints(
    const IlpModel& model, const std::vector<int64_t>& values) {
  std::vector<std::string> violated;
  const auto& vars = model.variables();
  for (size_t v = 0; v < vars.size(); ++v) {
    if (values.at(v) < vars[v].lower || values.at(v) > vars[v].upper) {
      violated.push_back("bound " + vars[v].name);
    }
  }
  for (const Constraint& c : model.constraints()) {
    int64_t lhs = 0;
    for (const Term& t : c.terms) {
      lhs += t.coefficient * values.at(static_cast<size_t>(t.variable));
    }
    const bool ok = c.sense == Sense::kLessEqual      ? lhs <= c.rhs
                    : c.sense == Sense::kGreaterEqual ? lhs >= c.rhs
                                                      : lhs == c.rhs;
    if (!ok) violated.push_back(c.name);
  }
  return violated;
}

}  // namespace bp2d
