#include "bp2d/ilp.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <sstream>

#include "bp2d/lgfi.h"
#include "test_support.h"

namespace bp2d {
namespace {

using testing::figure1;
using testing::make_instance;

// Minimal reader for the CPLEX-LP subset the exporter writes. Kept apart
// from the library so the file itself is what gets checked.
struct LpRow {
  std::string name;
  std::map<std::string, int64_t> terms;
  std::string sense;
  int64_t rhs = 0;
};

struct LpFile {
  std::map<std::string, int64_t> objective;
  std::vector<LpRow> rows;
  std::map<std::string, std::pair<int64_t, int64_t>> bounds;
  std::vector<std::string> generals;
  std::vector<std::string> binaries;
  bool ended = false;
};

void parse_linear(std::istringstream& in, std::map<std::string, int64_t>& terms,
                  std::string* sense, int64_t* rhs) {
  int64_t sign = 1;
  int64_t coef = 1;
  std::string tok;
  while (in >> tok) {
    if (tok == "+") { sign = 1; continue; }
    if (tok == "-") { sign = -1; continue; }
    if (tok == "<=" || tok == ">=" || tok == "=") {
      *sense = tok;
      in >> *rhs;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
      coef = std::stoll(tok);
      continue;
    }
    terms[tok] += sign * coef;
    sign = 1;
    coef = 1;
  }
}

LpFile parse_lp(const std::string& text) {
  LpFile lp;
  std::istringstream in(text);
  std::string line, section, pending;
  auto flush = [&] {
    if (pending.empty()) return;
    const size_t colon = pending.find(':');
    std::istringstream body(pending.substr(colon + 1));
    if (section == "Minimize") {
      std::string sense;
      int64_t rhs = 0;
      parse_linear(body, lp.objective, &sense, &rhs);
    } else {
      LpRow row;
      std::istringstream head(pending.substr(0, colon));
      head >> row.name;
      parse_linear(body, row.terms, &row.sense, &row.rhs);
      lp.rows.push_back(row);
    }
    pending.clear();
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '\\') continue;
    if (line[0] != ' ') {
      flush();
      section = line;
      if (line == "End") lp.ended = true;
      continue;
    }
    if (section == "Minimize" || section == "Subject To") {
      if (line.find(':') != std::string::npos) flush();
      pending += line + ' ';
    } else if (section == "Bounds") {
      std::istringstream b(line);
      int64_t lo = 0, hi = 0;
      std::string le1, var, le2;
      b >> lo >> le1 >> var >> le2 >> hi;
      lp.bounds[var] = {lo, hi};
    } else {
      std::istringstream names(line);
      std::string v;
      while (names >> v) {
        (section == "Generals" ? lp.generals : lp.binaries).push_back(v);
      }
    }
  }
  flush();
  return lp;
}

int count_prefix(const LpFile& lp, const std::string& prefix) {
  int c = 0;
  for (const LpRow& r : lp.rows) c += r.name.rfind(prefix, 0) == 0;
  return c;
}

int count_var_prefix(const std::vector<std::string>& vars,
                     const std::string& prefix) {
  int c = 0;
  for (const std::string& v : vars) c += v.rfind(prefix, 0) == 0;
  return c;
}

// Variable values for a packing, built from geometry by name.
std::map<std::string, int64_t> assignment_by_name(const Instance& instance,
                                                  const PackingSolution& s) {
  const int n = instance.size();
  std::map<int, Placement> at;
  std::map<int, int> lowest;  // bin -> lowest item id
  for (const Placement& p : s.placements) {
    at[p.item_id] = p;
    auto it = lowest.find(p.bin_index);
    if (it == lowest.end() || p.item_id < it->second) lowest[p.bin_index] = p.item_id;
  }
  auto key = [](std::string base, int a, int b) {
    return base + "_" + std::to_string(a) + "_" + std::to_string(b);
  };
  std::map<std::string, int64_t> v;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= i; ++k) v[key("alpha", i, k)] = 0;
    v[key("alpha", i, lowest[at[i].bin_index])] = 1;
    v["x_" + std::to_string(i)] = at[i].x;
    v["y_" + std::to_string(i)] = at[i].y;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Item& a = instance.item(i);
      const Item& b = instance.item(j);
      const Placement& p = at[i];
      const Placement& q = at[j];
      const bool l = p.x + a.width <= q.x;
      const bool ab = p.y >= q.y + b.height;
      const bool r = p.x >= q.x + b.width;
      const bool u = p.y + a.height <= q.y;
      const int pick = l ? 0 : ab ? 1 : r ? 2 : u ? 3 : 0;
      v[key("ul", i, j)] = pick == 0;
      v[key("ua", i, j)] = pick == 1;
      v[key("ur", i, j)] = pick == 2;
      v[key("uu", i, j)] = pick == 3;
    }
  }
  return v;
}

std::vector<std::string> violated(const LpFile& lp,
                                  const std::map<std::string, int64_t>& v) {
  std::vector<std::string> bad;
  for (const LpRow& row : lp.rows) {
    int64_t lhs = 0;
    for (const auto& [name, c] : row.terms) lhs += c * v.at(name);
    const bool ok = row.sense == "<="   ? lhs <= row.rhs
                    : row.sense == ">=" ? lhs >= row.rhs
                                        : lhs == row.rhs;
    if (!ok) bad.push_back(row.name);
  }
  for (const auto& [name, b] : lp.bounds) {
    if (v.at(name) < b.first || v.at(name) > b.second) bad.push_back(name);
  }
  for (const std::string& name : lp.binaries) {
    if (v.at(name) != 0 && v.at(name) != 1) bad.push_back(name);
  }
  return bad;
}

TEST(BuildModel, Figure1Counts) {
  const IlpModel m = build_model(figure1());
  EXPECT_EQ(m.variables().size(), 93u);
  EXPECT_EQ(m.count(VarType::kBinary), 81);
  EXPECT_EQ(m.count(VarType::kInteger), 12);
  EXPECT_EQ(m.count(ConstraintFamily::kAssignment), 6);
  EXPECT_EQ(m.count(ConstraintFamily::kBinOpening), 15);
  EXPECT_EQ(m.count(ConstraintFamily::kDirection), 15);
  EXPECT_EQ(m.count(ConstraintFamily::kLeftOf), 35);
  EXPECT_EQ(m.count(ConstraintFamily::kAbove), 35);
  EXPECT_EQ(m.count(ConstraintFamily::kRightOf), 35);
  EXPECT_EQ(m.count(ConstraintFamily::kBelow), 35);
}

// Closed forms against brute enumeration of the index sets.
TEST(BuildModel, CountsForAllSmallSizes) {
  for (int n = 1; n <= 10; ++n) {
    std::vector<std::pair<int, int>> dims(static_cast<size_t>(n), {1, 1});
    const IlpModel m = build_model(make_instance(n, n, dims));
    int alpha = 0, pairs = 0, opening = 0, triples = 0;
    for (int i = 1; i <= n; ++i) {
      for (int k = 1; k <= i; ++k) ++alpha, opening += i > k;
      for (int j = i + 1; j <= n; ++j) {
        ++pairs;
        for (int k = 1; k <= i; ++k) ++triples;
      }
    }
    EXPECT_EQ(alpha, (n * n + n) / 2);
    EXPECT_EQ(pairs, (n * n - n) / 2);
    EXPECT_EQ(m.count(VarType::kBinary), alpha + 4 * pairs) << n;
    EXPECT_EQ(m.count(VarType::kInteger), 2 * n);
    EXPECT_EQ(m.count(ConstraintFamily::kAssignment), n);
    EXPECT_EQ(m.count(ConstraintFamily::kBinOpening), opening);
    EXPECT_EQ(m.count(ConstraintFamily::kDirection), pairs);
    EXPECT_EQ(m.count(ConstraintFamily::kLeftOf), triples);
    EXPECT_EQ(m.count(ConstraintFamily::kBelow), triples);
  }
}

TEST(BuildModel, CoordinateBounds) {
  const Instance f = figure1();
  const IlpModel m = build_model(f);
  for (const Item& it : f.items) {
    EXPECT_EQ(m.variables()[m.x(it.id)].upper, f.bin_width - it.width);
    EXPECT_EQ(m.variables()[m.y(it.id)].upper, f.bin_height - it.height);
    EXPECT_EQ(m.variables()[m.x(it.id)].lower, 0);
  }
}

TEST(BuildModel, RejectsEmptyInstance) {
  EXPECT_THROW(build_model(make_instance(5, 5, {})), std::invalid_argument);
}

TEST(ExportLp, SingleItem) {
  const std::string text = export_lp(build_model(make_instance(5, 5, {{2, 3}})));
  const LpFile lp = parse_lp(text);
  EXPECT_TRUE(lp.ended);
  EXPECT_EQ(lp.objective, (std::map<std::string, int64_t>{{"alpha_1_1", 1}}));
  ASSERT_EQ(lp.rows.size(), 1u);
  EXPECT_EQ(lp.rows[0].sense, "=");
  EXPECT_EQ(lp.rows[0].rhs, 1);
  EXPECT_EQ(lp.binaries, (std::vector<std::string>{"alpha_1_1"}));
  EXPECT_EQ(lp.generals, (std::vector<std::string>{"x_1", "y_1"}));
  EXPECT_EQ(lp.bounds.at("x_1"), (std::pair<int64_t, int64_t>{0, 3}));
  EXPECT_EQ(lp.bounds.at("y_1"), (std::pair<int64_t, int64_t>{0, 2}));
}

TEST(ExportLp, Figure1ParsesWithExpectedStructure) {
  const LpFile lp = parse_lp(export_lp(build_model(figure1())));
  EXPECT_TRUE(lp.ended);
  EXPECT_EQ(lp.binaries.size() + lp.generals.size(), 93u);
  EXPECT_EQ(count_var_prefix(lp.binaries, "alpha_"), 21);
  EXPECT_EQ(lp.generals.size(), 12u);
  int direction = 0;
  for (const char* p : {"ul_", "ua_", "ur_", "uu_"}) {
    direction += count_var_prefix(lp.binaries, p);
  }
  EXPECT_EQ(direction, 60);
  EXPECT_EQ(count_prefix(lp, "assign_"), 6);
  EXPECT_EQ(count_prefix(lp, "open_"), 15);
  EXPECT_EQ(count_prefix(lp, "dir_"), 15);
  EXPECT_EQ(count_prefix(lp, "left_"), 35);
  EXPECT_EQ(count_prefix(lp, "above_"), 35);
  EXPECT_EQ(count_prefix(lp, "right_"), 35);
  EXPECT_EQ(count_prefix(lp, "below_"), 35);
  EXPECT_EQ(lp.objective.size(), 6u);
}

TEST(ExportLp, LinesStayShort) {
  std::vector<std::pair<int, int>> dims(10, {3, 4});
  std::istringstream in(export_lp(build_model(make_instance(20, 20, dims))));
  std::string line;
  while (std::getline(in, line)) EXPECT_LE(line.size(), 255u);
}

TEST(ExportLp, Deterministic) {
  const IlpModel m = build_model(figure1());
  EXPECT_EQ(export_lp(m, "a"), export_lp(m, "a"));
  EXPECT_EQ(export_lp(build_model(figure1()), "a"), export_lp(m, "a"));
}

TEST(ExportLp, MissingDirectoryNamesPath) {
  const std::filesystem::path bad = "/nonexistent-dir-bp2d/model.lp";
  try {
    export_lp_file(build_model(figure1()), bad);
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find(bad.string()), std::string::npos);
  }
}

TEST(Assignment, Figure1PackingSatisfiesEveryRow) {
  const Instance f = figure1();
  const PackingSolution s = pack(f, preprocess_sort(f));
  const IlpModel m = build_model(f);

  const LpFile lp = parse_lp(export_lp(m));
  const auto by_name = assignment_by_name(f, s);
  EXPECT_TRUE(violated(lp, by_name).empty());
  int64_t objective = 0;
  for (const auto& [name, c] : lp.objective) objective += c * by_name.at(name);
  EXPECT_EQ(objective, 1);

  const std::vector<int64_t> values = assignment_from_solution(m, f, s);
  EXPECT_TRUE(violated_constraints(m, values).empty());
  EXPECT_EQ(objective_value(m, values), 1);
  for (size_t k = 0; k < values.size(); ++k) {
    EXPECT_EQ(values[k], by_name.at(m.variables()[k].name)) << m.variables()[k].name;
  }
}

TEST(Assignment, RandomPackingsAreFeasible) {
  RandomStream rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance instance =
        testing::random_instance(rng, rng.uniform_int(1, 9), 8, 8);
    const PackingSolution s = pack(instance, preprocess_sort(instance));
    const LpFile lp = parse_lp(export_lp(build_model(instance)));
    const auto v = assignment_by_name(instance, s);
    EXPECT_TRUE(violated(lp, v).empty()) << "trial " << trial;
    int64_t objective = 0;
    for (const auto& [name, c] : lp.objective) objective += c * v.at(name);
    EXPECT_EQ(objective, s.bins_used);
  }
}

TEST(Assignment, OverlapIsDetected) {
  const Instance f = figure1();
  PackingSolution s = pack(f, preprocess_sort(f));
  s.placements.back().x = 0;
  s.placements.back().y = 0;  // onto the 3x3 item
  const LpFile lp = parse_lp(export_lp(build_model(f)));
  EXPECT_FALSE(violated(lp, assignment_by_name(f, s)).empty());
  const IlpModel m = build_model(f);
  EXPECT_FALSE(violated_constraints(m, assignment_from_solution(m, f, s)).empty());
}

}  // namespace
}  // namespace bp2d
