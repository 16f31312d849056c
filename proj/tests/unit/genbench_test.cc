#include "bp2d/genbench.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <set>

#include "bp2d/lgfi.h"
#include "test_support.h"

namespace bp2d {
namespace {

using testing::figure1;

TEST(ClassLabels, RoundTrip) {
  for (ClassId id = 1; id <= kClassCount; ++id) {
    EXPECT_EQ(parse_class(class_label(id)), id);
    EXPECT_EQ(parse_class(std::to_string(id)), id);
  }
  EXPECT_EQ(parse_class("viii"), 8);
  EXPECT_THROW(parse_class("XI"), std::invalid_argument);
  EXPECT_THROW(class_label(0), std::invalid_argument);
}

TEST(ClassSpec, UniformClasses) {
  const int dim_hi[] = {10, 10, 35, 35, 100, 100};
  const int bin[] = {10, 30, 40, 100, 100, 300};
  for (ClassId id = 1; id <= 6; ++id) {
    const ClassSpec s = class_spec(id);
    EXPECT_FALSE(s.typed);
    EXPECT_EQ(s.bin_width, bin[id - 1]);
    EXPECT_EQ(s.bin_height, bin[id - 1]);
    EXPECT_EQ(s.width, (IntRange{1, dim_hi[id - 1]}));
    EXPECT_EQ(s.height, (IntRange{1, dim_hi[id - 1]}));
  }
}

TEST(ClassSpec, TypedClasses) {
  for (ClassId id = 7; id <= 10; ++id) {
    const ClassSpec s = class_spec(id);
    EXPECT_TRUE(s.typed);
    EXPECT_EQ(s.bin_width, 100);
    double total = 0.0;
    for (int t = 0; t < 4; ++t) {
      EXPECT_DOUBLE_EQ(s.type_mix[t], t == id - 7 ? 0.7 : 0.1);
      total += s.type_mix[t];
    }
    EXPECT_DOUBLE_EQ(total, 1.0);
  }
}

TEST(ItemTypes, RangesFor100) {
  EXPECT_EQ(item_type_range(1, 100, 100).width, (IntRange{67, 100}));
  EXPECT_EQ(item_type_range(1, 100, 100).height, (IntRange{1, 50}));
  EXPECT_EQ(item_type_range(2, 100, 100).width, (IntRange{1, 50}));
  EXPECT_EQ(item_type_range(2, 100, 100).height, (IntRange{67, 100}));
  EXPECT_EQ(item_type_range(3, 100, 100).width, (IntRange{50, 100}));
  EXPECT_EQ(item_type_range(3, 100, 100).height, (IntRange{50, 100}));
  EXPECT_EQ(item_type_range(4, 100, 100).width, (IntRange{1, 50}));
  EXPECT_EQ(item_type_range(4, 100, 100).height, (IntRange{1, 50}));
}

TEST(ItemTypes, FractionalBoundsRoundInwards) {
  EXPECT_EQ(item_type_range(1, 10, 7).width, (IntRange{7, 10}));  // 20/3
  EXPECT_EQ(item_type_range(1, 10, 7).height, (IntRange{1, 3}));  // 7/2
  EXPECT_EQ(item_type_range(3, 10, 7).height, (IntRange{4, 7}));
}

TEST(Generate, DimensionsStayInRange) {
  RandomStream rng(51);
  for (ClassId id = 1; id <= kClassCount; ++id) {
    const ClassSpec s = class_spec(id);
    int lo_w = 1 << 30, hi_w = 0;
    for (int rep = 0; rep < 100; ++rep) {
      const Instance instance = generate_instance(id, 1000, rng);
      ASSERT_TRUE(validate_instance(instance).ok());
      EXPECT_EQ(instance.bin_width, s.bin_width);
      for (const Item& it : instance.items) {
        lo_w = std::min(lo_w, it.width);
        hi_w = std::max(hi_w, it.width);
        if (!s.typed) {
          ASSERT_GE(it.width, s.width.lo);
          ASSERT_LE(it.width, s.width.hi);
          ASSERT_GE(it.height, s.height.lo);
          ASSERT_LE(it.height, s.height.hi);
        } else {
          ASSERT_GE(it.width, 1);
          ASSERT_LE(it.width, 100);
          ASSERT_LE(it.height, 100);
        }
      }
    }
    // 10^5 draws reach both endpoints.
    EXPECT_EQ(lo_w, 1) << "class " << id;
    EXPECT_EQ(hi_w, s.typed ? 100 : s.width.hi) << "class " << id;
  }
}

// Classify items by type; types 3/4 overlap types 1/2 only on the
// boundaries, so the check uses the unambiguous cells.
int infer_type(const Item& it) {
  if (it.width >= 67 && it.height <= 49) return 1;
  if (it.width <= 49 && it.height >= 67) return 2;
  if (it.width >= 51 && it.height >= 51) return 3;
  if (it.width <= 49 && it.height <= 49) return 4;
  return 0;
}

TEST(Generate, TypeMixMatchesWithinThreeSigma) {
  RandomStream rng(52);
  for (ClassId id = 7; id <= 10; ++id) {
    const ClassSpec s = class_spec(id);
    const Instance instance = generate_instance(id, 10000, rng);
    std::array<int, 5> seen{};
    for (const Item& it : instance.items) ++seen[infer_type(it)];
    // Probability that an item of type t lands in its unambiguous cell.
    const double keep[] = {49.0 / 50, 49.0 / 50, 50.0 / 51 * 50 / 51,
                           49.0 / 50 * 49 / 50};
    double chi2 = 0.0;
    for (int t = 1; t <= 4; ++t) {
      const double p = s.type_mix[t - 1] * keep[t - 1];
      const double mean = 10000 * p;
      const double sd = std::sqrt(10000 * p * (1 - p));
      EXPECT_NEAR(seen[t], mean, 3 * sd) << "class " << id << " type " << t;
      chi2 += (seen[t] - mean) * (seen[t] - mean) / mean;
    }
    // 4 cells plus the ambiguous remainder; chi-square 99.9% point for 4
    // degrees of freedom is 18.47.
    double p_rest = 1.0;
    for (int t = 1; t <= 4; ++t) p_rest -= s.type_mix[t - 1] * keep[t - 1];
    const double mean_rest = 10000 * p_rest;
    chi2 += (seen[0] - mean_rest) * (seen[0] - mean_rest) / mean_rest;
    EXPECT_LT(chi2, 18.47) << "class " << id;
  }
}

TEST(Suite, SizeNamesAndDeterminism) {
  const std::vector<Instance> a = generate_suite(7);
  const std::vector<Instance> b = generate_suite(7);
  ASSERT_EQ(a.size(), 500u);
  EXPECT_EQ(a, b);
  std::set<std::string> names;
  int class9 = 0;
  for (const Instance& i : a) {
    names.insert(i.name);
    class9 += i.name.rfind("c09_", 0) == 0;
    ASSERT_TRUE(validate_instance(i).ok());
  }
  EXPECT_EQ(names.size(), 500u);
  EXPECT_EQ(class9, 50);
  EXPECT_EQ(generate_suite_instance(7, 9, 60, 4), a[8 * 50 + 2 * 10 + 3]);
  EXPECT_EQ(a[0].name, "c01_n020_r01");
  EXPECT_NE(generate_suite(8)[0], a[0]);
}

TEST(InstanceText, ReadsFigure1) {
  const Instance i = read_instance("6\n6 6\n3 3\n2 4\n3 2\n1 4\n2 2\n2 1\n", "f");
  Instance expected = figure1();
  expected.name = "f";
  EXPECT_EQ(i, expected);
}

TEST(InstanceText, CommentsAndName) {
  const Instance i =
      read_instance("# name: demo\n# anything\n2\n  5 5\n# mid\n1 2\n3 4\n");
  EXPECT_EQ(i.name, "demo");
  EXPECT_EQ(i.size(), 2);
  EXPECT_EQ(i.items[1], (Item{2, 3, 4}));
}

TEST(InstanceText, CountMismatch) {
  try {
    read_instance("5\n6 6\n1 1\n1 1\n1 1\n1 1\n1 1\n1 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("count mismatch"), std::string::npos);
  }
  EXPECT_THROW(read_instance("3\n6 6\n1 1\n"), ParseError);
}

TEST(InstanceText, ErrorsCarryLineNumbers) {
  try {
    read_instance("2\n6 6\n1 1\n1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
  EXPECT_THROW(read_instance(""), ParseError);
  EXPECT_THROW(read_instance("2\n6\n"), ParseError);
}

TEST(InstanceText, RoundTrip) {
  RandomStream rng(53);
  for (ClassId id = 1; id <= kClassCount; ++id) {
    const Instance i = generate_instance(id, 37, rng, "x" + std::to_string(id));
    EXPECT_EQ(read_instance(write_instance(i)), i);
  }
}

TEST(SolutionText, RoundTripRevalidates) {
  RandomStream rng(54);
  for (ClassId id = 1; id <= kClassCount; ++id) {
    const Instance i = generate_instance(id, 40, rng);
    const PackingSolution s = pack(i, preprocess_sort(i));
    const PackingSolution back = read_solution(write_solution(i, s), i);
    EXPECT_TRUE(validate_solution(i, back).ok());
    EXPECT_EQ(back.bins_used, s.bins_used);
    EXPECT_EQ(back.last_bin_load, s.last_bin_load);
    EXPECT_EQ(back.wastage, s.wastage);
  }
}

TEST(SolutionText, RejectsUnknownItem) {
  EXPECT_THROW(read_solution("9 0 0 0\n", figure1()), ParseError);
}

TEST(Legacy, ImportsClassicLayout) {
  const std::string text =
      "    1           PROBLEM CLASS\n"
      "   3           N\n"
      "  12           RELATIVE AND ABSOLUTE N. OF INSTANCE\n"
      " 10  10        HBIN,WBIN\n"
      "  2   5        H(I),W(I),I=1,...,N\n"
      "  7   1\n"
      "  3   3\n"
      "    9           PROBLEM CLASS\n"
      "   1           N\n"
      "   4           RELATIVE AND ABSOLUTE N. OF INSTANCE\n"
      " 100 100       HBIN,WBIN\n"
      "  40  60\n";
  const std::vector<Instance> all = import_legacy(text);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].name, "c01_n003_r02");
  EXPECT_EQ(all[0].items[0], (Item{1, 5, 2}));
  EXPECT_EQ(all[0].items[1], (Item{2, 1, 7}));
  EXPECT_EQ(all[1].name, "c09_n001_r04");
  EXPECT_EQ(all[1].items[0], (Item{1, 60, 40}));
  EXPECT_THROW(import_legacy("1\n2\n1\n10 10\n1 1\n"), ParseError);
}

TEST(Files, ReadErrorNamesPath) {
  try {
    read_text_file("/definitely/not/here.txt");
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/definitely/not/here.txt"),
              std::string::npos);
  }
}

}  // namespace
}  // namespace bp2d
