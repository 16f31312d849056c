#include "bp2d/skyline.h"

#include <gtest/gtest.h>

#include <vector>

#include "bp2d/random.h"

namespace bp2d {
namespace {

using Segs = std::vector<Segment>;

Segs segments_of(const Skyline& s) {
  return Segs(s.segments().begin(), s.segments().end());
}

void expect_canonical(const Skyline& s) {
  const auto segs = s.segments();
  ASSERT_FALSE(segs.empty());
  EXPECT_EQ(segs.front().x_begin, 0);
  EXPECT_EQ(segs.back().x_end, s.bin_width());
  for (size_t i = 0; i < segs.size(); ++i) {
    EXPECT_GT(segs[i].width(), 0);
    EXPECT_GE(segs[i].height, 0);
    EXPECT_LE(segs[i].height, s.bin_height());
    if (i > 0) {
      EXPECT_EQ(segs[i].x_begin, segs[i - 1].x_end);
      EXPECT_NE(segs[i].height, segs[i - 1].height);
    }
  }
}

TEST(Skyline, NewBinIsOneSegment) {
  EXPECT_EQ(segments_of(Skyline(6, 6)), (Segs{{0, 6, 0}}));
  EXPECT_EQ(segments_of(Skyline(10, 10)), (Segs{{0, 10, 0}}));
  EXPECT_EQ(segments_of(Skyline(1, 1)), (Segs{{0, 1, 0}}));
}

TEST(Skyline, RejectsBadDimensions) {
  EXPECT_THROW(Skyline(0, 5), std::invalid_argument);
  EXPECT_THROW(Skyline(5, -1), std::invalid_argument);
}

TEST(Skyline, FromSegmentsValidates) {
  EXPECT_THROW(Skyline::from_segments(6, 6, {{0, 3, 1}, {3, 5, 2}}),
               std::invalid_argument);
  EXPECT_THROW(Skyline::from_segments(6, 6, {{0, 3, 1}, {3, 6, 1}}),
               std::invalid_argument);
  EXPECT_THROW(Skyline::from_segments(6, 6, {{0, 6, 7}}), std::invalid_argument);
}

TEST(Skyline, CurrentPositionNarrowGap) {
  const Skyline s = Skyline::from_segments(6, 6, {{0, 3, 3}, {3, 5, 6}, {5, 6, 2}});
  EXPECT_EQ(s.current_position(), (GapInfo{5, 2, 1, 4, true}));
}

TEST(Skyline, CurrentPositionTieIsHorizontal) {
  const Skyline s = Skyline::from_segments(6, 6, {{0, 3, 3}, {3, 6, 6}});
  const GapInfo g = *s.current_position();
  EXPECT_EQ(g, (GapInfo{0, 3, 3, 3, true}));
  EXPECT_EQ(g.current_gap(), 3);
}

TEST(Skyline, VerticalGapCurrent) {
  const Skyline s = Skyline::from_segments(6, 6, {{0, 6, 4}});
  const GapInfo g = *s.current_position();
  EXPECT_FALSE(g.horizontal_is_current);
  EXPECT_EQ(g.current_gap(), 2);
}

TEST(Skyline, FullBin) {
  const Skyline s = Skyline::from_segments(6, 6, {{0, 6, 6}});
  EXPECT_FALSE(s.current_position().has_value());
  EXPECT_TRUE(s.full());
}

TEST(Skyline, PlaceFirstItem) {
  Skyline s(6, 6);
  s.place_at_current(3, 3);
  EXPECT_EQ(segments_of(s), (Segs{{0, 3, 3}, {3, 6, 0}}));
}

TEST(Skyline, PlaceMergesWithNeighbour) {
  Skyline s = Skyline::from_segments(6, 6, {{0, 3, 3}, {3, 5, 6}, {5, 6, 2}});
  s.place_at_current(1, 4);
  EXPECT_EQ(segments_of(s), (Segs{{0, 3, 3}, {3, 6, 6}}));
}

TEST(Skyline, PlaceExactFill) {
  Skyline s(1, 1);
  s.place_at_current(1, 1);
  EXPECT_EQ(segments_of(s), (Segs{{0, 1, 1}}));
  EXPECT_TRUE(s.full());
}

TEST(Skyline, PlaceRejectsNonFitting) {
  Skyline s = Skyline::from_segments(6, 6, {{0, 3, 3}, {3, 5, 6}, {5, 6, 2}});
  EXPECT_THROW(s.place_at_current(2, 1), ContractViolation);
  EXPECT_THROW(s.place_at_current(1, 5), ContractViolation);
}

TEST(Skyline, WastageBetweenNeighbours) {
  Skyline s = Skyline::from_segments(6, 6, {{0, 2, 5}, {2, 3, 3}, {3, 6, 6}});
  EXPECT_EQ(s.declare_wastage(), (Rect{2, 3, 1, 2}));
  EXPECT_EQ(segments_of(s), (Segs{{0, 3, 5}, {3, 6, 6}}));
}

TEST(Skyline, WastageAtLeftBorder) {
  Skyline s = Skyline::from_segments(8, 8, {{0, 4, 2}, {4, 8, 5}});
  EXPECT_EQ(s.declare_wastage(), (Rect{0, 2, 4, 3}));
  EXPECT_EQ(segments_of(s), (Segs{{0, 8, 5}}));
}

TEST(Skyline, WastageWithoutNeighboursFillsBin) {
  Skyline s = Skyline::from_segments(8, 8, {{0, 8, 2}});
  EXPECT_EQ(s.declare_wastage(), (Rect{0, 2, 8, 6}));
  EXPECT_EQ(segments_of(s), (Segs{{0, 8, 8}}));
  EXPECT_TRUE(s.full());
}

TEST(Skyline, WastageOnFullBinIsContractViolation) {
  Skyline s = Skyline::from_segments(6, 6, {{0, 6, 6}});
  EXPECT_THROW(s.declare_wastage(), ContractViolation);
}

// Random operation sequences keep the frontier canonical, account for every
// unit of area, and terminate with a full bin.
TEST(Skyline, RandomOperationsPreserveInvariants) {
  RandomStream rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int W = rng.uniform_int(1, 12);
    const int H = rng.uniform_int(1, 12);
    Skyline s(W, H);
    int64_t raised = 0;
    int steps = 0;
    while (auto g = s.current_position()) {
      ASSERT_LT(++steps, 10 * W * H + 10);
      const int before_min = g->y;
      if (rng.uniform01() < 0.6) {
        const int w = rng.uniform_int(1, g->hgap);
        const int h = rng.uniform_int(1, g->vgap);
        s.place_at_current(w, h);
        raised += int64_t{w} * h;
      } else {
        const Rect r = s.declare_wastage();
        EXPECT_EQ(r.x, g->x);
        EXPECT_EQ(r.y, before_min);
        EXPECT_EQ(r.width, g->hgap);
        EXPECT_GT(r.height, 0);
        raised += r.area();
      }
      expect_canonical(s);
      EXPECT_EQ(s.filled_area(), raised);
      EXPECT_LE(raised, int64_t{W} * H);
    }
    EXPECT_EQ(raised, int64_t{W} * H);
  }
}

}  // namespace
}  // namespace bp2d
