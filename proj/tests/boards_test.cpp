#include "ellrook/boards.hpp"

#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"

namespace ellrook {
namespace {

using testing::Sampler;

TEST(Boards, Staircases) {
  EXPECT_EQ(staircase(1).heights(), (std::vector<long>{0}));
  EXPECT_EQ(staircase(3).heights(), (std::vector<long>{0, 1, 2}));
  EXPECT_EQ(truncated_staircase(4, 2).heights(), (std::vector<long>{0, 0, 2, 3}));
  EXPECT_EQ(truncated_staircase(3, 3).heights(), (std::vector<long>{0, 0, 0}));
  for (long n = 1; n <= 6; ++n) {
    EXPECT_EQ(truncated_staircase(n, 1), staircase(n));
    EXPECT_EQ(staircase(n).cell_count(), n * (n - 1) / 2);
  }
  EXPECT_THROW(staircase(0), DomainError);
  EXPECT_THROW(truncated_staircase(3, 4), DomainError);
  EXPECT_THROW(truncated_staircase(3, 0), DomainError);
}

TEST(Boards, AbelBoards) {
  EXPECT_EQ(abel_board(1, 2).heights(), (std::vector<long>{0}));
  EXPECT_EQ(abel_board(3, 1).heights(), (std::vector<long>{0, 3, 3}));
  EXPECT_EQ(abel_board(2, 2).heights(), (std::vector<long>{0, 4}));
  for (long n = 1; n <= 5; ++n) {
    for (long c = 1; c <= 3; ++c) EXPECT_EQ(abel_board(n, c).cell_count(), c * n * (n - 1));
  }
  EXPECT_THROW(abel_board(0, 1), DomainError);
  EXPECT_THROW(abel_board(2, 0), DomainError);
}

TEST(Boards, SkylineCells) {
  SkylineBoard b(std::vector<long>{1});
  EXPECT_EQ(b.cells(), (std::vector<SkylineCell>{{1, 1}}));
  SkylineBoard c(std::vector<long>{2, 0, 1});
  EXPECT_EQ(c.cells(), (std::vector<SkylineCell>{{1, 1}, {1, 2}, {3, 1}}));
  EXPECT_TRUE(c.contains({3, 1}));
  EXPECT_FALSE(c.contains({2, 1}));
  EXPECT_THROW(SkylineBoard(std::vector<long>{1, -1}), InvalidBoard);
}

TEST(Boards, FerrersRejectsDecrease) {
  EXPECT_NO_THROW(FerrersBoard(std::vector<long>{0, 0, 2, 2}));
  EXPECT_THROW(FerrersBoard(std::vector<long>{1, 0}), InvalidBoard);
  Sampler s(31);
  for (int i = 0; i < 300; ++i) {
    std::vector<long> h(static_cast<size_t>(s.integer(1, 6)));
    for (auto& x : h) x = s.integer(-1, 5);
    const bool negative = std::any_of(h.begin(), h.end(), [](long x) { return x < 0; });
    const bool sorted = std::is_sorted(h.begin(), h.end());
    if (negative || !sorted) {
      EXPECT_THROW(FerrersBoard{h}, InvalidBoard);
    } else {
      EXPECT_NO_THROW(FerrersBoard{h});
    }
  }
}

TEST(Boards, LVectorPrefixSums) {
  LVector l(std::vector<long>{2, 1, 3});
  EXPECT_EQ(l.prefix(0), 0);
  EXPECT_EQ(l.prefix(2), 3);
  EXPECT_EQ(l.total(), 6);
  EXPECT_EQ(l.truncated().entries(), (std::vector<long>{2, 1}));
  EXPECT_THROW(LVector(std::vector<long>{1, 0}), InvalidBoard);
}

TEST(Boards, FullLShifted) {
  EXPECT_EQ(full_lshifted(LVector::ones(3)).rowlens(), (std::vector<long>{3, 2, 1}));
  EXPECT_EQ(full_lshifted(LVector(std::vector<long>{2})).rowlens(), (std::vector<long>{2}));
  EXPECT_EQ(full_lshifted(LVector(std::vector<long>{1, 2})).rowlens(), (std::vector<long>{3, 1}));
  for (long n = 1; n <= 7; ++n) {
    EXPECT_EQ(full_lshifted(LVector::ones(n)).cell_count(), n * (n + 1) / 2);
  }
}

TEST(Boards, FullShiftedCellsAreAllEdges) {
  const LShiftedBoard b4 = full_lshifted(LVector::ones(3));
  const std::vector<ShiftedCell> expect{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  EXPECT_EQ(b4.cells(), expect);
  EXPECT_EQ(b4.vertex_count(), 4);
}

TEST(Boards, LazyGraphRowLabels) {
  // l = (1,2): rows start at vertices 1 and 3; edges (1,2),(1,3),(1,4),(3,4)
  const LShiftedBoard b = full_lshifted(LVector(std::vector<long>{1, 2}));
  EXPECT_EQ(b.row_label(1), 1);
  EXPECT_EQ(b.row_label(2), 3);
  const std::vector<ShiftedCell> expect{{1, 2}, {1, 3}, {1, 4}, {3, 4}};
  EXPECT_EQ(b.cells(), expect);
}

TEST(Boards, ShiftedValidationMatchesStrictDecrease) {
  Sampler s(32);
  for (int i = 0; i < 500; ++i) {
    const long n = s.integer(1, 6);
    std::vector<long> a(static_cast<size_t>(n));
    for (auto& x : a) x = s.integer(0, n);
    bool ok = a[0] <= n;
    for (long t = 0; t + 1 < n; ++t) {
      const long x = a[static_cast<size_t>(t)], y = a[static_cast<size_t>(t + 1)];
      if (y > x) ok = false;
      if (y > 0 && x == y) ok = false;
    }
    if (ok) {
      EXPECT_NO_THROW(shifted_board(a));
    } else {
      EXPECT_THROW(shifted_board(a), InvalidBoard);
    }
  }
}

TEST(Boards, LShiftedGapCondition) {
  // consecutive nonzero rows must differ by at least l_{N+1-i}
  const LVector l(std::vector<long>{1, 2});
  EXPECT_NO_THROW(LShiftedBoard(l, {3, 1}));
  EXPECT_NO_THROW(LShiftedBoard(l, {1, 0}));
  EXPECT_THROW(LShiftedBoard(l, {2, 1}), InvalidBoard);
  EXPECT_THROW(LShiftedBoard(l, {4, 1}), InvalidBoard);
  EXPECT_THROW(LShiftedBoard(l, {3}), InvalidBoard);
}

TEST(Boards, WeightCoordinates) {
  const LShiftedBoard b4 = full_lshifted(LVector::ones(3));
  // top-left cell is in the top row, i.e. w-row 3; its column 2 is the
  // second from the left of 4 labels 2..4, w-column 3
  EXPECT_EQ(b4.to_weight_coords({1, 2}), (WeightCell{3, 3}));
  // bottom-right cell (3,4) sits in w-row 1, w-column 1
  EXPECT_EQ(b4.to_weight_coords({3, 4}), (WeightCell{1, 1}));
  EXPECT_THROW(b4.to_weight_coords({2, 2}), BoundsError);
  EXPECT_THROW(b4.from_weight_coords({1, 2}), BoundsError);
  for (const auto& l : std::vector<std::vector<long>>{{1, 1, 1}, {2, 1}, {1, 3, 2}, {3}}) {
    const LShiftedBoard b = full_lshifted(LVector(l));
    std::set<WeightCell> seen;
    for (const ShiftedCell& c : b.cells()) {
      const WeightCell w = b.to_weight_coords(c);
      EXPECT_EQ(b.from_weight_coords(w), c);
      // w-row i spans w-columns 1..L_i
      EXPECT_GE(w.col, 1);
      EXPECT_LE(w.col, b.lvec().prefix(w.row));
      seen.insert(w);
    }
    EXPECT_EQ(static_cast<long>(seen.size()), b.cell_count());
  }
}

TEST(Boards, ParseLiterals) {
  EXPECT_EQ(std::get<FerrersBoard>(parse_board("0,1,2")), staircase(3));
  EXPECT_EQ(std::get<FerrersBoard>(parse_board("")).columns(), 0);
  EXPECT_EQ(std::get<LShiftedBoard>(parse_board("l=1,1,1;a=3,2,1")), full_lshifted(LVector::ones(3)));
  EXPECT_EQ(std::get<LShiftedBoard>(parse_board("l=2,1")).rowlens(), (std::vector<long>{3, 2}));
  EXPECT_EQ(std::get<LShiftedBoard>(parse_board("full-B4")), full_lshifted(LVector::ones(3)));
  EXPECT_EQ(std::get<LShiftedBoard>(parse_board("l=1,1,1;a=2,1,0")).cell_count(), 3);
  EXPECT_THROW(parse_board("0,x"), InvalidBoard);
  EXPECT_THROW(parse_board("2,1"), InvalidBoard);
  EXPECT_THROW(parse_board("l=1,1;b=1"), InvalidBoard);
  EXPECT_THROW(parse_board("full-B"), InvalidBoard);
  EXPECT_THROW(parse_board("l=1,1;a=2,2"), InvalidBoard);
  for (const char* text : {"0,1,2", "l=2,1;a=3,1", "l=1,1,1;a=3,2,1"}) {
    EXPECT_EQ(format_board(parse_board(text)), text);
  }
}

}  // namespace
}  // namespace ellrook
