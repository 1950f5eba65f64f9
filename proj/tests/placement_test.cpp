#include "ferrers/placement.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

namespace ferrers {
namespace {

oracle::Cells as_cells(const FilePlacement& p) {
  oracle::Cells out;
  for (const Cell& c : p.cells()) out.emplace_back(c.column, c.row);
  return out;
}

// A full rook placement on the 4x4 board.
FilePlacement square_placement() {
  return parse_placement(FerrersBoard::from_heights({4, 4, 4, 4}), "1:4;2:2;3:1;4:3");
}

// A file placement on (2,2,4,4,4,4).
FilePlacement file_figure_placement() {
  return parse_placement(FerrersBoard::from_heights({2, 2, 4, 4, 4, 4}), "1:2;3:4;4:2;5:4;6:4");
}

TEST(Placement, TextRoundTripAndValidation) {
  const auto board = FerrersBoard::from_heights({1, 2, 2});
  const auto p = parse_placement(board, "1:1;3:2");
  EXPECT_EQ(p.to_string(), "1:1;3:2");
  EXPECT_EQ(p.rook_count(), 2);
  EXPECT_EQ(p.row_in(2), 0);
  EXPECT_EQ(parse_placement(board, "").rook_count(), 0);
  EXPECT_THROW(parse_placement(board, "1:2"), ValidationError);   // off the board
  EXPECT_THROW(parse_placement(board, "2:1;1:1"), ValidationError);  // unsorted
  EXPECT_THROW(parse_placement(board, "1:1;1:1"), ValidationError);
  EXPECT_THROW(parse_placement(board, "1-1"), ValidationError);
}

TEST(Placement, EqualityIgnoresBoard) {
  const auto a = parse_placement(FerrersBoard::from_heights({1, 2}), "2:2");
  const auto b = parse_placement(FerrersBoard::from_heights({2, 2, 5}), "2:2");
  EXPECT_EQ(a, b);
  EXPECT_EQ(PlacementHash{}(a), PlacementHash{}(b));
}

TEST(Placement, RowCountsOfFileFigure) {
  const auto counts = file_figure_placement().row_counts();
  EXPECT_EQ(counts, (std::vector<int>{0, 2, 0, 3}));
}

TEST(Placement, EnumerateFilePlacementsSmall) {
  const auto board = FerrersBoard::from_heights({1, 2});
  const auto two = file_placements(board, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].to_string(), "1:1;2:1");
  EXPECT_EQ(two[1].to_string(), "1:1;2:2");

  const auto one = file_placements(board, 1);
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one[0].to_string(), "1:1");
  EXPECT_EQ(one[1].to_string(), "2:1");
  EXPECT_EQ(one[2].to_string(), "2:2");

  EXPECT_TRUE(file_placements(board, 3).empty());
  EXPECT_TRUE(file_placements(board, -1).empty());
}

TEST(Placement, ZeroRooksGivesOneEmptyPlacement) {
  for (const auto& h : oracle::boards_up_to(3, 3)) {
    const auto board = oracle::to_board(h);
    const auto all = file_placements(board, 0);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_TRUE(all[0].empty());
    EXPECT_EQ(m_level_rook_placements(board, 2, 0).size(), 1u);
    EXPECT_EQ(rook_number(board, 3, 0), 1);
  }
}

TEST(Placement, SquareBoardHasFactorialFullPlacements) {
  const auto sq = FerrersBoard::from_heights({4, 4, 4, 4});
  EXPECT_EQ(m_level_rook_placements(sq, 1, 4).size(), 24u);
  EXPECT_EQ(rook_number(sq, 1, 4), 24);
}

TEST(Placement, NoTwoLevelPlacementWhenColumnsShareOneLevel) {
  const auto board = FerrersBoard::from_heights({1, 2});
  EXPECT_TRUE(m_level_rook_placements(board, 2, 2).empty());
  EXPECT_EQ(rook_number(board, 2, 2), 0);
}

TEST(Placement, LevelRookPredicate) {
  // Rows 4 of columns 3, 5 and 6 share level 2 when m = 3.
  EXPECT_FALSE(is_m_level_rook_placement(file_figure_placement(), 3));
  EXPECT_TRUE(is_m_level_rook_placement(FilePlacement(FerrersBoard::from_heights({3, 3})), 4));
  EXPECT_TRUE(is_m_level_rook_placement(square_placement(), 1));
  EXPECT_TRUE(is_rook_placement(square_placement()));
  EXPECT_FALSE(is_m_level_rook_placement(square_placement(), 2));
}

TEST(Placement, KindParsing) {
  EXPECT_EQ(parse_placement_kind("mlevel"), PlacementKind::MLevelRook);
  EXPECT_EQ(to_string(PlacementKind::Rook), "rook");
  EXPECT_THROW(parse_placement_kind("queen"), ValidationError);
}

TEST(PlacementProperty, CountsMatchSubsetProducts) {
  for (const auto& h : oracle::boards_up_to(5, 6)) {
    const auto board = oracle::to_board(h);
    for (int k = 0; k <= board.columns(); ++k) {
      ASSERT_EQ(file_placement_count(board, k), oracle::subset_product_sum(h, k))
          << board.to_string() << " k=" << k;
    }
  }
}

TEST(PlacementProperty, FileEnumerationMatchesOdometerInOrder) {
  for (const auto& h : oracle::boards_up_to(4, 4)) {
    const auto board = oracle::to_board(h);
    for (int k = 0; k <= board.columns(); ++k) {
      std::vector<oracle::Cells> got;
      for_each_file_placement(board, k, [&](const FilePlacement& p) { got.push_back(as_cells(p)); });
      ASSERT_EQ(got, oracle::file_placements(h, k)) << board.to_string() << " k=" << k;
    }
  }
}

TEST(PlacementProperty, LevelEnumerationIsTheFilteredFileEnumeration) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& h : oracle::boards_up_to(4, 5)) {
      const auto board = oracle::to_board(h);
      for (int k = 0; k <= board.columns(); ++k) {
        std::vector<oracle::Cells> got;
        for_each_m_level_rook_placement(board, m, k, [&](const FilePlacement& p) {
          EXPECT_TRUE(is_m_level_rook_placement(p, m));
          got.push_back(as_cells(p));
        });
        std::vector<oracle::Cells> expected;
        for (const auto& cells : oracle::file_placements(h, k)) {
          if (oracle::distinct_levels(cells, m)) expected.push_back(cells);
        }
        ASSERT_EQ(got, expected) << board.to_string() << " m=" << m << " k=" << k;
      }
    }
  }
}

TEST(PlacementProperty, OneLevelRooksAreClassicalRooks) {
  for (const auto& h : oracle::boards_up_to(4, 5)) {
    const auto board = oracle::to_board(h);
    const auto classical = oracle::classical_rook_numbers(h);
    for (int k = 0; k <= board.columns(); ++k) {
      ASSERT_EQ(rook_number(board, 1, k), classical[static_cast<std::size_t>(k)]);
    }
  }
}

TEST(PlacementProperty, RookNumbersVanishPastColumnsOrLevels) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& h : oracle::boards_up_to(4, 6)) {
      const auto board = oracle::to_board(h);
      int nonempty = 0;
      for (int b : h) nonempty += b > 0 ? 1 : 0;
      const int levels = (board.max_height() + m - 1) / m;
      for (int k = 0; k <= board.columns(); ++k) {
        if (k > nonempty || k > levels) ASSERT_EQ(rook_number(board, m, k), 0);
      }
    }
  }
}

}  // namespace
}  // namespace ferrers
