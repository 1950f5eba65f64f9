#include "ferrers/board.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace ferrers {
namespace {

TEST(Board, MakeBoardAcceptsFerrersHeights) {
  const auto board = FerrersBoard::from_heights({1, 1, 2, 4});
  EXPECT_EQ(board.columns(), 4);
  EXPECT_EQ(board.height(4), 4);
  EXPECT_EQ(board.cell_count(), 8);
  EXPECT_EQ(board.to_string(), "1,1,2,4");
  EXPECT_TRUE(board.contains(Cell{4, 4}));
  EXPECT_FALSE(board.contains(Cell{3, 3}));
}

TEST(Board, EmptyBoard) {
  const auto board = parse_board("");
  EXPECT_EQ(board.columns(), 0);
  EXPECT_TRUE(board.empty());
  EXPECT_EQ(board.to_string(), "");
  EXPECT_TRUE(zones(board, 3).empty());
  EXPECT_TRUE(level_numbers(board, 2).empty());
  EXPECT_TRUE(is_singleton(board, 2));
}

TEST(Board, RejectsDecreasingHeightsNamingTheIndex) {
  try {
    FerrersBoard::from_heights({2, 1});
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos) << e.what();
  }
}

TEST(Board, RejectsNegativeAndMalformedInput) {
  EXPECT_THROW(parse_board("1,-1"), ValidationError);
  EXPECT_THROW(parse_board("1,,2"), ValidationError);
  EXPECT_THROW(parse_board("1,a"), ValidationError);
  EXPECT_THROW(parse_board("1,2,"), ValidationError);
  EXPECT_EQ(parse_board(" 1, 2 ,3").to_string(), "1,2,3");
}

TEST(Board, MFloor) {
  EXPECT_EQ(m_floor(7, 3), 6);
  EXPECT_EQ(m_floor(6, 3), 6);
  EXPECT_EQ(m_floor(0, 5), 0);
  EXPECT_THROW(m_floor(4, 0), ValidationError);
}

TEST(Board, LevelOfRow) {
  EXPECT_EQ(level_of_row(1, 2), 1);
  EXPECT_EQ(level_of_row(3, 2), 2);
  EXPECT_EQ(level_of_row(2, 2), 1);
  EXPECT_EQ(level_first_row(2, 3), 4);
  EXPECT_EQ(level_last_row(2, 3), 6);
}

TEST(Board, Zones) {
  const auto z = zones(FerrersBoard::from_heights({1, 1, 2, 4}), 2);
  const std::vector<Zone> expected{{1, 2, 0, 2}, {3, 3, 2, 0}, {4, 4, 4, 0}};
  EXPECT_EQ(z, expected);

  const auto flat = zones(FerrersBoard::from_heights({3, 3, 3}), 3);
  ASSERT_EQ(flat.size(), 1u);
  EXPECT_EQ(flat[0], (Zone{1, 3, 3, 0}));
}

TEST(Board, LevelNumbers) {
  EXPECT_EQ(level_numbers(FerrersBoard::from_heights({1, 1, 2, 4}), 2),
            (std::vector<int>{0, 0, 2, 6}));
  EXPECT_EQ(level_numbers(FerrersBoard::from_heights({1, 3, 4, 4, 4, 4, 4}), 2),
            (std::vector<int>{0, 0, 0, 0, 0, 11, 13}));
  EXPECT_THROW(level_numbers(FerrersBoard::from_heights({5}), 2), ValidationError);
}

TEST(Board, SingletonVerdicts) {
  const auto board = FerrersBoard::from_heights({1, 2, 2, 3});
  EXPECT_FALSE(is_singleton(board, 3));
  EXPECT_TRUE(is_singleton(board, 2));
}

TEST(BoardProperty, ZonesPartitionColumnsAndCarryRemainders) {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& h : oracle::boards_up_to(5, 8)) {
      const auto board = oracle::to_board(h);
      int next = 1;
      for (const Zone& zone : zones(board, m)) {
        ASSERT_EQ(zone.start, next);
        ASSERT_LE(zone.start, zone.end);
        std::int64_t rho = 0;
        for (int i = zone.start; i <= zone.end; ++i) {
          ASSERT_EQ(m_floor(board.height(i), m), zone.floor);
          rho += board.height(i) - zone.floor;
        }
        ASSERT_EQ(rho, zone.remainder);
        if (zone.end < board.columns()) ASSERT_NE(m_floor(board.height(zone.end + 1), m), zone.floor);
        next = zone.end + 1;
      }
      ASSERT_EQ(next, board.columns() + 1);
    }
  }
}

TEST(BoardProperty, LevelNumbersConserveCells) {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& h : oracle::boards_up_to(5, 8)) {
      const auto board = oracle::to_board(h);
      if (!fits_ambient(board, m)) {
        EXPECT_THROW(level_numbers(board, m), ValidationError);
        continue;
      }
      const auto levels = level_numbers(board, m);
      ASSERT_EQ(levels, oracle::level_numbers(h, m)) << board.to_string();
      std::int64_t total = 0;
      for (int l : levels) total += l;
      ASSERT_EQ(total, board.cell_count());
    }
  }
}

TEST(BoardProperty, EveryBoardIsSingletonForMEqualsOne) {
  for (const auto& h : oracle::boards_up_to(5, 8)) {
    ASSERT_TRUE(is_singleton(oracle::to_board(h), 1));
  }
}

TEST(BoardProperty, FloorRuleMatchesPartialLevelRule) {
  for (int m = 2; m <= 4; ++m) {
    for (const auto& h : oracle::boards_up_to(5, 10)) {
      ASSERT_EQ(is_singleton(oracle::to_board(h), m), oracle::singleton_by_levels(h, m))
          << oracle::to_board(h).to_string() << " m=" << m;
    }
  }
}

TEST(BoardProperty, ForEachBoardMatchesBruteForce) {
  for (int n = 0; n <= 4; ++n) {
    std::vector<std::string> seen;
    for_each_board(n, 5, [&](const FerrersBoard& b) { seen.push_back(b.to_string()); });
    std::vector<std::string> expected;
    for (const auto& h : oracle::boards(n, 5)) expected.push_back(oracle::to_board(h).to_string());
    ASSERT_EQ(seen, expected);
  }
}

}  // namespace
}  // namespace ferrers
