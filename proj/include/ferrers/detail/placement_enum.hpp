#pragma once

#include <utility>
#include <vector>

namespace ferrers {

namespace detail {

// Depth-first over columns: occupy the column (rows ascending) before the
// skip branch, which yields lexicographic order of the occupied-cell sequence.
template <typename Visitor>
void file_step(FilePlacement& placement, const FerrersBoard& board, int column, int remaining,
               Visitor& visit) {
  if (remaining == 0) {
    visit(std::as_const(placement));
    return;
  }
  if (board.columns() - column + 1 < remaining) return;
  const int height = board.height(column);
  for (int row = 1; row <= height; ++row) {
    placement.place(Cell{column, row});
    file_step(placement, board, column + 1, remaining - 1, visit);
    placement.remove(column);
  }
  file_step(placement, board, column + 1, remaining, visit);
}

template <typename Visitor>
void level_rook_step(FilePlacement& placement, const FerrersBoard& board, int m, int column,
                     int remaining, std::vector<char>& level_used, Visitor& visit) {
  if (remaining == 0) {
    visit(std::as_const(placement));
    return;
  }
  if (board.columns() - column + 1 < remaining) return;
  const int height = board.height(column);
  for (int row = 1; row <= height; ++row) {
    const auto level = static_cast<std::size_t>((row - 1) / m);
    if (level_used[level]) continue;
    level_used[level] = 1;
    placement.place(Cell{column, row});
    level_rook_step(placement, board, m, column + 1, remaining - 1, level_used, visit);
    placement.remove(column);
    level_used[level] = 0;
  }
  level_rook_step(placement, board, m, column + 1, remaining, level_used, visit);
}

}  // namespace detail

template <typename Visitor>
void for_each_file_placement(const FerrersBoard& board, int k, Visitor&& visit) {
  if (k < 0 || k > board.columns()) return;
  FilePlacement placement(board);
  detail::file_step(placement, board, 1, k, visit);
}

template <typename Visitor>
void for_each_m_level_rook_placement(const FerrersBoard& board, int m, int k, Visitor&& visit) {
  require_level_size(m);
  if (k < 0 || k > board.columns()) return;
  FilePlacement placement(board);
  std::vector<char> level_used(static_cast<std::size_t>(board.max_height() / m + 1), 0);
  detail::level_rook_step(placement, board, m, 1, k, level_used, visit);
}

template <typename Visitor>
void for_each_placement(const FerrersBoard& board, PlacementKind kind, int m, int k,
                        Visitor&& visit) {
  switch (kind) {
    case PlacementKind::File:
      for_each_file_placement(board, k, visit);
      break;
    case PlacementKind::Rook:
      for_each_m_level_rook_placement(board, 1, k, visit);
      break;
    case PlacementKind::MLevelRook:
      for_each_m_level_rook_placement(board, m, k, visit);
      break;
  }
}

}  // namespace ferrers
