#pragma once

#include <cstdint>
#include <vector>

namespace ferrers {

namespace detail {

template <typename Visitor>
void board_step(std::vector<std::int64_t>& heights, std::size_t index, int max_height,
                Visitor& visit) {
  if (index == heights.size()) {
    visit(FerrersBoard::from_heights(heights));
    return;
  }
  const std::int64_t low = index == 0 ? 0 : heights[index - 1];
  for (std::int64_t h = low; h <= max_height; ++h) {
    heights[index] = h;
    board_step(heights, index + 1, max_height, visit);
  }
}

}  // namespace detail

template <typename Visitor>
void for_each_board(int n, int max_height, Visitor&& visit) {
  if (n < 0 || max_height < 0) {
    throw ValidationError("for_each_board: n and max_height must be non-negative");
  }
  std::vector<std::int64_t> heights(static_cast<std::size_t>(n), 0);
  detail::board_step(heights, 0, max_height, visit);
}

}  // namespace ferrers
