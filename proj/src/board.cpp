#include "ferrers/board.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace ferrers {

namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

std::vector<std::int64_t> parse_signed_list(std::string_view text, std::string_view what) {
  std::vector<std::int64_t> values;
  if (trim(text).empty()) return values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start));
    std::int64_t value = 0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc() || ptr != end) {
      throw ValidationError(std::string(what) + ": entry " + std::to_string(values.size() + 1) +
                            " is not an integer: '" + std::string(token) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace

FerrersBoard::FerrersBoard() : heights_(std::make_shared<const std::vector<int>>()) {}

FerrersBoard::FerrersBoard(std::vector<int> heights)
    : heights_(std::make_shared<const std::vector<int>>(std::move(heights))) {}

FerrersBoard FerrersBoard::from_heights(std::span<const std::int64_t> heights) {
  std::vector<int> checked;
  checked.reserve(heights.size());
  for (std::size_t i = 0; i < heights.size(); ++i) {
    const auto index = std::to_string(i + 1);
    if (heights[i] < 0) {
      throw ValidationError("board height at index " + index + " is negative");
    }
    if (heights[i] > std::numeric_limits<int>::max() / 4) {
      throw ValidationError("board height at index " + index + " is too large");
    }
    if (i > 0 && heights[i] < heights[i - 1]) {
      throw ValidationError("board heights must be weakly increasing: index " + index + " (" +
                            std::to_string(heights[i]) + ") is below index " +
                            std::to_string(i) + " (" + std::to_string(heights[i - 1]) + ")");
    }
    checked.push_back(static_cast<int>(heights[i]));
  }
  return FerrersBoard(std::move(checked));
}

FerrersBoard FerrersBoard::from_heights(std::initializer_list<std::int64_t> heights) {
  return from_heights(std::span<const std::int64_t>(heights.begin(), heights.size()));
}

int FerrersBoard::height(int column) const {
  if (column < 1 || column > columns()) {
    throw ValidationError("column " + std::to_string(column) + " is outside 1.." +
                          std::to_string(columns()));
  }
  return (*heights_)[static_cast<std::size_t>(column - 1)];
}

std::int64_t FerrersBoard::cell_count() const {
  std::int64_t total = 0;
  for (int h : *heights_) total += h;
  return total;
}

bool FerrersBoard::contains(Cell cell) const {
  return cell.column >= 1 && cell.column <= columns() && cell.row >= 1 &&
         cell.row <= (*heights_)[static_cast<std::size_t>(cell.column - 1)];
}

std::string FerrersBoard::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < heights_->size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string((*heights_)[i]);
  }
  return out;
}

FerrersBoard make_board(std::span<const std::int64_t> heights) {
  return FerrersBoard::from_heights(heights);
}

FerrersBoard parse_board(std::string_view text) {
  const auto values = parse_signed_list(text, "board");
  return FerrersBoard::from_heights(values);
}

std::vector<int> parse_int_list(std::string_view text) {
  const auto values = parse_signed_list(text, "list");
  std::vector<int> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > std::numeric_limits<int>::max()) {
      throw ValidationError("list entry " + std::to_string(i + 1) + " is out of range");
    }
    out.push_back(static_cast<int>(values[i]));
  }
  return out;
}

void require_level_size(int m) {
  if (m < 1) throw ValidationError("m must be at least 1, got " + std::to_string(m));
}

std::int64_t m_floor(std::int64_t v, int m) {
  require_level_size(m);
  if (v < 0) throw ValidationError("m_floor: value must be non-negative");
  return v - v % m;
}

int level_of_row(int row, int m) {
  require_level_size(m);
  if (row < 1) throw ValidationError("level_of_row: row must be at least 1");
  return (row - 1) / m + 1;
}

int level_first_row(int level, int m) { return m * (level - 1) + 1; }

int level_last_row(int level, int m) { return m * level; }

int cells_in_level(const FerrersBoard& board, int column, int level, int m) {
  const int above = board.height(column) - m * (level - 1);
  return std::clamp(above, 0, m);
}

int remainder(const FerrersBoard& board, int column, int m) {
  const int h = board.height(column);
  return static_cast<int>(h - m_floor(h, m));
}

std::vector<Zone> zones(const FerrersBoard& board, int m) {
  require_level_size(m);
  std::vector<Zone> out;
  for (int i = 1; i <= board.columns(); ++i) {
    const std::int64_t floor = m_floor(board.height(i), m);
    const int rho = remainder(board, i, m);
    if (!out.empty() && out.back().floor == floor) {
      out.back().end = i;
      out.back().remainder += rho;
    } else {
      out.push_back(Zone{i, i, floor, rho});
    }
  }
  return out;
}

bool fits_ambient(const FerrersBoard& board, int m) {
  require_level_size(m);
  return static_cast<std::int64_t>(board.max_height()) <=
         static_cast<std::int64_t>(m) * board.columns();
}

std::vector<int> level_numbers(const FerrersBoard& board, int m) {
  if (!fits_ambient(board, m)) {
    throw ValidationError("board " + board.to_string() + " does not fit in " +
                          std::to_string(board.columns()) + " levels of height " +
                          std::to_string(m));
  }
  const int n = board.columns();
  std::vector<int> by_level(static_cast<std::size_t>(n), 0);
  for (int level = 1; level <= n; ++level) {
    for (int column = 1; column <= n; ++column) {
      by_level[static_cast<std::size_t>(level - 1)] += cells_in_level(board, column, level, m);
    }
  }
  std::reverse(by_level.begin(), by_level.end());
  return by_level;
}

bool is_singleton(const FerrersBoard& board, int m) {
  require_level_size(m);
  for (int i = 1; i < board.columns(); ++i) {
    if (remainder(board, i, m) != 0 &&
        m_floor(board.height(i), m) >= m_floor(board.height(i + 1), m)) {
      return false;
    }
  }
  return true;
}

}  // namespace ferrers
