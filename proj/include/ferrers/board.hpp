#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ferrers {

/// Raised for malformed input: bad board strings, m < 1, out-of-range
/// indices, and precondition violations detectable from the arguments.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A single cell; columns and rows are 1-indexed, row 1 at the bottom.
struct Cell {
  int column = 0;
  int row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Bottom-justified board with weakly increasing column heights b_1 <= ... <= b_n.
///
/// Immutable. Copies share the height storage, so boards can be carried by
/// value inside placements and classes without cost.
class FerrersBoard {
 public:
  /// The empty board (n = 0).
  FerrersBoard();

  /// Validates that heights are non-negative and weakly increasing. The
  /// error message names the 1-based index of the first offending entry.
  static FerrersBoard from_heights(std::span<const std::int64_t> heights);
  static FerrersBoard from_heights(std::initializer_list<std::int64_t> heights);

  int columns() const { return static_cast<int>(heights_->size()); }
  bool empty() const { return heights_->empty(); }

  /// Height of a 1-indexed column.
  int height(int column) const;
  std::span<const int> heights() const { return *heights_; }
  int max_height() const { return empty() ? 0 : heights_->back(); }
  std::int64_t cell_count() const;

  bool contains(Cell cell) const;

  /// Comma-separated decimal heights; "" for the empty board.
  std::string to_string() const;

  friend bool operator==(const FerrersBoard& a, const FerrersBoard& b) {
    return *a.heights_ == *b.heights_;
  }
  friend auto operator<=>(const FerrersBoard& a, const FerrersBoard& b) {
    return *a.heights_ <=> *b.heights_;
  }

 private:
  explicit FerrersBoard(std::vector<int> heights);

  std::shared_ptr<const std::vector<int>> heights_;
};

FerrersBoard make_board(std::span<const std::int64_t> heights);

/// Parses the board text format, e.g. "1,1,2,4". Whitespace around entries
/// is tolerated; the empty string is the empty board.
FerrersBoard parse_board(std::string_view text);

/// Parses a comma-separated list of non-negative integers (level-number
/// strings share the board syntax but not its monotonicity rule).
std::vector<int> parse_int_list(std::string_view text);

/// Throws ValidationError unless m >= 1.
void require_level_size(int m);

/// Largest multiple of m not exceeding v.
std::int64_t m_floor(std::int64_t v, int m);

/// Level containing the given row: ceil(row / m).
int level_of_row(int row, int m);

/// First and last row of a level.
int level_first_row(int level, int m);
int level_last_row(int level, int m);

/// Number of cells of the column inside the given level (0..m).
int cells_in_level(const FerrersBoard& board, int column, int level, int m);

/// b_i - floor_m(b_i).
int remainder(const FerrersBoard& board, int column, int m);

/// Maximal run of columns sharing an m-floor.
struct Zone {
  int start = 0;
  int end = 0;
  std::int64_t floor = 0;
  std::int64_t remainder = 0;

  friend bool operator==(const Zone&, const Zone&) = default;
};

std::vector<Zone> zones(const FerrersBoard& board, int m);

/// True when the board lies inside the n-level ambient board (b_n <= m n).
bool fits_ambient(const FerrersBoard& board, int m);

/// l_j = cells of the board in level n + 1 - j, reported top-down.
/// Throws ValidationError if the board does not fit in n levels.
std::vector<int> level_numbers(const FerrersBoard& board, int m);

/// Nonzero remainder at column i forces floor_m(b_i) < floor_m(b_{i+1});
/// the last column is unconstrained.
bool is_singleton(const FerrersBoard& board, int m);

/// Calls visit(board) for every Ferrers board with exactly n columns and
/// heights in [0, max_height], in lexicographic order of height vectors.
template <typename Visitor>
void for_each_board(int n, int max_height, Visitor&& visit);

}  // namespace ferrers

#include "ferrers/detail/board_enum.hpp"
