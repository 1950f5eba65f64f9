#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ferrers/board.hpp"
#include "ferrers/integer.hpp"

namespace ferrers {

/// At most one occupied cell per column of a board.
///
/// The board is carried for validation and for the derived views (rooks per
/// row, rooks per level). Equality and hashing look only at the occupied cells.
class FilePlacement {
 public:
  explicit FilePlacement(FerrersBoard board);

  /// Validates every cell against the board and rejects repeated columns.
  static FilePlacement from_cells(FerrersBoard board, std::span<const Cell> cells);

  const FerrersBoard& board() const { return board_; }
  int rook_count() const { return rooks_; }
  bool empty() const { return rooks_ == 0; }

  /// Row of the rook in a column, or 0 when the column is empty.
  int row_in(int column) const;
  bool occupied(int column) const { return row_in(column) != 0; }

  void place(Cell cell);
  void remove(int column);

  /// Occupied cells sorted by column.
  std::vector<Cell> cells() const;

  /// f_j for j = 1..max_height (index 0 is row 1).
  std::vector<int> row_counts() const;

  /// Rooks in the given level.
  int rooks_in_level(int level, int m) const;

  /// Semicolon-separated "col:row" pairs, e.g. "1:2;3:2;4:1".
  std::string to_string() const;

  friend bool operator==(const FilePlacement& a, const FilePlacement& b);
  friend std::strong_ordering operator<=>(const FilePlacement& a, const FilePlacement& b);

 private:
  FerrersBoard board_;
  std::vector<int> rows_;  // rows_[c - 1] == 0 means column c is empty
  int rooks_ = 0;
};

struct PlacementHash {
  std::size_t operator()(const FilePlacement& placement) const;
};

FilePlacement parse_placement(const FerrersBoard& board, std::string_view text);

enum class PlacementKind { File, Rook, MLevelRook };

std::string_view to_string(PlacementKind kind);
PlacementKind parse_placement_kind(std::string_view text);

/// No two rooks share a level (columns are distinct by construction).
bool is_m_level_rook_placement(const FilePlacement& placement, int m);

/// Classical non-attacking placement: the m = 1 case.
inline bool is_rook_placement(const FilePlacement& placement) {
  return is_m_level_rook_placement(placement, 1);
}

bool has_kind(const FilePlacement& placement, PlacementKind kind, int m);

/// Visits every file placement of exactly k rooks once, in lexicographic
/// order of the (column, row) sequence of occupied cells. The visitor gets a
/// reference to a placement that is mutated between calls; copy it to keep it.
/// k < 0 or k > n visits nothing.
template <typename Visitor>
void for_each_file_placement(const FerrersBoard& board, int k, Visitor&& visit);

/// Same order as for_each_file_placement, restricted to m-level rook
/// placements; pruned rather than filtered.
template <typename Visitor>
void for_each_m_level_rook_placement(const FerrersBoard& board, int m, int k, Visitor&& visit);

template <typename Visitor>
void for_each_placement(const FerrersBoard& board, PlacementKind kind, int m, int k,
                        Visitor&& visit);

std::vector<FilePlacement> file_placements(const FerrersBoard& board, int k);
std::vector<FilePlacement> m_level_rook_placements(const FerrersBoard& board, int m, int k);

/// Number of file placements of k rooks, counted by enumeration.
Integer file_placement_count(const FerrersBoard& board, int k);

/// r_{k,m}(B), counted by enumeration.
Integer rook_number(const FerrersBoard& board, int m, int k);

}  // namespace ferrers

#include "ferrers/detail/placement_enum.hpp"
