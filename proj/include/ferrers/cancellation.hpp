#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ferrers/board.hpp"
#include "ferrers/integer.hpp"
#include "ferrers/placement.hpp"

namespace ferrers {

/// canonical_class was asked to partition placements on a board that is not
/// singleton for the given m.
class NotSingletonBoard : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A class whose movable columns do not meet the level in m full cells, or
/// whose parts are otherwise inconsistent.
class IllFormedClass : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// One block of the partition of non-m-level-rook file placements.
///
/// Members agree on every rook outside `level` and on the leftmost rook inside
/// it; each remaining rook of `level` may sit in any of the m cells of its
/// column within the level. The key (level, fixed cells, movable columns)
/// identifies the class; board and m are context.
class CancellationClass {
 public:
  /// Validates that exactly one fixed cell lies in the level and is left of
  /// every movable column, that movable columns are free, ascending and each
  /// meet the level in m cells. Throws IllFormedClass otherwise.
  static CancellationClass make(FerrersBoard board, int m, int level, std::vector<Cell> fixed_cells,
                                std::vector<int> movable_columns);

  const FerrersBoard& board() const { return board_; }
  int m() const { return m_; }
  int level() const { return level_; }
  /// Sorted by column.
  const std::vector<Cell>& fixed_cells() const { return fixed_; }
  const std::vector<int>& movable_columns() const { return movable_; }
  /// Rooks in the level for every member: the leftmost plus the movable ones.
  int rooks_in_level() const { return static_cast<int>(movable_.size()) + 1; }
  int rook_count() const { return static_cast<int>(fixed_.size() + movable_.size()); }

  /// m^(number of movable columns).
  Integer size() const;

  /// Fixed cells in placement text format.
  std::string fixed_string() const;

  friend bool operator==(const CancellationClass& a, const CancellationClass& b) {
    return a.level_ == b.level_ && a.fixed_ == b.fixed_ && a.movable_ == b.movable_;
  }
  friend std::strong_ordering operator<=>(const CancellationClass& a,
                                          const CancellationClass& b) {
    if (auto c = a.level_ <=> b.level_; c != 0) return c;
    if (auto c = a.fixed_ <=> b.fixed_; c != 0) return c;
    return a.movable_ <=> b.movable_;
  }

 private:
  CancellationClass(FerrersBoard board, int m, int level, std::vector<Cell> fixed,
                    std::vector<int> movable)
      : board_(std::move(board)),
        m_(m),
        level_(level),
        fixed_(std::move(fixed)),
        movable_(std::move(movable)) {}

  FerrersBoard board_;
  int m_;
  int level_;
  std::vector<Cell> fixed_;
  std::vector<int> movable_;
};

/// File placements of k rooks that are not m-level rook placements, in the
/// canonical enumeration order.
template <typename Visitor>
void for_each_nonrook_file_placement(const FerrersBoard& board, int m, int k, Visitor&& visit) {
  for_each_file_placement(board, k, [&](const FilePlacement& p) {
    if (!is_m_level_rook_placement(p, m)) visit(p);
  });
}

std::vector<FilePlacement> nonrook_file_placements(const FerrersBoard& board, int m, int k);

/// Among levels holding two or more rooks, the one holding the fewest; ties go
/// to the lowest level. Throws ValidationError for m-level rook placements.
int canonical_level(const FilePlacement& placement, int m);

/// The class containing the placement. Throws NotSingletonBoard unless the
/// placement's board is singleton for m.
CancellationClass canonical_class(const FilePlacement& placement, int m);

/// Builds the class of a placement without the singleton-board check; the
/// per-column check in CancellationClass::make still applies.
CancellationClass class_of(const FilePlacement& placement, int m);

/// Odometer over the movable columns, leftmost column fastest, rows ascending.
std::vector<FilePlacement> class_members(const CancellationClass& cls);

Integer class_weight_sum(const CancellationClass& cls);

/// Sum of weight(fhat + rook at (column, row), m) over the m rows of `level`.
/// The column must be free in fhat and meet the level in m cells.
Integer reintroduction_sum(const FilePlacement& fhat, int column, int level, int m);

struct ClassSummary {
  CancellationClass cls;
  Integer weight_sum;
  /// Placements of the enumerated set that map to this class.
  std::size_t preimage = 0;
  std::size_t members = 0;
};

/// Result of partitioning the non-rook file placements of k rooks.
struct CoverReport {
  std::string board;
  int m = 1;
  int k = 0;
  bool singleton = true;
  std::size_t placements = 0;
  std::vector<ClassSummary> classes;  // in key order
  bool well_defined = true;
  bool disjoint_cover = true;
  bool zero_sums = true;
  bool total_zero = true;
  Integer total_weight = 0;
  /// Placements whose class could not be constructed.
  std::vector<std::string> rejected;
  /// First placement that broke an assertion, if any.
  std::optional<std::string> witness;

  bool ok() const { return singleton && well_defined && disjoint_cover && zero_sums && total_zero; }
};

/// Partitions the non-rook file placements of k rooks and checks that class
/// membership is well defined, that the classes cover the set disjointly, and
/// that every class and the whole set sum to zero weight. Non-singleton boards
/// are processed too, with ill-formed classes reported as rejected.
CoverReport verify_cover(const FerrersBoard& board, int m, int k);

}  // namespace ferrers
