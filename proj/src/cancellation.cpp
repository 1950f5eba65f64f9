#include "ferrers/cancellation.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "ferrers/theory.hpp"

namespace ferrers {

CancellationClass CancellationClass::make(FerrersBoard board, int m, int level,
                                          std::vector<Cell> fixed_cells,
                                          std::vector<int> movable_columns) {
  require_level_size(m);
  const auto fail = [](const std::string& why) { throw IllFormedClass("ill-formed class: " + why); };
  if (level < 1) fail("level must be at least 1");
  if (movable_columns.empty()) fail("the level must hold at least two rooks");

  std::sort(fixed_cells.begin(), fixed_cells.end());
  int in_level = 0;
  int leftmost_in_level = 0;
  for (std::size_t i = 0; i < fixed_cells.size(); ++i) {
    const Cell& cell = fixed_cells[i];
    if (!board.contains(cell)) fail("fixed cell is not on the board");
    if (i > 0 && fixed_cells[i - 1].column == cell.column) fail("two fixed cells share a column");
    if (level_of_row(cell.row, m) == level) {
      ++in_level;
      leftmost_in_level = cell.column;
    }
  }
  if (in_level != 1) fail("exactly one fixed cell must lie in the level");

  for (std::size_t i = 0; i < movable_columns.size(); ++i) {
    const int column = movable_columns[i];
    if (column < 1 || column > board.columns()) fail("movable column outside the board");
    if (i > 0 && movable_columns[i - 1] >= column) fail("movable columns must be ascending");
    if (column <= leftmost_in_level) fail("movable columns must lie right of the fixed rook");
    const bool clashes = std::any_of(fixed_cells.begin(), fixed_cells.end(),
                                     [&](const Cell& c) { return c.column == column; });
    if (clashes) fail("movable column " + std::to_string(column) + " holds a fixed rook");
    const int cells = cells_in_level(board, column, level, m);
    if (cells != m) {
      fail("column " + std::to_string(column) + " meets level " + std::to_string(level) + " in " +
           std::to_string(cells) + " of " + std::to_string(m) + " cells");
    }
  }
  return CancellationClass(std::move(board), m, level, std::move(fixed_cells),
                           std::move(movable_columns));
}

Integer CancellationClass::size() const {
  return boost::multiprecision::pow(Integer(m_), static_cast<unsigned>(movable_.size()));
}

std::string CancellationClass::fixed_string() const {
  return FilePlacement::from_cells(board_, fixed_).to_string();
}

std::vector<FilePlacement> nonrook_file_placements(const FerrersBoard& board, int m, int k) {
  std::vector<FilePlacement> out;
  for_each_nonrook_file_placement(board, m, k, [&](const FilePlacement& p) { out.push_back(p); });
  return out;
}

int canonical_level(const FilePlacement& placement, int m) {
  require_level_size(m);
  std::vector<int> per_level(static_cast<std::size_t>(placement.board().max_height() / m + 1), 0);
  for (const Cell& cell : placement.cells()) ++per_level[static_cast<std::size_t>((cell.row - 1) / m)];
  int best = 0;
  int best_count = 0;
  for (std::size_t i = 0; i < per_level.size(); ++i) {
    const int count = per_level[i];
    if (count >= 2 && (best == 0 || count < best_count)) {
      best = static_cast<int>(i) + 1;
      best_count = count;
    }
  }
  if (best == 0) {
    throw ValidationError("placement " + placement.to_string() + " is an m-level rook placement");
  }
  return best;
}

CancellationClass class_of(const FilePlacement& placement, int m) {
  const int level = canonical_level(placement, m);
  std::vector<Cell> fixed;
  std::vector<int> movable;
  bool seen_leftmost = false;
  for (const Cell& cell : placement.cells()) {
    if (level_of_row(cell.row, m) != level) {
      fixed.push_back(cell);
    } else if (!seen_leftmost) {
      fixed.push_back(cell);
      seen_leftmost = true;
    } else {
      movable.push_back(cell.column);
    }
  }
  return CancellationClass::make(placement.board(), m, level, std::move(fixed), std::move(movable));
}

CancellationClass canonical_class(const FilePlacement& placement, int m) {
  if (!is_singleton(placement.board(), m)) {
    throw NotSingletonBoard("board " + placement.board().to_string() + " is not singleton for m = " +
                            std::to_string(m));
  }
  return class_of(placement, m);
}

std::vector<FilePlacement> class_members(const CancellationClass& cls) {
  FilePlacement base = FilePlacement::from_cells(cls.board(), cls.fixed_cells());
  const int first_row = level_first_row(cls.level(), cls.m());
  const auto& columns = cls.movable_columns();
  std::vector<int> digits(columns.size(), 0);
  std::vector<FilePlacement> members;
  while (true) {
    FilePlacement member = base;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      member.place(Cell{columns[i], first_row + digits[i]});
    }
    members.push_back(std::move(member));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == cls.m()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return members;
}

Integer class_weight_sum(const CancellationClass& cls) {
  Integer total = 0;
  for (const FilePlacement& member : class_members(cls)) total += weight(member, cls.m());
  return total;
}

Integer reintroduction_sum(const FilePlacement& fhat, int column, int level, int m) {
  require_level_size(m);
  const FerrersBoard& board = fhat.board();
  if (level < 1) throw ValidationError("reintroduction_sum: level must be at least 1");
  if (column < 1 || column > board.columns()) {
    throw ValidationError("reintroduction_sum: column " + std::to_string(column) +
                          " is outside the board");
  }
  if (fhat.occupied(column)) {
    throw ValidationError("reintroduction_sum: column " + std::to_string(column) +
                          " is already occupied");
  }
  if (cells_in_level(board, column, level, m) != m) {
    throw ValidationError("reintroduction_sum: column " + std::to_string(column) +
                          " does not meet level " + std::to_string(level) + " in m cells");
  }
  Integer total = 0;
  for (int row = level_first_row(level, m); row <= level_last_row(level, m); ++row) {
    FilePlacement with = fhat;
    with.place(Cell{column, row});
    total += weight(with, m);
  }
  return total;
}

CoverReport verify_cover(const FerrersBoard& board, int m, int k) {
  require_level_size(m);
  CoverReport report;
  report.board = board.to_string();
  report.m = m;
  report.k = k;
  report.singleton = is_singleton(board, m);

  const auto flag = [&](bool& assertion, const std::string& witness) {
    assertion = false;
    if (!report.witness) report.witness = witness;
  };

  std::map<CancellationClass, std::size_t> preimage;
  for_each_nonrook_file_placement(board, m, k, [&](const FilePlacement& p) {
    ++report.placements;
    report.total_weight += weight(p, m);
    try {
      ++preimage[class_of(p, m)];
    } catch (const IllFormedClass&) {
      report.rejected.push_back(p.to_string());
      flag(report.disjoint_cover, p.to_string());
    }
  });
  if (report.total_weight != 0) report.total_zero = false;

  for (const auto& [cls, count] : preimage) {
    const auto members = class_members(cls);
    std::unordered_set<FilePlacement, PlacementHash> distinct;
    Integer sum = 0;
    for (const FilePlacement& member : members) {
      sum += weight(member, m);
      distinct.insert(member);
      if (member.rook_count() != k || is_m_level_rook_placement(member, m)) {
        flag(report.disjoint_cover, member.to_string());
        continue;
      }
      bool same = false;
      try {
        same = class_of(member, m) == cls;
      } catch (const IllFormedClass&) {
      }
      if (!same) flag(report.well_defined, member.to_string());
    }
    // Members all map back to cls and are distinct, so equal counts mean the
    // members are exactly the placements assigned to cls.
    if (distinct.size() != members.size() || count != members.size()) {
      flag(report.disjoint_cover, members.front().to_string());
    }
    if (sum != 0) flag(report.zero_sums, members.front().to_string());
    report.classes.push_back(ClassSummary{cls, sum, count, members.size()});
  }
  return report;
}

}  // namespace ferrers
