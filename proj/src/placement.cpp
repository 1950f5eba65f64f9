#include "ferrers/placement.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace ferrers {

FilePlacement::FilePlacement(FerrersBoard board)
    : board_(std::move(board)), rows_(static_cast<std::size_t>(board_.columns()), 0) {}

FilePlacement FilePlacement::from_cells(FerrersBoard board, std::span<const Cell> cells) {
  FilePlacement placement(std::move(board));
  for (const Cell& cell : cells) placement.place(cell);
  return placement;
}

int FilePlacement::row_in(int column) const {
  if (column < 1 || column > board_.columns()) {
    throw ValidationError("column " + std::to_string(column) + " is outside 1.." +
                          std::to_string(board_.columns()));
  }
  return rows_[static_cast<std::size_t>(column - 1)];
}

void FilePlacement::place(Cell cell) {
  if (!board_.contains(cell)) {
    throw ValidationError("cell " + std::to_string(cell.column) + ":" +
                          std::to_string(cell.row) + " is not on board " + board_.to_string());
  }
  int& slot = rows_[static_cast<std::size_t>(cell.column - 1)];
  if (slot != 0) {
    throw ValidationError("column " + std::to_string(cell.column) + " is already occupied");
  }
  slot = cell.row;
  ++rooks_;
}

void FilePlacement::remove(int column) {
  if (row_in(column) == 0) {
    throw ValidationError("column " + std::to_string(column) + " is not occupied");
  }
  rows_[static_cast<std::size_t>(column - 1)] = 0;
  --rooks_;
}

std::vector<Cell> FilePlacement::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(rooks_));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] != 0) out.push_back(Cell{static_cast<int>(i) + 1, rows_[i]});
  }
  return out;
}

std::vector<int> FilePlacement::row_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(board_.max_height()), 0);
  for (int row : rows_) {
    if (row != 0) ++counts[static_cast<std::size_t>(row - 1)];
  }
  return counts;
}

int FilePlacement::rooks_in_level(int level, int m) const {
  require_level_size(m);
  return static_cast<int>(std::count_if(rows_.begin(), rows_.end(), [&](int row) {
    return row != 0 && (row - 1) / m + 1 == level;
  }));
}

std::string FilePlacement::to_string() const {
  std::string out;
  for (const Cell& cell : cells()) {
    if (!out.empty()) out += ';';
    out += std::to_string(cell.column) + ":" + std::to_string(cell.row);
  }
  return out;
}

bool operator==(const FilePlacement& a, const FilePlacement& b) {
  return a.rooks_ == b.rooks_ && a.cells() == b.cells();
}

std::strong_ordering operator<=>(const FilePlacement& a, const FilePlacement& b) {
  const auto ca = a.cells();
  const auto cb = b.cells();
  return std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::size_t PlacementHash::operator()(const FilePlacement& placement) const {
  std::size_t seed = 0;
  for (const Cell& cell : placement.cells()) {
    const auto packed = (static_cast<std::uint64_t>(cell.column) << 32) ^
                        static_cast<std::uint32_t>(cell.row);
    seed ^= std::hash<std::uint64_t>{}(packed) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
            (seed >> 2);
  }
  return seed;
}

FilePlacement parse_placement(const FerrersBoard& board, std::string_view text) {
  FilePlacement placement(board);
  std::size_t start = 0;
  if (text.empty()) return placement;
  int previous_column = 0;
  while (true) {
    const auto semi = text.find(';', start);
    const auto token = text.substr(start, semi == std::string_view::npos ? std::string_view::npos
                                                                         : semi - start);
    const auto colon = token.find(':');
    Cell cell;
    const auto parse = [&](std::string_view part, int& value) {
      const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
      return !part.empty() && ec == std::errc() && ptr == part.data() + part.size();
    };
    if (colon == std::string_view::npos || !parse(token.substr(0, colon), cell.column) ||
        !parse(token.substr(colon + 1), cell.row)) {
      throw ValidationError("malformed placement entry '" + std::string(token) + "'");
    }
    if (cell.column <= previous_column) {
      throw ValidationError("placement entries must be sorted by strictly increasing column");
    }
    previous_column = cell.column;
    placement.place(cell);
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return placement;
}

std::string_view to_string(PlacementKind kind) {
  switch (kind) {
    case PlacementKind::File:
      return "file";
    case PlacementKind::Rook:
      return "rook";
    case PlacementKind::MLevelRook:
      return "mlevel";
  }
  return "file";
}

PlacementKind parse_placement_kind(std::string_view text) {
  if (text == "file") return PlacementKind::File;
  if (text == "rook") return PlacementKind::Rook;
  if (text == "mlevel") return PlacementKind::MLevelRook;
  throw ValidationError("unknown placement kind '" + std::string(text) + "'");
}

bool is_m_level_rook_placement(const FilePlacement& placement, int m) {
  require_level_size(m);
  std::vector<char> seen(static_cast<std::size_t>(placement.board().max_height() / m + 1), 0);
  for (const Cell& cell : placement.cells()) {
    char& slot = seen[static_cast<std::size_t>((cell.row - 1) / m)];
    if (slot) return false;
    slot = 1;
  }
  return true;
}

bool has_kind(const FilePlacement& placement, PlacementKind kind, int m) {
  switch (kind) {
    case PlacementKind::File:
      return true;
    case PlacementKind::Rook:
      return is_rook_placement(placement);
    case PlacementKind::MLevelRook:
      return is_m_level_rook_placement(placement, m);
  }
  return false;
}

std::vector<FilePlacement> file_placements(const FerrersBoard& board, int k) {
  std::vector<FilePlacement> out;
  for_each_file_placement(board, k, [&](const FilePlacement& p) { out.push_back(p); });
  return out;
}

std::vector<FilePlacement> m_level_rook_placements(const FerrersBoard& board, int m, int k) {
  std::vector<FilePlacement> out;
  for_each_m_level_rook_placement(board, m, k, [&](const FilePlacement& p) { out.push_back(p); });
  return out;
}

Integer file_placement_count(const FerrersBoard& board, int k) {
  std::uint64_t count = 0;
  for_each_file_placement(board, k, [&](const FilePlacement&) { ++count; });
  return count;
}

Integer rook_number(const FerrersBoard& board, int m, int k) {
  std::uint64_t count = 0;
  for_each_m_level_rook_placement(board, m, k, [&](const FilePlacement&) { ++count; });
  return count;
}

}  // namespace ferrers
