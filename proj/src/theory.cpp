#include "ferrers/theory.hpp"

#include <algorithm>

namespace ferrers {

namespace {

void count_level_rooks(const FerrersBoard& board, int m, int column, int placed,
                       std::vector<char>& level_used, std::vector<std::uint64_t>& counts) {
  if (column > board.columns()) {
    ++counts[static_cast<std::size_t>(placed)];
    return;
  }
  const int height = board.height(column);
  for (int level = 1; level_first_row(level, m) <= height; ++level) {
    char& used = level_used[static_cast<std::size_t>(level - 1)];
    if (used) continue;
    // Every row of this level that lies in the column is a distinct placement.
    const int cells = cells_in_level(board, column, level, m);
    used = 1;
    for (int c = 0; c < cells; ++c) {
      count_level_rooks(board, m, column + 1, placed + 1, level_used, counts);
    }
    used = 0;
  }
  count_level_rooks(board, m, column + 1, placed, level_used, counts);
}

// Adding a rook to a row that already holds f rooks multiplies the weight by
// 1↓_{f+1,m} / 1↓_{f,m} = 1 - f m.
void sum_file_weights(const FerrersBoard& board, int m, int column, int placed,
                      const Integer& weight, std::vector<int>& row_counts,
                      std::vector<Integer>& sums) {
  if (column > board.columns()) {
    sums[static_cast<std::size_t>(placed)] += weight;
    return;
  }
  const int height = board.height(column);
  for (int row = 1; row <= height; ++row) {
    int& f = row_counts[static_cast<std::size_t>(row - 1)];
    const Integer next = f == 0 ? weight : weight * (1 - static_cast<std::int64_t>(f) * m);
    ++f;
    sum_file_weights(board, m, column + 1, placed + 1, next, row_counts, sums);
    --f;
  }
  sum_file_weights(board, m, column + 1, placed, weight, row_counts, sums);
}

bool compare(std::string_view name, const FFPoly& lhs, const FFPoly& rhs,
             FactorizationReport& report) {
  const FFPoly a = to_basis(lhs, Basis::power());
  const FFPoly b = to_basis(rhs, Basis::power());
  if (a == b) return true;
  report.details[std::string(name)] = CoefficientMismatch{a.coeffs(), b.coeffs()};
  return false;
}

}  // namespace

Integer weight(const FilePlacement& placement, int m) {
  require_level_size(m);
  Integer product = 1;
  for (int f : placement.row_counts()) {
    if (f > 1) product *= m_falling_factorial(1, f, m);
  }
  return product;
}

Integer weighted_file_number(const FerrersBoard& board, int m, int k) {
  require_level_size(m);
  Integer total = 0;
  for_each_file_placement(board, k, [&](const FilePlacement& p) { total += weight(p, m); });
  return total;
}

RookNumberVector rook_numbers(const FerrersBoard& board, int m) {
  require_level_size(m);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(board.columns()) + 1, 0);
  std::vector<char> level_used(static_cast<std::size_t>(board.max_height() / m + 1), 0);
  count_level_rooks(board, m, 1, 0, level_used, counts);
  RookNumberVector out{m, {}};
  out.values.assign(counts.begin(), counts.end());
  return out;
}

WeightedFileVector weighted_file_numbers(const FerrersBoard& board, int m) {
  require_level_size(m);
  std::vector<Integer> sums(static_cast<std::size_t>(board.columns()) + 1);
  std::vector<int> row_counts(static_cast<std::size_t>(board.max_height()), 0);
  sum_file_weights(board, m, 1, 0, Integer(1), row_counts, sums);
  return WeightedFileVector{m, std::move(sums)};
}

RootMultiset gjw_roots(const FerrersBoard& board) { return br_roots(board, 1); }

RootMultiset br_roots(const FerrersBoard& board, int m) {
  require_level_size(m);
  std::vector<std::int64_t> constants;
  for (int i = 1; i <= board.columns(); ++i) {
    constants.push_back(static_cast<std::int64_t>(board.height(i)) -
                        static_cast<std::int64_t>(m) * (i - 1));
  }
  return RootMultiset(std::move(constants));
}

RootMultiset zone_roots(const FerrersBoard& board, int m) {
  std::vector<std::int64_t> constants;
  for (const Zone& zone : zones(board, m)) {
    for (int i = zone.start; i <= zone.end; ++i) {
      std::int64_t c = zone.floor - static_cast<std::int64_t>(i - 1) * m;
      if (i == zone.end) c += zone.remainder;
      constants.push_back(c);
    }
  }
  return RootMultiset(std::move(constants));
}

RootMultiset level_roots(const FerrersBoard& board, int m) {
  const auto levels = level_numbers(board, m);
  std::vector<std::int64_t> constants;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    constants.push_back(levels[j] - static_cast<std::int64_t>(m) * static_cast<std::int64_t>(j));
  }
  return RootMultiset(std::move(constants));
}

FFPoly falling_sum_poly(std::span<const Integer> values, int m) {
  require_level_size(m);
  // values[k] multiplies x↓_{n-k,m}: reverse into basis order.
  std::vector<Integer> coeffs(values.rbegin(), values.rend());
  return to_basis(FFPoly(Basis::falling(m), std::move(coeffs)), Basis::power());
}

FFPoly m_level_rook_poly(const FerrersBoard& board, int m) {
  return falling_sum_poly(rook_numbers(board, m).values, m);
}

FFPoly weighted_file_poly(const FerrersBoard& board, int m) {
  return falling_sum_poly(weighted_file_numbers(board, m).values, m);
}

bool FactorizationReport::all_pass() const {
  for (const auto& check : {gjw, br_equals_pm, zone, level, file}) {
    if (check.has_value() && !*check) return false;
  }
  return true;
}

FactorizationReport verify_factorizations(const FerrersBoard& board, int m,
                                          std::span<const FactorizationCheck> which) {
  require_level_size(m);
  const auto selected = [&](FactorizationCheck check) {
    return which.empty() || std::find(which.begin(), which.end(), check) != which.end();
  };

  FactorizationReport report;
  report.board = board.to_string();
  report.m = m;

  const bool need_pm = selected(FactorizationCheck::Gjw) || selected(FactorizationCheck::Br) ||
                       selected(FactorizationCheck::Zone) || selected(FactorizationCheck::Level);
  const FFPoly pm = need_pm ? m_level_rook_poly(board, m) : FFPoly();

  if (selected(FactorizationCheck::Gjw) && m == 1) {
    report.gjw = compare("gjw", pm, expand_roots(gjw_roots(board)), report);
  }
  if (selected(FactorizationCheck::Br) && is_singleton(board, m)) {
    report.br_equals_pm = compare("br_equals_pm", pm, expand_roots(br_roots(board, m)), report);
  }
  if (selected(FactorizationCheck::Zone)) {
    report.zone = compare("zone", pm, expand_roots(zone_roots(board, m)), report);
  }
  if (selected(FactorizationCheck::Level) && fits_ambient(board, m)) {
    report.level = compare("level", pm, expand_roots(level_roots(board, m)), report);
  }
  if (selected(FactorizationCheck::File)) {
    report.file =
        compare("file", weighted_file_poly(board, m), expand_roots(br_roots(board, m)), report);
  }
  return report;
}

bool m_level_equivalent(const FerrersBoard& a, const FerrersBoard& b, int m) {
  return a.columns() == b.columns() && rook_numbers(a, m) == rook_numbers(b, m);
}

namespace {

struct CensusSearch {
  int n;
  int m;
  std::vector<int> target;  // bottom-up
  std::vector<int> filled;  // bottom-up
  std::vector<std::int64_t> heights;
  std::vector<FerrersBoard> found;

  void step(int column, int min_height) {
    if (column > n) {
      if (filled == target) found.push_back(FerrersBoard::from_heights(heights));
      return;
    }
    const int columns_left = n - column + 1;
    for (int h = min_height; h <= m * n; ++h) {
      // Every remaining column is at least h tall, so it adds at least this
      // column's contribution to each level.
      bool exceeds = false;
      for (int level = 1; level <= n; ++level) {
        const int cells = std::clamp(h - m * (level - 1), 0, m);
        if (filled[static_cast<std::size_t>(level - 1)] + columns_left * cells >
            target[static_cast<std::size_t>(level - 1)]) {
          exceeds = true;
          break;
        }
      }
      // Contributions only grow with h.
      if (exceeds) break;
      for (int level = 1; level <= n; ++level) {
        filled[static_cast<std::size_t>(level - 1)] += std::clamp(h - m * (level - 1), 0, m);
      }
      heights[static_cast<std::size_t>(column - 1)] = h;
      step(column + 1, h);
      for (int level = 1; level <= n; ++level) {
        filled[static_cast<std::size_t>(level - 1)] -= std::clamp(h - m * (level - 1), 0, m);
      }
    }
  }
};

}  // namespace

CensusResult census_level_numbers(std::span<const int> levels, int m) {
  require_level_size(m);
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (levels[j] < 0) {
      throw ValidationError("level number " + std::to_string(j + 1) + " is negative");
    }
  }
  const int n = static_cast<int>(levels.size());
  CensusSearch search{n, m, std::vector<int>(levels.rbegin(), levels.rend()),
                      std::vector<int>(static_cast<std::size_t>(n), 0),
                      std::vector<std::int64_t>(static_cast<std::size_t>(n), 0), {}};
  search.step(1, 0);
  CensusResult result;
  result.count = search.found.size();
  result.boards = std::move(search.found);
  return result;
}

}  // namespace ferrers
