#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ferrers/board.hpp"
#include "ferrers/ffpoly.hpp"
#include "ferrers/integer.hpp"
#include "ferrers/placement.hpp"

namespace ferrers {

/// (r_{0,m}, ..., r_{n,m}).
struct RookNumberVector {
  int m = 1;
  std::vector<Integer> values;

  friend bool operator==(const RookNumberVector&, const RookNumberVector&) = default;
};

/// (f_{0,m}, ..., f_{n,m}); entries may be negative.
struct WeightedFileVector {
  int m = 1;
  std::vector<Integer> values;

  friend bool operator==(const WeightedFileVector&, const WeightedFileVector&) = default;
};

/// Product over rows j of 1↓_{f_j,m}, f_j being the rooks in row j.
Integer weight(const FilePlacement& placement, int m);

/// Sum of weights over all file placements of k rooks.
Integer weighted_file_number(const FerrersBoard& board, int m, int k);

/// All rook numbers from a single enumeration pass.
RookNumberVector rook_numbers(const FerrersBoard& board, int m);

/// All weighted file numbers from a single enumeration pass.
WeightedFileVector weighted_file_numbers(const FerrersBoard& board, int m);

RootMultiset gjw_roots(const FerrersBoard& board);
RootMultiset br_roots(const FerrersBoard& board, int m);
RootMultiset zone_roots(const FerrersBoard& board, int m);
/// Throws ValidationError when the board exceeds its n ambient levels.
RootMultiset level_roots(const FerrersBoard& board, int m);

/// sum_k values[k] x↓_{n-k,m}, converted to the power basis.
FFPoly falling_sum_poly(std::span<const Integer> values, int m);

/// p_m(B, x) from enumerated m-level rook numbers, in the power basis.
FFPoly m_level_rook_poly(const FerrersBoard& board, int m);

/// sum_k f_{k,m}(B) x↓_{n-k,m}, in the power basis.
FFPoly weighted_file_poly(const FerrersBoard& board, int m);

struct CoefficientMismatch {
  std::vector<Integer> lhs;
  std::vector<Integer> rhs;
};

/// Outcome of comparing the factorization theorems against enumeration.
/// An empty optional means the check does not apply to this board and m.
struct FactorizationReport {
  std::string board;
  int m = 1;
  std::optional<bool> gjw;           // m = 1 only
  std::optional<bool> br_equals_pm;  // singleton boards only
  std::optional<bool> zone;
  std::optional<bool> level;         // boards inside n ambient levels only
  std::optional<bool> file;
  /// Keyed by check name; present only for failed checks.
  std::map<std::string, CoefficientMismatch> details;

  bool all_pass() const;
};

enum class FactorizationCheck { Gjw, Br, Zone, Level, File };

/// Runs the selected checks (all of them by default); unselected checks stay
/// empty in the report.
FactorizationReport verify_factorizations(const FerrersBoard& board, int m,
                                          std::span<const FactorizationCheck> which = {});

/// Same column count and identical m-level rook numbers.
bool m_level_equivalent(const FerrersBoard& a, const FerrersBoard& b, int m);

struct CensusResult {
  std::size_t count = 0;
  std::vector<FerrersBoard> boards;
};

/// Every Ferrers board with n = levels.size() columns, b_n <= m n, whose
/// level numbers (top-down) equal the query. Boards in lexicographic order.
CensusResult census_level_numbers(std::span<const int> levels, int m);

}  // namespace ferrers
