#include "ferrers/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <vector>

#include "ferrers/cancellation.hpp"
#include "ferrers/json_io.hpp"
#include "ferrers/placement.hpp"
#include "ferrers/theory.hpp"

namespace ferrers::cli {

namespace {

struct Options {
  std::string board;
  std::string board_b;
  std::string levels;
  int m = 0;
  std::optional<int> k;
  std::string kind;
  std::optional<long long> limit;
  std::string form = "pm";
  std::string basis = "power";
  std::string which = "all";
  std::string format = "json";
  bool list = false;
};

void emit(std::ostream& out, const json& value) { out << value.dump() << '\n'; }

int require_k(const Options& opts, const FerrersBoard& board) {
  if (!opts.k) throw ValidationError("--k is required");
  if (*opts.k < 0 || *opts.k > board.columns()) {
    throw ValidationError("k must lie in 0.." + std::to_string(board.columns()) + ", got " +
                          std::to_string(*opts.k));
  }
  return *opts.k;
}

void require_json_format(const Options& opts, std::string_view command) {
  if (opts.format != "json") {
    throw ValidationError("--format " + opts.format + " is not available for " +
                          std::string(command));
  }
}

int cmd_info(const Options& opts, std::ostream& out) {
  require_json_format(opts, "info");
  emit(out, board_info_json(parse_board(opts.board), opts.m));
  return kExitOk;
}

int cmd_enumerate(const Options& opts, std::ostream& out) {
  const FerrersBoard board = parse_board(opts.board);
  const int k = require_k(opts, board);
  const PlacementKind kind = parse_placement_kind(opts.kind.empty() ? "file" : opts.kind);
  if (opts.limit && *opts.limit < 0) throw ValidationError("--limit must be non-negative");

  std::uint64_t count = 0;
  json rows = json::array();
  std::vector<std::pair<std::string, Integer>> listed;
  for_each_placement(board, kind, opts.m, k, [&](const FilePlacement& p) {
    if (!opts.limit || count < static_cast<std::uint64_t>(*opts.limit)) {
      listed.emplace_back(p.to_string(), weight(p, opts.m));
    }
    ++count;
  });

  if (opts.format == "csv") {
    out << "index,placement,weight\n";
    for (std::size_t i = 0; i < listed.size(); ++i) {
      out << i << ',' << listed[i].first << ',' << listed[i].second << '\n';
    }
    return kExitOk;
  }
  for (const auto& [text, w] : listed) {
    rows.push_back({{"placement", text}, {"weight", integer_json(w)}});
  }
  emit(out, {{"board", board.to_string()},
             {"m", opts.m},
             {"k", k},
             {"kind", std::string(to_string(kind))},
             {"count", count},
             {"placements", rows}});
  return kExitOk;
}

int cmd_numbers(const Options& opts, std::ostream& out) {
  const FerrersBoard board = parse_board(opts.board);
  std::vector<Integer> values;
  const std::string kind = opts.kind.empty() ? "rook" : opts.kind;
  if (kind == "rook") {
    values = rook_numbers(board, opts.m).values;
  } else if (kind == "file") {
    values = weighted_file_numbers(board, opts.m).values;
  } else {
    throw ValidationError("--kind must be rook or file for numbers");
  }
  if (opts.format == "csv") {
    out << "k,value\n";
    for (std::size_t k = 0; k < values.size(); ++k) out << k << ',' << values[k] << '\n';
    return kExitOk;
  }
  json array = json::array();
  for (const auto& v : values) array.push_back(integer_json(v));
  emit(out, {{"board", board.to_string()}, {"m", opts.m}, {"kind", kind}, {"values", array}});
  return kExitOk;
}

int cmd_poly(const Options& opts, std::ostream& out) {
  require_json_format(opts, "poly");
  const FerrersBoard board = parse_board(opts.board);
  FFPoly p;
  if (opts.form == "pm") {
    p = m_level_rook_poly(board, opts.m);
  } else if (opts.form == "file") {
    p = weighted_file_poly(board, opts.m);
  } else if (opts.form == "gjw") {
    p = expand_roots(gjw_roots(board));
  } else if (opts.form == "br") {
    p = expand_roots(br_roots(board, opts.m));
  } else if (opts.form == "zone") {
    p = expand_roots(zone_roots(board, opts.m));
  } else if (opts.form == "level") {
    p = expand_roots(level_roots(board, opts.m));
  } else {
    throw ValidationError("unknown --form '" + opts.form + "'");
  }
  Basis target = Basis::power();
  if (opts.basis == "mfalling") {
    target = Basis::falling(opts.m);
  } else if (opts.basis != "power") {
    throw ValidationError("unknown --basis '" + opts.basis + "'");
  }
  emit(out, poly_json(to_basis(p, target)));
  return kExitOk;
}

int cmd_verify(const Options& opts, std::ostream& out) {
  require_json_format(opts, "verify");
  const FerrersBoard board = parse_board(opts.board);
  std::vector<FactorizationCheck> which;
  if (opts.which == "gjw") {
    which = {FactorizationCheck::Gjw};
  } else if (opts.which == "br") {
    which = {FactorizationCheck::Br};
  } else if (opts.which == "zone") {
    which = {FactorizationCheck::Zone};
  } else if (opts.which == "level") {
    which = {FactorizationCheck::Level};
  } else if (opts.which == "file") {
    which = {FactorizationCheck::File};
  } else if (opts.which != "all") {
    throw ValidationError("unknown --which '" + opts.which + "'");
  }
  const auto report = verify_factorizations(board, opts.m, which);
  emit(out, report_json(report));
  return report.all_pass() ? kExitOk : kExitVerificationFailed;
}

int cmd_partition(const Options& opts, std::ostream& out) {
  require_json_format(opts, "partition");
  const FerrersBoard board = parse_board(opts.board);
  std::vector<int> ks;
  if (opts.k) {
    ks.push_back(require_k(opts, board));
  } else {
    for (int k = 0; k <= board.columns(); ++k) ks.push_back(k);
  }

  std::size_t placements = 0;
  std::size_t classes = 0;
  std::size_t rejected = 0;
  bool well_defined = true;
  bool disjoint_cover = true;
  bool zero_sums = true;
  bool total_zero = true;
  Integer total_weight = 0;
  std::optional<std::string> witness;
  for (int k : ks) {
    const CoverReport report = verify_cover(board, opts.m, k);
    for (const auto& summary : report.classes) emit(out, class_json(summary));
    placements += report.placements;
    classes += report.classes.size();
    rejected += report.rejected.size();
    well_defined = well_defined && report.well_defined;
    disjoint_cover = disjoint_cover && report.disjoint_cover;
    zero_sums = zero_sums && report.zero_sums;
    total_zero = total_zero && report.total_zero;
    total_weight += report.total_weight;
    if (!witness) witness = report.witness;
  }
  const bool singleton = is_singleton(board, opts.m);
  emit(out, {{"summary",
              {{"board", board.to_string()},
               {"m", opts.m},
               {"k", opts.k ? json(*opts.k) : json("all")},
               {"singleton", singleton},
               {"placements", placements},
               {"classes", classes},
               {"rejected", rejected},
               {"well_defined", well_defined},
               {"disjoint_cover", disjoint_cover},
               {"zero_sums", zero_sums},
               {"total_zero", total_zero},
               {"total_weight", integer_json(total_weight)},
               {"witness", witness ? json(*witness) : json(nullptr)}}}});
  const bool ok = singleton && well_defined && disjoint_cover && zero_sums && total_zero;
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_equiv(const Options& opts, std::ostream& out) {
  require_json_format(opts, "equiv");
  const FerrersBoard a = parse_board(opts.board);
  const FerrersBoard b = parse_board(opts.board_b);
  const auto to_array = [](const RookNumberVector& r) {
    json array = json::array();
    for (const auto& v : r.values) array.push_back(integer_json(v));
    return array;
  };
  emit(out, {{"a", a.to_string()},
             {"b", b.to_string()},
             {"m", opts.m},
             {"equivalent", m_level_equivalent(a, b, opts.m)},
             {"rook_numbers_a", to_array(rook_numbers(a, opts.m))},
             {"rook_numbers_b", to_array(rook_numbers(b, opts.m))}});
  return kExitOk;
}

int cmd_census(const Options& opts, std::ostream& out) {
  require_json_format(opts, "census");
  const auto levels = parse_int_list(opts.levels);
  const auto result = census_level_numbers(levels, opts.m);
  json value = {{"levels", levels}, {"m", opts.m}, {"count", result.count}};
  if (opts.list) {
    value["boards"] = json::array();
    for (const auto& board : result.boards) value["boards"].push_back(board.to_string());
  }
  emit(out, value);
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Rook theory on Ferrers boards: placements, factorizations, cancellation classes",
               "ferrers"};
  app.require_subcommand(1);

  const auto add_board = [&](CLI::App* sub) {
    sub->add_option("--board", opts.board, "comma-separated column heights")->required();
  };
  const auto add_m = [&](CLI::App* sub) {
    sub->add_option("--m", opts.m, "level size (m >= 1)")->required();
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* info = app.add_subcommand("info", "board geometry: zones, level numbers, singleton");
  add_board(info);
  add_m(info);
  add_format(info);

  auto* enumerate = app.add_subcommand("enumerate", "list placements of k rooks");
  add_board(enumerate);
  add_m(enumerate);
  enumerate->add_option("--k", opts.k, "number of rooks")->required();
  enumerate->add_option("--kind", opts.kind, "file, rook or mlevel");
  enumerate->add_option("--limit", opts.limit, "maximum placements to print");
  add_format(enumerate);

  auto* numbers = app.add_subcommand("numbers", "rook numbers or weighted file numbers");
  add_board(numbers);
  add_m(numbers);
  numbers->add_option("--kind", opts.kind, "rook or file");
  add_format(numbers);

  auto* poly = app.add_subcommand("poly", "one of the rook polynomials or factor products");
  add_board(poly);
  add_m(poly);
  poly->add_option("--form", opts.form, "pm, file, gjw, br, zone or level");
  poly->add_option("--basis", opts.basis, "power or mfalling");
  add_format(poly);

  auto* verify = app.add_subcommand("verify", "check factorization theorems against enumeration");
  add_board(verify);
  add_m(verify);
  verify->add_option("--which", opts.which, "gjw, br, zone, level, file or all");
  add_format(verify);

  auto* partition = app.add_subcommand("partition", "build and check cancellation classes");
  add_board(partition);
  add_m(partition);
  partition->add_option("--k", opts.k, "number of rooks (default: every k)");
  add_format(partition);

  auto* equiv = app.add_subcommand("equiv", "m-level rook equivalence of two boards");
  equiv->add_option("--a", opts.board, "first board")->required();
  equiv->add_option("--b", opts.board_b, "second board")->required();
  add_m(equiv);
  add_format(equiv);

  auto* census = app.add_subcommand("census", "boards with the given level numbers");
  census->add_option("--levels", opts.levels, "comma-separated level numbers, top level first")
      ->required();
  add_m(census);
  census->add_flag("--list", opts.list, "include the boards");
  add_format(census);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    require_level_size(opts.m);
    if (*info) return cmd_info(opts, out);
    if (*enumerate) return cmd_enumerate(opts, out);
    if (*numbers) return cmd_numbers(opts, out);
    if (*poly) return cmd_poly(opts, out);
    if (*verify) return cmd_verify(opts, out);
    if (*partition) return cmd_partition(opts, out);
    if (*equiv) return cmd_equiv(opts, out);
    if (*census) return cmd_census(opts, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BasisMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace ferrers::cli
