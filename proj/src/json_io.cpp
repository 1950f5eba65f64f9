#include "ferrers/json_io.hpp"

namespace ferrers {

json integer_json(const Integer& value) {
  if (const auto small = to_int64(value)) return *small;
  return value.str();
}

Integer integer_from_json(const json& value) {
  if (value.is_number_integer()) return Integer(value.get<std::int64_t>());
  if (value.is_string()) {
    try {
      return Integer(value.get<std::string>());
    } catch (const std::runtime_error&) {
    }
  }
  throw ValidationError("expected an integer, got " + value.dump());
}

json poly_json(const FFPoly& p) {
  json out;
  out["basis"] = p.basis().name();
  if (!p.basis().is_power()) out["m"] = p.basis().m();
  out["coeffs"] = json::array();
  for (const auto& c : p.coeffs()) out["coeffs"].push_back(integer_json(c));
  return out;
}

FFPoly poly_from_json(const json& value) {
  if (!value.is_object() || !value.contains("basis") || !value.contains("coeffs") ||
      !value["coeffs"].is_array()) {
    throw ValidationError("polynomial JSON needs \"basis\" and \"coeffs\"");
  }
  const auto name = value["basis"].get<std::string>();
  Basis basis = Basis::power();
  if (name == "mfalling") {
    if (!value.contains("m")) throw ValidationError("mfalling polynomial JSON needs \"m\"");
    basis = Basis::falling(value["m"].get<int>());
  } else if (name != "power") {
    throw ValidationError("unknown basis '" + name + "'");
  }
  std::vector<Integer> coeffs;
  for (const auto& c : value["coeffs"]) coeffs.push_back(integer_from_json(c));
  return FFPoly(basis, std::move(coeffs));
}

namespace {

json optional_bool(const std::optional<bool>& value) {
  return value ? json(*value) : json(nullptr);
}

json coeff_array(const std::vector<Integer>& coeffs) {
  json out = json::array();
  for (const auto& c : coeffs) out.push_back(integer_json(c));
  return out;
}

}  // namespace

json report_json(const FactorizationReport& report) {
  json out;
  out["board"] = report.board;
  out["m"] = report.m;
  out["checks"] = {{"gjw", optional_bool(report.gjw)},
                   {"br_equals_pm", optional_bool(report.br_equals_pm)},
                   {"zone", optional_bool(report.zone)},
                   {"level", optional_bool(report.level)},
                   {"file", optional_bool(report.file)}};
  out["details"] = json::object();
  for (const auto& [name, mismatch] : report.details) {
    out["details"][name] = {{"lhs", coeff_array(mismatch.lhs)}, {"rhs", coeff_array(mismatch.rhs)}};
  }
  return out;
}

json class_json(const ClassSummary& summary) {
  return {{"level", summary.cls.level()},
          {"fixed", summary.cls.fixed_string()},
          {"movable_columns", summary.cls.movable_columns()},
          {"size", integer_json(summary.cls.size())},
          {"weight_sum", integer_json(summary.weight_sum)}};
}

json board_info_json(const FerrersBoard& board, int m) {
  json out;
  out["board"] = board.to_string();
  out["m"] = m;
  out["n"] = board.columns();
  out["cells"] = board.cell_count();
  out["singleton"] = is_singleton(board, m);
  out["zones"] = json::array();
  for (const Zone& z : zones(board, m)) {
    out["zones"].push_back(
        {{"start", z.start}, {"end", z.end}, {"floor", z.floor}, {"remainder", z.remainder}});
  }
  out["level_numbers"] = fits_ambient(board, m) ? json(level_numbers(board, m)) : json(nullptr);
  return out;
}

}  // namespace ferrers
