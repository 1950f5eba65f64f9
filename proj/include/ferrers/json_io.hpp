#pragma once

#include <json.hpp>

#include "ferrers/board.hpp"
#include "ferrers/cancellation.hpp"
#include "ferrers/ffpoly.hpp"
#include "ferrers/integer.hpp"
#include "ferrers/theory.hpp"

namespace ferrers {

using json = nlohmann::json;

/// A JSON number when the value fits in 64 bits, otherwise its decimal string.
json integer_json(const Integer& value);
Integer integer_from_json(const json& value);

/// {"basis":"power"|"mfalling","m":int (mfalling only),"coeffs":[low..high]}
json poly_json(const FFPoly& p);
FFPoly poly_from_json(const json& value);

/// {"board","m","checks":{...},"details":{...}}; null marks a check that does
/// not apply or was not requested.
json report_json(const FactorizationReport& report);

/// {"level","fixed","movable_columns","size","weight_sum"}
json class_json(const ClassSummary& summary);

/// Board, m, n, singleton verdict, zones and level numbers (null when the
/// board exceeds its n ambient levels).
json board_info_json(const FerrersBoard& board, int m);

}  // namespace ferrers
