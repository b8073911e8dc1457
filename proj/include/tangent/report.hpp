#pragma once

#include <string>

#include "json.hpp"

#include "tangent/counting.hpp"
#include "tangent/geometry.hpp"

namespace tangent {

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json count_to_json(const BigInt& value);

/// Reals rounded to 12 significant digits.
double round_significant(double value, int digits = 12);

/// Array of rows {n, enum_analytic, ..., cand_sb_tangent, flags}.
nlohmann::json to_json(const ReconciliationReport& report);

/// Same columns as the JSON rows; `flags` lists the mismatching columns
/// separated by '|'.
std::string to_csv(const ReconciliationReport& report);

/// {curve, note, entries: [{mesh, offset, word, factors: [{w, tangent, analytic}]}]}
nlohmann::json to_json(const FactorReport& report);

nlohmann::json to_json(const CurveSpec& curve);

}  // namespace tangent
