#include "tangent/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace tangent {

namespace {

constexpr const char* kReconciliationColumns[] = {
    "n",           "enum_analytic",    "enum_tangent",    "paper_analytic",
    "paper_tangent", "cand_analytic",  "cand_tangent",    "enum_sb_analytic",
    "enum_sb_tangent", "cand_sb_analytic", "cand_sb_tangent", "flags"};

nlohmann::json optional_count(const std::optional<std::uint64_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json optional_flag(const std::optional<bool>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json count_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

nlohmann::json to_json(const ReconciliationReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row;
    row["n"] = r.n;
    row["enum_analytic"] = r.enum_analytic;
    row["enum_tangent"] = r.enum_tangent;
    row["paper_analytic"] = count_to_json(r.paper_analytic);
    row["paper_tangent"] = count_to_json(r.paper_tangent);
    row["cand_analytic"] = count_to_json(r.cand_analytic);
    row["cand_tangent"] = count_to_json(r.cand_tangent);
    row["enum_sb_analytic"] = optional_count(r.enum_sb_analytic);
    row["enum_sb_tangent"] = optional_count(r.enum_sb_tangent);
    row["cand_sb_analytic"] = count_to_json(r.cand_sb_analytic);
    row["cand_sb_tangent"] = count_to_json(r.cand_sb_tangent);
    row["flags"] = {
        {"paper_analytic", r.flags.paper_analytic},
        {"paper_tangent", r.flags.paper_tangent},
        {"cand_analytic", r.flags.cand_analytic},
        {"cand_tangent", r.flags.cand_tangent},
        {"cand_sb_analytic", optional_flag(r.flags.cand_sb_analytic)},
        {"cand_sb_tangent", optional_flag(r.flags.cand_sb_tangent)},
    };
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const ReconciliationReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < std::size(kReconciliationColumns); ++i) {
    out << (i ? "," : "") << kReconciliationColumns[i];
  }
  out << '\n';
  const auto cell = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& r : report.rows) {
    std::string flags;
    for (const auto& m : r.mismatches()) flags += (flags.empty() ? "" : "|") + m;
    out << r.n << ',' << r.enum_analytic << ',' << r.enum_tangent << ',' << r.paper_analytic
        << ',' << r.paper_tangent << ',' << r.cand_analytic << ',' << r.cand_tangent << ','
        << cell(r.enum_sb_analytic) << ',' << cell(r.enum_sb_tangent) << ','
        << r.cand_sb_analytic << ',' << r.cand_sb_tangent << ',' << flags << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const CurveSpec& curve) {
  nlohmann::json params = nlohmann::json::array();
  for (double p : curve.parameters()) params.push_back(round_significant(p));
  return {{"kind", curve.kind_name()},
          {"params", params},
          {"domain", {round_significant(curve.x0), round_significant(curve.x1)}}};
}

nlohmann::json to_json(const FactorReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : e.factors) {
      factors.push_back({{"w", f.w.str()}, {"tangent", f.tangent}, {"analytic", f.analytic}});
    }
    entries.push_back({{"mesh", round_significant(e.mesh)},
                       {"offset", {round_significant(e.offset_x), round_significant(e.offset_y)}},
                       {"word", e.word.str()},
                       {"factors", std::move(factors)}});
  }
  return {{"curve", to_json(report.curve)},
          {"note", "empirical approximation"},
          {"entries", std::move(entries)}};
}

}  // namespace tangent
