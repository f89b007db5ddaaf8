#pragma once

// Text renderings of tables, series, and reports. JSON output is byte-stable:
// keys keep insertion order and every integer travels as a decimal string.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oracle.hpp"
#include "series.hpp"
#include "verifier.hpp"

namespace kingmesh {

enum class OutputMode { Table, Json };

/// {"pattern": "...", "class": "all", "rows": [{"n", "distribution", "total"}, ...]}
std::string table_to_json(const DistributionTable& t);
DistributionTable table_from_json(std::string_view text);
std::string table_to_text(const DistributionTable& t);

/// {"name": "...", "order": N, "coefficients": [{"n", "coefficient"}, ...]}
std::string series_to_json(std::string_view name, const USeries& s);
USeries series_from_json(std::string_view text);
std::string series_to_text(std::string_view name, const USeries& s);

/// [{"id", "subject", "status", "witness"?: {"n", "expected", "actual"}, "detail"?}, ...]
std::string reports_to_json(std::span<const CheckReport> reports);
std::vector<CheckReport> reports_from_json(std::string_view text);
std::string reports_to_text(std::span<const CheckReport> reports);

}  // namespace kingmesh
