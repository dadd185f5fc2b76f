#pragma once

// Stable machine output: one top-level record per invocation, rationals as
// exact "p/q" strings, keys in fixed order. Human tables are rendered from
// the same records.

#include "hesselink/induction.hpp"

#include <json.hpp>

namespace hesselink {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json to_json(const KempfDatum& kd);
Json to_json(const StratumLabel& row);
Json to_json(const StrataTable& table);
Json to_json(const InductionResult& r);

/// Top-level record: {schema_version, command, inputs, results}.
Json make_record(const std::string& command, Json inputs, Json results);

std::string render_strata_table(const Json& record);
std::string render_induction(const Json& record);
std::string render_kempf(const Json& record);
std::string render_vector(const Json& record);

/// Root-name sugar over the simple roots (a, b, c, d): "a", "2a+b", "a+b".
Vec parse_root_combo(const std::string& text, const RootDatum& datum);

}  // namespace hesselink
