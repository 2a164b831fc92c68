#pragma once

#include <nlohmann/json.hpp>

#include "crystalq/plane_partition.hpp"
#include "crystalq/qseries.hpp"
#include "crystalq/vertex.hpp"

namespace crystalq {

// {"min_exp": int, "trunc": int, "coeffs": ["p/q", ...]}
nlohmann::json to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

// {"heights": [[...]], "legs": [lambda, mu, nu]}; "legs" present only for
// legged configurations, each leg a list of parts.
nlohmann::json to_json(const PlanePartition& pi);
PlanePartition plane_partition_from_json(const nlohmann::json& j);

// {"chi": int, "factors": [{"a": [a1,a2,a3], "e": int}, ...]}
nlohmann::json to_json(const FactoredWeight& w);
FactoredWeight factored_weight_from_json(const nlohmann::json& j);

}  // namespace crystalq
