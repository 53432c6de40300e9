#pragma once

// JSON encoding of traces and trace sets for machine-readable output.
// Sets serialize in their natural order, so equal sets give equal arrays.

#include <json.hpp>

#include "ccsn/traces.hpp"

namespace ccsn {

nlohmann::json traceToJson(const Trace& t);
Trace traceFromJson(const nlohmann::json& j);

nlohmann::json traceSetToJson(const TraceSet& p);
TraceSet traceSetFromJson(const nlohmann::json& j);

}  // namespace ccsn
