#pragma once

#include "eptl/event_graph.hpp"

#include <json.hpp>

#include <string>

namespace eptl {

/// JSON encoding of values: integers, booleans and strings map directly;
/// sets are wrapped as {"set":[...]} to keep them distinguishable.
nlohmann::ordered_json value_to_json(const Value& v);
Value value_from_json(const nlohmann::json& j);

/// Trace document schema:
///   {"events":[{"id":"e1","op":"put","args":[0],"ret":{"set":[1]},"replica":"r1"}],
///    "vis":[["e1","e2"]]}
/// "ret" and "replica" are optional; "vis" may be the reduction, the closure,
/// or anything in between.
AbstractExecution trace_from_json(const nlohmann::json& doc);
nlohmann::ordered_json trace_to_json(const AbstractExecution& a);

AbstractExecution read_trace_file(const std::string& path);
void write_trace_file(const AbstractExecution& a, const std::string& path);

} // namespace eptl
