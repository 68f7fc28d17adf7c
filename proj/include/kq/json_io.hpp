// JSON encodings of the domain objects and DOT export of an AR-quiver window.
// Objects encode as {"family":"P"|"I"|"R","t":int,"tube":str?,"len":int?,"shift":int};
// a DObject is a list of those (summands repeated per multiplicity).

#pragma once

#include <string>

#include <json.hpp>

#include "kq/core.hpp"
#include "kq/costability.hpp"
#include "kq/window.hpp"

namespace kq {

nlohmann::ordered_json to_json(const ShiftedIndec& x);
nlohmann::ordered_json to_json(const DObject& x);
nlohmann::ordered_json to_json(const Quintuple& q);

/// Throw std::invalid_argument naming the offending field on bad input.
ShiftedIndec shifted_indec_from_json(const nlohmann::json& j);
DObject dobject_from_json(const nlohmann::json& j);  // single object or array
Quintuple quintuple_from_json(const nlohmann::json& j);

/// DOT digraph of the irreducible-map adjacency inside the preprojective and
/// preinjective components over the window's shifts.
std::string ar_quiver_dot(const WindowConfig& w);

}  // namespace kq
