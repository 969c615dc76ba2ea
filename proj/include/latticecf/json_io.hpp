#pragma once

#include "latticecf/integer.hpp"

#include <json.hpp>

namespace latticecf {

// A JSON number when the value fits in int64, otherwise a decimal string.
nlohmann::json integer_json(const Integer& x);
nlohmann::json sequence_json(const IntSeq& seq);

// Accepts a JSON integer or a decimal string. Throws ParseError.
Integer integer_from_json(const nlohmann::json& j);

} // namespace latticecf
