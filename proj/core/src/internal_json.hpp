#pragma once

#include <string>

#include <json.hpp>

#include "crystden/affine.hpp"

namespace crystden::internal {

/// Parse JSON text, converting library failures into ParseError.
nlohmann::json json_from_text(const std::string& text);

/// Build a group from a parsed document with the strict validation shared
/// by group files and the embedded catalog: integer-typed linear entries,
/// string-typed exact translations, no floats anywhere.
CrystGroup group_from_json(const nlohmann::json& doc);

}  // namespace crystden::internal
