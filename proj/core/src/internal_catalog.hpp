#pragma once

namespace crystden::internal {

/// Embedded wallpaper-group catalog, one JSON array of group documents
/// extended with "name" and "expected_density".
const char* catalog_json();

}  // namespace crystden::internal
