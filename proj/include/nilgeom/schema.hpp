#pragma once

#include <json.hpp>

namespace nilgeom {

// Validates `doc` against a JSON-Schema subset: type, enum, const, properties,
// required, additionalProperties, items, minItems, maxItems, minimum, maximum,
// pattern, oneOf, anyOf and local $ref. Throws SchemaError naming the JSON
// pointer of the offending field.
void validate_schema(const nlohmann::json& doc, const nlohmann::json& schema);

} // namespace nilgeom
