#ifndef UNIENERGY_JSONSCHEMA_HPP
#define UNIENERGY_JSONSCHEMA_HPP

#include <json.hpp>
#include <string>
#include <vector>

namespace unienergy {

// Minimal JSON-schema checker covering the subset the report schemas use:
// type, properties, required, items, enum, plus nullable via type arrays.
// Returns the list of violations (empty = valid).
std::vector<std::string> schema_validate(const nlohmann::json& schema,
                                         const nlohmann::json& value);

}  // namespace unienergy

#endif
