#include "unienergy/jsonschema.hpp"

namespace unienergy {

namespace {

using nlohmann::json;

bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

void check(const json& schema, const json& v, const std::string& path,
           std::vector<std::string>& errs) {
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), v);
        } else if (t.is_array()) {
            for (const auto& alt : t)
                if (type_matches(alt.get<std::string>(), v)) ok = true;
        }
        if (!ok) {
            errs.push_back(path + ": expected type " + t.dump() + ", got " + v.type_name());
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"])
            if (alt == v) ok = true;
        if (!ok) errs.push_back(path + ": value not in enum " + schema["enum"].dump());
    }
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!v.contains(key.get<std::string>()))
                    errs.push_back(path + ": missing required key '" + key.get<std::string>() + "'");
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (v.contains(it.key())) check(it.value(), v[it.key()], path + "/" + it.key(), errs);
    }
    if (v.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i)
            check(schema["items"], v[i], path + "[" + std::to_string(i) + "]", errs);
    }
}

}  // namespace

std::vector<std::string> schema_validate(const nlohmann::json& schema, const nlohmann::json& value) {
    std::vector<std::string> errs;
    check(schema, value, "$", errs);
    return errs;
}

}  // namespace unienergy
