#ifndef PCW_TESTS_SCHEMA_CHECK_HPP
#define PCW_TESTS_SCHEMA_CHECK_HPP

// Just enough of JSON Schema to validate the documents this project emits
// against the schemas it ships: type / properties / required / items / enum.

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace pcw::testsupport {

inline bool matches_type(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline bool validate_schema(const nlohmann::json& value,
                            const nlohmann::json& schema, std::string& error,
                            const std::string& path = "$") {
  if (schema.contains("type")) {
    const auto& type = schema.at("type");
    bool ok = false;
    if (type.is_string()) {
      ok = matches_type(value, type.get<std::string>());
    } else {
      for (const auto& t : type) {
        if (matches_type(value, t.get<std::string>())) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) {
      error = path + ": type mismatch (schema " + type.dump() + ", got " +
              value.dump().substr(0, 60) + ")";
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& candidate : schema.at("enum")) {
      if (candidate == value) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      error = path + ": value " + value.dump() + " not in enum";
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema.at("required")) {
        if (!value.contains(key.get<std::string>())) {
          error = path + ": missing required member '" +
                  key.get<std::string>() + "'";
          return false;
        }
      }
    }
    if (schema.contains("properties")) {
      for (const auto& [key, member_schema] : schema.at("properties").items()) {
        if (!value.contains(key)) continue;
        if (!validate_schema(value.at(key), member_schema, error,
                             path + "." + key)) {
          return false;
        }
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (!validate_schema(value[i], schema.at("items"), error,
                           path + "[" + std::to_string(i) + "]")) {
        return false;
      }
    }
  }
  return true;
}

inline nlohmann::json load_json_file(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw std::runtime_error("cannot open " + file_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return nlohmann::json::parse(buffer.str());
}

/// Directory holding the shipped schemas, from $PCW_SCHEMAS or the source
/// tree layout relative to the test working directory.
inline std::string schema_dir() {
  if (const char* env = std::getenv("PCW_SCHEMAS")) return env;
  return "schemas";
}

inline nlohmann::json load_schema(const std::string& name) {
  return load_json_file(schema_dir() + "/" + name + ".schema.json");
}

}  // namespace pcw::testsupport

#endif  // PCW_TESTS_SCHEMA_CHECK_HPP
