#include "cftgen/io/json_util.hpp"

#include <algorithm>
#include <cctype>

namespace cftgen::io {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // The library reports a byte offset; turn it into 1-based line/column.
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    byte = std::min(byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (const auto pos = msg.find("] "); pos != std::string::npos) {
      msg = msg.substr(pos + 2);  // drop the library's "[json.exception...]" prefix
    }
    throw SyntaxError(msg, line, column);
  }
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw SchemaError("missing required key '" + std::string(key) + "'", 0, 0, path);
  }
  return obj[key];
}

void expect_keys(const Json& obj, std::initializer_list<const char*> allowed,
                 const std::string& path) {
  if (!obj.is_object()) {
    throw SchemaError("expected an object", 0, 0, path);
  }
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&key](const char* a) { return key == a; }) == allowed.end()) {
      throw SchemaError("unknown key '" + key + "'", 0, 0, path);
    }
  }
}

const Json& as_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError("expected an object", 0, 0, path);
  return j;
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError("expected an array", 0, 0, path);
  return j;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError("expected a string", 0, 0, path);
  return j.get<std::string>();
}

void check_identifier(std::string_view name, const std::string& path) {
  const bool ok = !name.empty() &&
                  std::all_of(name.begin(), name.end(), [](unsigned char c) {
                    return std::isalnum(c) != 0 || c == '_';
                  });
  if (!ok) {
    throw SchemaError("'" + std::string(name) + "' is not a valid identifier ([A-Za-z0-9_])", 0,
                      0, path);
  }
}

std::string identifier(const Json& obj, const char* key, const std::string& path) {
  const std::string value = as_string(require(obj, key, path), path + "." + key);
  check_identifier(value, path + "." + key);
  return value;
}

FailureType failure_type_of(const Json& j, const std::string& path) {
  const std::string name = as_string(j, path);
  if (auto fty = parse_failure_type(name)) return *fty;
  throw SchemaError("unknown failure type '" + name + "'", 0, 0, path);
}

}  // namespace cftgen::io
