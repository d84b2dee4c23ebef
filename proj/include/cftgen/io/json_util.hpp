#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cftgen/errors.hpp"
#include "cftgen/failure_types.hpp"

namespace cftgen::io {

// All documents are read and written with order-preserving JSON so exports
// are byte-deterministic and metadata round-trips losslessly.
using Json = nlohmann::ordered_json;

// Strict shared helpers for the JSON document readers: every value access
// is typed and carries a `$.`-path for error messages, unknown object keys
// are rejected.

Json parse_json(std::string_view text);

const Json& require(const Json& obj, const char* key, const std::string& path);

void expect_keys(const Json& obj, std::initializer_list<const char*> allowed,
                 const std::string& path);

const Json& as_object(const Json& j, const std::string& path);
const Json& as_array(const Json& j, const std::string& path);
std::string as_string(const Json& j, const std::string& path);

// Name restricted to [A-Za-z0-9_].
void check_identifier(std::string_view name, const std::string& path);
std::string identifier(const Json& obj, const char* key, const std::string& path);

FailureType failure_type_of(const Json& j, const std::string& path);

}  // namespace cftgen::io
