#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cftgen {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Base for everything thrown by the document readers. `line`/`column` are
// 1-based; 0 means "not tied to a text position" (for example a schema
// problem located by path instead).
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line_ = 0, std::size_t column_ = 0,
             std::string path_ = {})
      : Error(format(msg, line_, column_, path_)),
        line(line_),
        column(column_),
        path(std::move(path_)) {}

  std::size_t line;
  std::size_t column;
  std::string path;

 private:
  static std::string format(const std::string& msg, std::size_t line, std::size_t column,
                            const std::string& path) {
    std::string out;
    if (line > 0) {
      out += std::to_string(line) + ":" + std::to_string(column) + ": ";
    }
    out += msg;
    if (!path.empty()) out += " (at " + path + ")";
    return out;
  }
};

struct SyntaxError : ParseError {
  using ParseError::ParseError;
};

struct SchemaError : ParseError {
  using ParseError::ParseError;
};

struct DuplicateRuleKeyError : ParseError {
  using ParseError::ParseError;
};

struct CycleError : Error {
  explicit CycleError(std::vector<std::string> blocks_)
      : Error("cycle through blocks: " + join(blocks_)), blocks(std::move(blocks_)) {}
  std::vector<std::string> blocks;

 private:
  static std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
      if (!out.empty()) out += " -> ";
      out += n;
    }
    return out;
  }
};

struct UnknownConnectorTypeError : Error {
  explicit UnknownConnectorTypeError(const std::string& name)
      : Error("unknown connector type '" + name + "'"), type_name(name) {}
  std::string type_name;
};

struct NoRuleAvailableError : Error {
  NoRuleAvailableError(const std::string& block_, const std::string& block_type_)
      : Error("no rule set for block '" + block_ + "' of type '" + block_type_ +
              "' and worst-case fallback is disabled"),
        block(block_),
        block_type(block_type_) {}
  std::string block;
  std::string block_type;
};

struct GenerationError : Error {
  using Error::Error;
};

struct AmbiguousNameMatchError : Error {
  using Error::Error;
};

struct UnknownTopError : Error {
  using Error::Error;
};

struct NonCoherentTreeError : Error {
  using Error::Error;
};

struct CyclicModelError : Error {
  using Error::Error;
};

}  // namespace cftgen
