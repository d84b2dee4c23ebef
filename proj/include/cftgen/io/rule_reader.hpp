#pragma once

#include <string_view>

#include "cftgen/rule_engine.hpp"

namespace cftgen::io {

// Reads a `.cftr` rule-library document: connector-type declarations plus
// per-block-type rules `OUT.failure-type = expr;` with NOT/AND/OR/XOR,
// parentheses and `#` line comments. AND binds tighter than OR and XOR.
// Throws SyntaxError (with 1-based line/column), SchemaError and
// DuplicateRuleKeyError.
RuleLibrary parse_rule_library(std::string_view text);

}  // namespace cftgen::io
