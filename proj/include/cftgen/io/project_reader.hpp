#pragma once

#include <string_view>

#include "cftgen/cfc_model.hpp"
#include "cftgen/connector_types.hpp"

namespace cftgen::io {

struct CfcProjectFile {
  System system;
  // Built-ins plus the document's connector_types section.
  ConnectorTypeTable connector_types;
};

// Reads a `.cfc.json` document. Structural problems (malformed JSON, wrong
// shapes, linkage endpoints that do not resolve) throw SyntaxError or
// SchemaError; semantic invariants are left to validate_system.
CfcProjectFile parse_cfc_project_file(std::string_view text);

System parse_cfc_project(std::string_view text);

}  // namespace cftgen::io
