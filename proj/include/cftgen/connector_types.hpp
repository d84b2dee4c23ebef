#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cftgen/failure_types.hpp"

namespace cftgen {

// Table 1 row selectors: which failure types a connector type can exhibit.
enum class TypeCategory { Boolean, Numeric, Time };

std::string_view to_string(TypeCategory category);

// Maps connector-type names (Boolean, Float, or tool-specific names such as
// "Bl"/"GN") to the set of failure types their failure modes may carry.
class ConnectorTypeTable {
 public:
  // Table with the built-in rows: Boolean, Integer, Float, Time.
  static ConnectorTypeTable with_builtins();

  static FailureTypeSet category_failure_types(TypeCategory category);

  // Both declare overloads throw SchemaError on a conflicting redeclaration;
  // redeclaring with an identical set is accepted.
  void declare(const std::string& name, TypeCategory category);
  void declare(const std::string& name, FailureTypeSet set);

  // Union of two tables; same conflict policy as declare.
  void merge(const ConnectorTypeTable& other);

  [[nodiscard]] bool contains(std::string_view name) const;

  // MAP(cty); throws UnknownConnectorTypeError for undeclared names.
  [[nodiscard]] FailureTypeSet failure_types(std::string_view name) const;

  [[nodiscard]] const std::map<std::string, FailureTypeSet>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, FailureTypeSet> entries_;
};

inline FailureTypeSet map_connector_type(const ConnectorTypeTable& table,
                                         std::string_view cty) {
  return table.failure_types(cty);
}

}  // namespace cftgen
