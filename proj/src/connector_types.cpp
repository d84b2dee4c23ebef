#include "cftgen/connector_types.hpp"

#include "cftgen/errors.hpp"

namespace cftgen {

std::string_view to_string(TypeCategory category) {
  switch (category) {
    case TypeCategory::Boolean: return "boolean";
    case TypeCategory::Numeric: return "numeric";
    case TypeCategory::Time: return "time";
  }
  return "?";
}

FailureTypeSet ConnectorTypeTable::category_failure_types(TypeCategory category) {
  switch (category) {
    case TypeCategory::Boolean:
      return {FailureType::FalsePositive, FailureType::FalseNegative,
              FailureType::Omission,      FailureType::Commission,
              FailureType::TooEarly,      FailureType::TooLate};
    case TypeCategory::Numeric:
    case TypeCategory::Time:
      return {FailureType::TooHigh,    FailureType::TooLow,
              FailureType::Omission,   FailureType::Commission,
              FailureType::TooEarly,   FailureType::TooLate};
  }
  return {};
}

ConnectorTypeTable ConnectorTypeTable::with_builtins() {
  ConnectorTypeTable table;
  table.declare("Boolean", TypeCategory::Boolean);
  table.declare("Integer", TypeCategory::Numeric);
  table.declare("Float", TypeCategory::Numeric);
  table.declare("Time", TypeCategory::Time);
  return table;
}

void ConnectorTypeTable::declare(const std::string& name, TypeCategory category) {
  declare(name, category_failure_types(category));
}

void ConnectorTypeTable::declare(const std::string& name, FailureTypeSet set) {
  if (set.empty()) {
    throw SchemaError("connector type '" + name + "' declares an empty failure-type set");
  }
  auto [it, inserted] = entries_.emplace(name, set);
  if (!inserted && !(it->second == set)) {
    throw SchemaError("conflicting redeclaration of connector type '" + name + "'");
  }
}

void ConnectorTypeTable::merge(const ConnectorTypeTable& other) {
  for (const auto& [name, set] : other.entries_) declare(name, set);
}

bool ConnectorTypeTable::contains(std::string_view name) const {
  return entries_.find(std::string(name)) != entries_.end();
}

FailureTypeSet ConnectorTypeTable::failure_types(std::string_view name) const {
  auto it = entries_.find(std::string(name));
  if (it == entries_.end()) throw UnknownConnectorTypeError(std::string(name));
  return it->second;
}

}  // namespace cftgen
