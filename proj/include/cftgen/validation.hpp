#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cftgen {

enum class Severity { Error, Warning };

struct Finding {
  Severity severity;
  std::string code;      // short kebab-case identifier, stable across releases
  std::string location;  // slash path into the offending document/model
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

// Accumulates findings in discovery order; a model is valid iff no finding
// has error severity.
class ValidationReport {
 public:
  void add_error(std::string code, std::string location, std::string message);
  void add_warning(std::string code, std::string location, std::string message);
  void merge(ValidationReport other);

  [[nodiscard]] bool ok() const { return error_count() == 0; }
  [[nodiscard]] std::size_t error_count() const;
  [[nodiscard]] std::size_t warning_count() const;
  [[nodiscard]] const std::vector<Finding>& findings() const { return findings_; }

  // Findings whose severity is Error, in order.
  [[nodiscard]] std::vector<Finding> errors() const;

 private:
  std::vector<Finding> findings_;
};

}  // namespace cftgen
