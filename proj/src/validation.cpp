#include "cftgen/validation.hpp"

#include <algorithm>
#include <iterator>

namespace cftgen {

void ValidationReport::add_error(std::string code, std::string location, std::string message) {
  findings_.push_back({Severity::Error, std::move(code), std::move(location), std::move(message)});
}

void ValidationReport::add_warning(std::string code, std::string location, std::string message) {
  findings_.push_back(
      {Severity::Warning, std::move(code), std::move(location), std::move(message)});
}

void ValidationReport::merge(ValidationReport other) {
  std::move(other.findings_.begin(), other.findings_.end(), std::back_inserter(findings_));
}

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(findings_.begin(), findings_.end(),
                                                [](const Finding& f) {
                                                  return f.severity == Severity::Error;
                                                }));
}

std::size_t ValidationReport::warning_count() const {
  return findings_.size() - error_count();
}

std::vector<Finding> ValidationReport::errors() const {
  std::vector<Finding> out;
  std::copy_if(findings_.begin(), findings_.end(), std::back_inserter(out),
               [](const Finding& f) { return f.severity == Severity::Error; });
  return out;
}

}  // namespace cftgen
