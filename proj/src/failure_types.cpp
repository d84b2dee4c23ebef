#include "cftgen/failure_types.hpp"

#include <bit>

namespace cftgen {

std::string_view to_string(FailureType fty) {
  switch (fty) {
    case FailureType::FalsePositive: return "false-positive";
    case FailureType::FalseNegative: return "false-negative";
    case FailureType::TooHigh: return "too-high";
    case FailureType::TooLow: return "too-low";
    case FailureType::Omission: return "omission";
    case FailureType::Commission: return "commission";
    case FailureType::TooEarly: return "too-early";
    case FailureType::TooLate: return "too-late";
  }
  return "?";
}

std::optional<FailureType> parse_failure_type(std::string_view name) {
  for (auto fty : kAllFailureTypes) {
    if (to_string(fty) == name) return fty;
  }
  return std::nullopt;
}

std::size_t FailureTypeSet::size() const {
  std::size_t n = 0;
  for (auto fty : kAllFailureTypes) {
    if (contains(fty)) ++n;
  }
  return n;
}

std::vector<FailureType> FailureTypeSet::to_vector() const {
  std::vector<FailureType> out;
  for (auto fty : kAllFailureTypes) {
    if (contains(fty)) out.push_back(fty);
  }
  return out;
}

}  // namespace cftgen
