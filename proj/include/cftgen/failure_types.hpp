#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace cftgen {

// Closed set of failure semantics a failure mode can carry. The order here
// is the canonical enumeration order used everywhere deterministic output
// matters (failure-mode generation, document export, reports).
enum class FailureType : std::uint8_t {
  FalsePositive = 0,
  FalseNegative,
  TooHigh,
  TooLow,
  Omission,
  Commission,
  TooEarly,
  TooLate,
};

inline constexpr std::size_t kFailureTypeCount = 8;

inline constexpr std::array<FailureType, kFailureTypeCount> kAllFailureTypes = {
    FailureType::FalsePositive, FailureType::FalseNegative,
    FailureType::TooHigh,       FailureType::TooLow,
    FailureType::Omission,      FailureType::Commission,
    FailureType::TooEarly,      FailureType::TooLate,
};

std::string_view to_string(FailureType fty);
std::optional<FailureType> parse_failure_type(std::string_view name);

// Small value type for a subset of the failure-type enumeration.
// Iteration yields canonical order regardless of insertion order.
class FailureTypeSet {
 public:
  constexpr FailureTypeSet() = default;
  FailureTypeSet(std::initializer_list<FailureType> ftys) {
    for (auto fty : ftys) insert(fty);
  }

  void insert(FailureType fty) { bits_ |= bit(fty); }
  [[nodiscard]] bool contains(FailureType fty) const { return (bits_ & bit(fty)) != 0; }
  [[nodiscard]] bool empty() const { return bits_ == 0; }
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool subset_of(FailureTypeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  [[nodiscard]] std::vector<FailureType> to_vector() const;

  friend bool operator==(FailureTypeSet a, FailureTypeSet b) { return a.bits_ == b.bits_; }

 private:
  static constexpr std::uint8_t bit(FailureType fty) {
    return static_cast<std::uint8_t>(1u << static_cast<std::uint8_t>(fty));
  }
  std::uint8_t bits_ = 0;
};

}  // namespace cftgen
