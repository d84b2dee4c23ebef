#pragma once

#include <string>

namespace cftgen {

// A named, typed connection point. Used both for component/diagram ports and
// for function-block parameters.
struct Port {
  std::string name;
  std::string connector_type;

  friend bool operator==(const Port&, const Port&) = default;
};

}  // namespace cftgen
