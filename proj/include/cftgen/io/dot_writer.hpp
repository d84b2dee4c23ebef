#pragma once

#include <string>

#include "cftgen/cft_model.hpp"

namespace cftgen::io {

// GraphViz rendering. Shapes distinguish node roles: input failure modes
// are ellipses, output failure modes octagons, AND/OR/XOR/NOT gates
// invhouse/invtrapezium/diamond/triangle, basic events circles. Output is
// deterministic.
std::string export_dot(const CftProject& project);
std::string export_dot(const ClassicFaultTree& tree);

}  // namespace cftgen::io
