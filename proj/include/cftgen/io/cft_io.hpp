#pragma once

#include <string>
#include <string_view>

#include "cftgen/cft_model.hpp"

namespace cftgen::io {

// `.cft.json` document: elements with failure modes, gates and edges, the
// port-level and failure-mode-level inter-element links, and a metadata
// block. Export is byte-deterministic; import(export(p)) == p.
std::string export_cft(const CftProject& project);
CftProject import_cft(std::string_view text);

}  // namespace cftgen::io
