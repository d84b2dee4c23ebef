#pragma once

#include <string>
#include <vector>

#include "cftgen/cfc_model.hpp"
#include "cftgen/cft_model.hpp"
#include "cftgen/rule_engine.hpp"

namespace cftgen {

// What happens to a rule term whose input parameter has no incoming linkage
// (a constant parameter): treat it as "never fails" and simplify it away,
// or model the parameter itself as corruptible via a synthetic boundary
// failure mode.
enum class UndrivenInputPolicy { EliminateAsFalse, SynthesizeBasicEvent };

enum class CrossWiring { ExplicitConnections, NameMatching, Both };

struct GenerationOptions {
  bool worst_case_fallback = true;
  UndrivenInputPolicy undriven_input_policy = UndrivenInputPolicy::EliminateAsFalse;
  CrossWiring cross_wiring = CrossWiring::ExplicitConnections;
};

struct TraceGate {
  std::string id;
  GateKind kind;
  std::vector<std::string> inputs;

  friend bool operator==(const TraceGate&, const TraceGate&) = default;
};

// One auditable step of the generation pipeline. Only the fields relevant
// to the record kind are set.
struct TraceRecord {
  enum class Kind {
    ElementCreated,
    FailureModeCreated,
    RuleApplied,
    WorstCaseApplied,
    TermEliminated,
    EdgeCreated,
  };

  Kind kind;
  std::string component;
  std::string block;
  std::string subject;  // failure-mode id / rule key / eliminated term
  std::string from;
  std::string to;
  std::string port;
  std::string failure_type;
  std::string direction;  // "input" | "output" for failure modes
  std::vector<Port> inports;
  std::vector<Port> outports;
  std::vector<TraceGate> gates;
};

struct GenerationTrace {
  std::vector<TraceRecord> records;
};

struct GenerationResult {
  CftProject project;
  GenerationTrace trace;
};

std::string_view to_string(TraceRecord::Kind kind);

// Step 1: one CFT element per component, ports mirrored, port-level links
// from the system connections and/or name matching. Throws
// AmbiguousNameMatchError when one inport ends up with two distinct drivers.
CftProject generate_elements(const System& system, const GenerationOptions& opts,
                             GenerationTrace* trace = nullptr);

// Step 2: one input/output failure mode per (port, mapped failure type);
// port links expand to failure-mode links pairing equal failure types.
CftProject generate_failure_modes(CftProject project, const System& system,
                                  const ConnectorTypeTable& table,
                                  GenerationTrace* trace = nullptr);

// Step 3: instantiates each block's rule set (or the worst case) as gates
// and edges, resolving terms through the diagram linkages in topological
// block order.
CftProject generate_propagation(CftProject project, const System& system,
                                const RuleLibrary& lib, const GenerationOptions& opts,
                                GenerationTrace* trace = nullptr);

// All three steps. Deterministic: identical inputs give identical projects
// and traces.
GenerationResult generate(const System& system, const RuleLibrary& lib,
                          const GenerationOptions& opts = {});

}  // namespace cftgen
