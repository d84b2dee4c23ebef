#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cftgen/failure_types.hpp"
#include "cftgen/port.hpp"
#include "cftgen/validation.hpp"

namespace cftgen {

enum class GateKind { And, Or, Xor, Not };

std::string_view to_string(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

enum class FmDirection { Input, Output };

// A failure of a specific type observable at a specific port of a component.
struct FailureMode {
  std::string id;
  std::string port;
  FailureType failure_type;

  friend bool operator==(const FailureMode&, const FailureMode&) = default;
};

struct Gate {
  std::string id;
  GateKind kind;

  friend bool operator==(const Gate&, const Gate&) = default;
};

// Directed edge of the failure-propagation graph. Sources are input failure
// modes or gates (their single output); targets are gates (one of their
// inputs) or output failure modes. For a gate target, the pin order is the
// order of its incoming edges in `CftElement::edges`.
struct Edge {
  std::string source;
  std::string target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct CftElement {
  std::string component;
  std::vector<Port> inports;
  std::vector<Port> outports;
  std::vector<FailureMode> input_failure_modes;
  std::vector<FailureMode> output_failure_modes;
  std::vector<Gate> gates;
  std::vector<Edge> edges;

  // Appends the gate and one edge per input, in pin order.
  void add_gate(std::string id, GateKind kind, const std::vector<std::string>& inputs);

  [[nodiscard]] const FailureMode* find_ifm(std::string_view port, FailureType fty) const;
  [[nodiscard]] const FailureMode* find_ofm(std::string_view port, FailureType fty) const;
  [[nodiscard]] const Gate* find_gate(std::string_view id) const;

  friend bool operator==(const CftElement&, const CftElement&) = default;
};

// Port-level dataflow between elements, mirroring the system connections
// (or name matching) that produced the project skeleton.
struct PortLink {
  std::string from_component;
  std::string from_port;
  std::string to_component;
  std::string to_port;

  friend auto operator<=>(const PortLink&, const PortLink&) = default;
};

// Failure-mode-level expansion of a PortLink: the same failure type on both
// ends of a connected outport/inport pair.
struct InterElementLink {
  std::string from_component;
  std::string from_port;
  std::string to_component;
  std::string to_port;
  FailureType failure_type;

  friend auto operator<=>(const InterElementLink&, const InterElementLink&) = default;
};

struct CftProject {
  std::vector<CftElement> elements;
  std::vector<PortLink> port_links;
  std::vector<InterElementLink> links;
  std::vector<std::pair<std::string, std::string>> metadata;

  [[nodiscard]] const CftElement* find_element(std::string_view component) const;

  friend bool operator==(const CftProject&, const CftProject&) = default;
};

// Addresses one output failure mode: the event a fault tree is built for.
struct TopEvent {
  std::string component;
  std::string port;
  FailureType failure_type;

  [[nodiscard]] std::string path() const;

  friend auto operator<=>(const TopEvent&, const TopEvent&) = default;
};

enum class FlatNodeKind { And, Or, Xor, Not, BasicEvent, ConstantFalse };

struct FlatNode {
  std::string id;
  FlatNodeKind kind;
  std::vector<std::string> children;

  friend bool operator==(const FlatNode&, const FlatNode&) = default;
};

// Classic fault tree (a single-root DAG): component boundaries removed,
// leaves are basic events or the identified FALSE node.
struct ClassicFaultTree {
  std::string top_event;  // the TopEvent path this tree was built for
  std::string root;
  std::vector<FlatNode> nodes;  // creation order; ids unique

  [[nodiscard]] const FlatNode* find(std::string_view id) const;
  [[nodiscard]] std::size_t node_count() const { return nodes.size(); }
};

// Structural validation of a project (Eq.-shape of edges, arities,
// acyclicity, link endpoints). All problems are findings.
ValidationReport validate_cft(const CftProject& project);

// Removes failure-mode nodes, splicing across inter-element links:
//  - an input failure mode with no link becomes a basic event
//    `component.port.failure-type`;
//  - a linked input failure mode follows the upstream output failure mode:
//    its driver when present, otherwise a basic event at the upstream port
//    (the upstream element does not model that failure's causes);
//  - a top with no incoming edge yields the constant-FALSE tree.
// Requires a structurally valid project. Throws UnknownTopError and
// CyclicModelError.
ClassicFaultTree flatten(const CftProject& project, const TopEvent& top);

}  // namespace cftgen
