#pragma once

#include <string>
#include <vector>

#include "cftgen/connector_types.hpp"
#include "cftgen/port.hpp"
#include "cftgen/validation.hpp"

namespace cftgen {

// One end of a linkage. An empty block name addresses a diagram input or
// output port; otherwise `port` is a parameter of the named function block.
struct LinkEndpoint {
  std::string block;
  std::string port;

  [[nodiscard]] bool is_diagram() const { return block.empty(); }
  [[nodiscard]] std::string path() const {
    return is_diagram() ? port : block + "/" + port;
  }

  friend auto operator<=>(const LinkEndpoint&, const LinkEndpoint&) = default;
};

// Directed wire: diagram input or block output -> block input or diagram
// output. Both ends must carry the same connector type.
struct Linkage {
  LinkEndpoint source;
  LinkEndpoint target;

  friend auto operator<=>(const Linkage&, const Linkage&) = default;
};

struct FunctionBlockInstance {
  std::string name;
  std::string block_type;
  std::vector<Port> inputs;
  std::vector<Port> outputs;

  [[nodiscard]] const Port* find_input(std::string_view param) const;
  [[nodiscard]] const Port* find_output(std::string_view param) const;

  friend bool operator==(const FunctionBlockInstance&, const FunctionBlockInstance&) = default;
};

// Per-component dataflow diagram. `inputs`/`outputs` mirror the owning
// component's inports/outports by name and connector type.
struct CfcDiagram {
  std::vector<Port> inputs;
  std::vector<Port> outputs;
  std::vector<FunctionBlockInstance> blocks;
  std::vector<Linkage> linkages;

  [[nodiscard]] const FunctionBlockInstance* find_block(std::string_view name) const;

  friend bool operator==(const CfcDiagram&, const CfcDiagram&) = default;
};

struct Component {
  std::string name;
  std::vector<Port> inports;
  std::vector<Port> outports;
  CfcDiagram diagram;

  [[nodiscard]] const Port* find_inport(std::string_view name) const;
  [[nodiscard]] const Port* find_outport(std::string_view name) const;

  friend bool operator==(const Component&, const Component&) = default;
};

// Dataflow between two distinct components: outport of one feeds an inport
// of another.
struct Connection {
  std::string from_component;
  std::string from_port;
  std::string to_component;
  std::string to_port;

  friend auto operator<=>(const Connection&, const Connection&) = default;
};

struct System {
  std::string name;
  std::vector<Component> components;
  std::vector<Connection> connections;

  [[nodiscard]] const Component* find_component(std::string_view name) const;

  friend bool operator==(const System&, const System&) = default;
};

// Checks every structural invariant of the system and its diagrams against
// the given connector-type table. Problems are reported as findings, never
// thrown; an undriven block input parameter is a warning (a constant
// parameter), everything else listed is an error.
ValidationReport validate_system(const System& system, const ConnectorTypeTable& types);

// Blocks in dataflow order: every linkage source block precedes its target
// block, ties broken by declaration order. Throws CycleError when the
// linkage graph has a cycle.
std::vector<const FunctionBlockInstance*> topological_block_order(const CfcDiagram& diagram);

}  // namespace cftgen
