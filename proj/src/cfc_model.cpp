#include "cftgen/cfc_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "cftgen/errors.hpp"

namespace cftgen {

namespace {

const Port* find_port(const std::vector<Port>& ports, std::string_view name) {
  for (const auto& p : ports) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace

const Port* FunctionBlockInstance::find_input(std::string_view param) const {
  return find_port(inputs, param);
}

const Port* FunctionBlockInstance::find_output(std::string_view param) const {
  return find_port(outputs, param);
}

const FunctionBlockInstance* CfcDiagram::find_block(std::string_view name) const {
  for (const auto& b : blocks) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

const Port* Component::find_inport(std::string_view name) const {
  return find_port(inports, name);
}

const Port* Component::find_outport(std::string_view name) const {
  return find_port(outports, name);
}

const Component* System::find_component(std::string_view name) const {
  for (const auto& c : components) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

void check_connector_types(const std::vector<Port>& ports, const std::string& location_prefix,
                           const ConnectorTypeTable& types, ValidationReport& report) {
  for (const auto& p : ports) {
    if (!types.contains(p.connector_type)) {
      report.add_error("unknown-connector-type", location_prefix + "/" + p.name,
                       "connector type '" + p.connector_type + "' is not declared");
    }
  }
}

// Resolves a linkage endpoint to its connector type, or nullptr when the
// endpoint does not exist with the required role.
const Port* resolve_source(const Component& comp, const LinkEndpoint& ep) {
  if (ep.is_diagram()) return find_port(comp.diagram.inputs, ep.port);
  const auto* block = comp.diagram.find_block(ep.block);
  return block ? block->find_output(ep.port) : nullptr;
}

const Port* resolve_target(const Component& comp, const LinkEndpoint& ep) {
  if (ep.is_diagram()) return find_port(comp.diagram.outputs, ep.port);
  const auto* block = comp.diagram.find_block(ep.block);
  return block ? block->find_input(ep.port) : nullptr;
}

void validate_diagram(const Component& comp, const ConnectorTypeTable& types,
                      ValidationReport& report) {
  const std::string base = comp.name + "/diagram";
  const CfcDiagram& diagram = comp.diagram;

  if (diagram.inputs != comp.inports) {
    report.add_error("diagram-port-mismatch", base,
                     "diagram inputs do not mirror the component inports");
  }
  if (diagram.outputs != comp.outports) {
    report.add_error("diagram-port-mismatch", base,
                     "diagram outputs do not mirror the component outports");
  }

  std::set<std::string> block_names;
  for (const auto& block : diagram.blocks) {
    const std::string block_loc = base + "/" + block.name;
    if (!block_names.insert(block.name).second) {
      report.add_error("duplicate-block-name", block_loc,
                       "block name '" + block.name + "' is used more than once");
    }
    std::set<std::string> param_names;
    for (const auto* params : {&block.inputs, &block.outputs}) {
      for (const auto& p : *params) {
        if (!param_names.insert(p.name).second) {
          report.add_error("duplicate-parameter-name", block_loc + "/" + p.name,
                           "parameter name '" + p.name + "' is used more than once");
        }
      }
    }
    check_connector_types(block.inputs, block_loc, types, report);
    check_connector_types(block.outputs, block_loc, types, report);
  }

  // Incoming-degree bookkeeping for fan-in and driver checks.
  std::map<std::pair<std::string, std::string>, int> param_incoming;
  std::map<std::string, int> output_incoming;

  for (std::size_t i = 0; i < diagram.linkages.size(); ++i) {
    const auto& link = diagram.linkages[i];
    const std::string link_loc = base + "/linkages[" + std::to_string(i) + "]";

    const Port* src = resolve_source(comp, link.source);
    const Port* dst = resolve_target(comp, link.target);
    if (src == nullptr) {
      report.add_error("dangling-linkage-endpoint", link_loc,
                       "source '" + link.source.path() +
                           "' is not a diagram input or block output");
    }
    if (dst == nullptr) {
      report.add_error("dangling-linkage-endpoint", link_loc,
                       "target '" + link.target.path() +
                           "' is not a block input or diagram output");
    }
    if (src != nullptr && dst != nullptr && src->connector_type != dst->connector_type) {
      report.add_error("linkage-type-mismatch", link_loc,
                       "connector type mismatch: '" + link.source.path() + "' is " +
                           src->connector_type + ", '" + link.target.path() + "' is " +
                           dst->connector_type);
    }
    if (dst != nullptr) {
      if (link.target.is_diagram()) {
        ++output_incoming[link.target.port];
      } else {
        ++param_incoming[{link.target.block, link.target.port}];
      }
    }
  }

  for (const auto& block : diagram.blocks) {
    for (const auto& p : block.inputs) {
      const int incoming = param_incoming[{block.name, p.name}];
      const std::string loc = base + "/" + block.name + "/" + p.name;
      if (incoming > 1) {
        report.add_error("input-fan-in", loc,
                         "block input parameter has " + std::to_string(incoming) +
                             " incoming linkages");
      } else if (incoming == 0) {
        report.add_warning("undriven-parameter", loc,
                           "block input parameter has no incoming linkage");
      }
    }
  }
  for (const auto& p : diagram.outputs) {
    const int incoming = output_incoming[p.name];
    if (incoming != 1) {
      report.add_error("output-driver-count", base + "/" + p.name,
                       "diagram output has " + std::to_string(incoming) +
                           " incoming linkages, expected exactly 1");
    }
  }

  try {
    topological_block_order(diagram);
  } catch (const CycleError& e) {
    report.add_error("linkage-cycle", base, e.what());
  }
}

}  // namespace

ValidationReport validate_system(const System& system, const ConnectorTypeTable& types) {
  ValidationReport report;

  std::set<std::string> component_names;
  for (const auto& comp : system.components) {
    if (!component_names.insert(comp.name).second) {
      report.add_error("duplicate-component-name", comp.name,
                       "component name '" + comp.name + "' is used more than once");
    }

    std::set<std::string> port_names;
    for (const auto* ports : {&comp.inports, &comp.outports}) {
      for (const auto& p : *ports) {
        if (!port_names.insert(p.name).second) {
          report.add_error("duplicate-port-name", comp.name + "/" + p.name,
                           "port name '" + p.name + "' is used more than once");
        }
      }
    }
    check_connector_types(comp.inports, comp.name, types, report);
    check_connector_types(comp.outports, comp.name, types, report);

    validate_diagram(comp, types, report);
  }

  std::set<std::pair<std::string, std::string>> connection_targets;
  for (std::size_t i = 0; i < system.connections.size(); ++i) {
    const auto& con = system.connections[i];
    const std::string loc = "connections[" + std::to_string(i) + "]";

    if (con.from_component == con.to_component) {
      report.add_error("self-connection", loc,
                       "connection joins two ports of component '" + con.from_component + "'");
      continue;
    }

    const Port* from = nullptr;
    const Port* to = nullptr;
    if (const auto* comp = system.find_component(con.from_component)) {
      from = comp->find_outport(con.from_port);
      if (from == nullptr) {
        report.add_error("unknown-port", loc,
                         "'" + con.from_component + "/" + con.from_port +
                             "' is not an outport");
      }
    } else {
      report.add_error("unknown-component", loc,
                       "component '" + con.from_component + "' does not exist");
    }
    if (const auto* comp = system.find_component(con.to_component)) {
      to = comp->find_inport(con.to_port);
      if (to == nullptr) {
        report.add_error("unknown-port", loc,
                         "'" + con.to_component + "/" + con.to_port + "' is not an inport");
      }
    } else {
      report.add_error("unknown-component", loc,
                       "component '" + con.to_component + "' does not exist");
    }

    if (to != nullptr &&
        !connection_targets.insert({con.to_component, con.to_port}).second) {
      report.add_error("duplicate-connection-target", loc,
                       "inport '" + con.to_component + "/" + con.to_port +
                           "' is driven by more than one connection");
    }
    if (from != nullptr && to != nullptr && from->connector_type != to->connector_type) {
      report.add_error("connection-type-mismatch", loc,
                       "connector type mismatch: '" + con.from_component + "/" + con.from_port +
                           "' is " + from->connector_type + ", '" + con.to_component + "/" +
                           con.to_port + "' is " + to->connector_type);
    }
  }

  return report;
}

std::vector<const FunctionBlockInstance*> topological_block_order(const CfcDiagram& diagram) {
  const std::size_t n = diagram.blocks.size();
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < n; ++i) index_of.emplace(diagram.blocks[i].name, i);

  // Block-level dependency edges induced by block-output -> block-input
  // linkages; diagram ports do not constrain the order.
  std::vector<std::set<std::size_t>> successors(n);
  std::vector<std::size_t> in_degree(n, 0);
  for (const auto& link : diagram.linkages) {
    if (link.source.is_diagram() || link.target.is_diagram()) continue;
    auto src = index_of.find(link.source.block);
    auto dst = index_of.find(link.target.block);
    if (src == index_of.end() || dst == index_of.end()) continue;
    if (successors[src->second].insert(dst->second).second) {
      ++in_degree[dst->second];
    }
  }

  // Kahn's algorithm; the ready set is kept in declaration order so that
  // independent blocks come out exactly as declared.
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_degree[i] == 0) ready.insert(i);
  }
  std::vector<const FunctionBlockInstance*> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(&diagram.blocks[i]);
    for (std::size_t j : successors[i]) {
      if (--in_degree[j] == 0) ready.insert(j);
    }
  }

  if (order.size() != n) {
    // Name one concrete cycle. Every unprocessed node still has an
    // unprocessed predecessor, so a predecessor walk must revisit a node,
    // and that node closes a cycle.
    std::set<std::size_t> stuck;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_degree[i] > 0) stuck.insert(i);
    }
    std::vector<std::vector<std::size_t>> stuck_preds(n);
    for (std::size_t i : stuck) {
      for (std::size_t j : successors[i]) {
        if (stuck.count(j) != 0) stuck_preds[j].push_back(i);
      }
    }
    std::vector<std::size_t> path;
    std::set<std::size_t> seen;
    std::size_t cur = *stuck.begin();
    while (seen.insert(cur).second) {
      path.push_back(cur);
      cur = stuck_preds[cur].front();
    }
    const auto start = std::find(path.begin(), path.end(), cur);
    std::vector<std::string> names;
    for (auto it = start; it != path.end(); ++it) {
      names.push_back(diagram.blocks[*it].name);
    }
    std::reverse(names.begin(), names.end());
    throw CycleError(std::move(names));
  }
  return order;
}

}  // namespace cftgen
