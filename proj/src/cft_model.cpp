#include "cftgen/cft_model.hpp"

#include <map>
#include <set>
#include <tuple>

#include "cftgen/errors.hpp"

namespace cftgen {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::And: return "and";
    case GateKind::Or: return "or";
    case GateKind::Xor: return "xor";
    case GateKind::Not: return "not";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  if (name == "and") return GateKind::And;
  if (name == "or") return GateKind::Or;
  if (name == "xor") return GateKind::Xor;
  if (name == "not") return GateKind::Not;
  return std::nullopt;
}

void CftElement::add_gate(std::string id, GateKind kind,
                          const std::vector<std::string>& inputs) {
  for (const auto& input : inputs) edges.push_back({input, id});
  gates.push_back({std::move(id), kind});
}

namespace {

const FailureMode* find_fm(const std::vector<FailureMode>& fms, std::string_view port,
                           FailureType fty) {
  for (const auto& fm : fms) {
    if (fm.port == port && fm.failure_type == fty) return &fm;
  }
  return nullptr;
}

}  // namespace

const FailureMode* CftElement::find_ifm(std::string_view port, FailureType fty) const {
  return find_fm(input_failure_modes, port, fty);
}

const FailureMode* CftElement::find_ofm(std::string_view port, FailureType fty) const {
  return find_fm(output_failure_modes, port, fty);
}

const Gate* CftElement::find_gate(std::string_view id) const {
  for (const auto& g : gates) {
    if (g.id == id) return &g;
  }
  return nullptr;
}

const CftElement* CftProject::find_element(std::string_view component) const {
  for (const auto& el : elements) {
    if (el.component == component) return &el;
  }
  return nullptr;
}

std::string TopEvent::path() const {
  return component + "/" + port + "/" + std::string(to_string(failure_type));
}

const FlatNode* ClassicFaultTree::find(std::string_view id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

namespace {

enum class NodeRole { Ifm, Ofm, GateNode };

// Per-element lookup structures shared by validation and flattening.
struct ElementIndex {
  const CftElement* element = nullptr;
  std::map<std::string, NodeRole> role;                    // node id -> role
  std::map<std::string, const Gate*> gate_by_id;
  std::map<std::string, const FailureMode*> fm_by_id;
  std::map<std::string, std::vector<std::string>> inputs;  // gate id -> sources, pin order
  std::map<std::string, std::vector<std::string>> ofm_sources;
};

ElementIndex index_element(const CftElement& el) {
  ElementIndex idx;
  idx.element = &el;
  for (const auto& fm : el.input_failure_modes) {
    idx.role[fm.id] = NodeRole::Ifm;
    idx.fm_by_id[fm.id] = &fm;
  }
  for (const auto& fm : el.output_failure_modes) {
    idx.role[fm.id] = NodeRole::Ofm;
    idx.fm_by_id[fm.id] = &fm;
  }
  for (const auto& g : el.gates) {
    idx.role[g.id] = NodeRole::GateNode;
    idx.gate_by_id[g.id] = &g;
  }
  for (const auto& e : el.edges) {
    auto target_role = idx.role.find(e.target);
    if (target_role == idx.role.end()) continue;
    if (target_role->second == NodeRole::GateNode) {
      idx.inputs[e.target].push_back(e.source);
    } else if (target_role->second == NodeRole::Ofm) {
      idx.ofm_sources[e.target].push_back(e.source);
    }
  }
  return idx;
}

void validate_element(const CftElement& el, ValidationReport& report) {
  const std::string& base = el.component;

  std::set<std::string> ids;
  auto check_id = [&](const std::string& id, const char* what) {
    if (!ids.insert(id).second) {
      report.add_error("duplicate-node-id", base + "/" + id,
                       std::string(what) + " id '" + id + "' is used more than once");
    }
  };

  std::set<std::pair<std::string, FailureType>> keys;
  for (const auto& fm : el.input_failure_modes) {
    check_id(fm.id, "failure mode");
    if (!keys.insert({fm.port, fm.failure_type}).second) {
      report.add_error("duplicate-failure-mode", base + "/" + fm.id,
                       "duplicate input failure mode for port '" + fm.port + "'");
    }
  }
  keys.clear();
  for (const auto& fm : el.output_failure_modes) {
    check_id(fm.id, "failure mode");
    if (!keys.insert({fm.port, fm.failure_type}).second) {
      report.add_error("duplicate-failure-mode", base + "/" + fm.id,
                       "duplicate output failure mode for port '" + fm.port + "'");
    }
  }
  for (const auto& g : el.gates) check_id(g.id, "gate");

  const ElementIndex idx = index_element(el);

  for (std::size_t i = 0; i < el.edges.size(); ++i) {
    const auto& e = el.edges[i];
    const std::string loc = base + "/edges[" + std::to_string(i) + "]";
    auto src = idx.role.find(e.source);
    auto dst = idx.role.find(e.target);
    if (src == idx.role.end()) {
      report.add_error("dangling-node-ref", loc, "edge source '" + e.source + "' does not exist");
    } else if (src->second == NodeRole::Ofm) {
      report.add_error("edge-source-kind", loc,
                       "edge source '" + e.source +
                           "' is an output failure mode; sources must be input failure modes "
                           "or gates");
    }
    if (dst == idx.role.end()) {
      report.add_error("dangling-node-ref", loc, "edge target '" + e.target + "' does not exist");
    } else if (dst->second == NodeRole::Ifm) {
      report.add_error("edge-target-kind", loc,
                       "edge target '" + e.target +
                           "' is an input failure mode; targets must be gates or output "
                           "failure modes");
    }
  }

  for (const auto& g : el.gates) {
    auto it = idx.inputs.find(g.id);
    const std::size_t arity = it == idx.inputs.end() ? 0 : it->second.size();
    if (g.kind == GateKind::Not ? arity != 1 : arity < 2) {
      report.add_error("gate-arity", base + "/" + g.id,
                       std::string(to_string(g.kind)) + " gate has " + std::to_string(arity) +
                           " inputs");
    }
  }

  for (const auto& [ofm, sources] : idx.ofm_sources) {
    if (sources.size() > 1) {
      report.add_error("ofm-fan-in", base + "/" + ofm,
                       "output failure mode has " + std::to_string(sources.size()) +
                           " incoming edges, at most 1 allowed");
    }
  }

  // Cycle check over the element's edge graph.
  std::map<std::string, int> color;  // 0 unvisited, 1 on stack, 2 done
  bool cyclic = false;
  auto dfs = [&](auto&& self, const std::string& id) -> void {
    int& c = color[id];
    if (c == 1) {
      cyclic = true;
      return;
    }
    if (c == 2 || cyclic) return;
    c = 1;
    if (auto it = idx.inputs.find(id); it != idx.inputs.end()) {
      for (const auto& src : it->second) self(self, src);
    }
    c = 2;
  };
  for (const auto& g : el.gates) {
    dfs(dfs, g.id);
    if (cyclic) {
      report.add_error("element-cycle", base, "failure propagation graph has a cycle");
      break;
    }
  }
}

}  // namespace

ValidationReport validate_cft(const CftProject& project) {
  ValidationReport report;

  std::set<std::string> names;
  for (const auto& el : project.elements) {
    if (!names.insert(el.component).second) {
      report.add_error("duplicate-element", el.component,
                       "element for component '" + el.component + "' appears more than once");
    }
    validate_element(el, report);
  }

  auto port_type = [&](const std::string& component, const std::string& port,
                       bool outport) -> const Port* {
    const auto* el = project.find_element(component);
    if (el == nullptr) return nullptr;
    const auto& ports = outport ? el->outports : el->inports;
    for (const auto& p : ports) {
      if (p.name == port) return &p;
    }
    return nullptr;
  };

  std::set<std::pair<std::string, std::string>> port_link_targets;
  std::set<PortLink> port_link_set;
  for (std::size_t i = 0; i < project.port_links.size(); ++i) {
    const auto& pl = project.port_links[i];
    const std::string loc = "port_links[" + std::to_string(i) + "]";
    const Port* from = port_type(pl.from_component, pl.from_port, true);
    const Port* to = port_type(pl.to_component, pl.to_port, false);
    if (from == nullptr) {
      report.add_error("port-link-unknown", loc,
                       "'" + pl.from_component + "/" + pl.from_port + "' is not an outport");
    }
    if (to == nullptr) {
      report.add_error("port-link-unknown", loc,
                       "'" + pl.to_component + "/" + pl.to_port + "' is not an inport");
    }
    if (from != nullptr && to != nullptr && from->connector_type != to->connector_type) {
      report.add_error("port-link-type-mismatch", loc,
                       "connector types differ: " + from->connector_type + " vs " +
                           to->connector_type);
    }
    if (to != nullptr && !port_link_targets.insert({pl.to_component, pl.to_port}).second) {
      report.add_error("port-link-fan-in", loc,
                       "inport '" + pl.to_component + "/" + pl.to_port +
                           "' is driven by more than one port link");
    }
    port_link_set.insert(pl);
  }

  std::set<std::tuple<std::string, std::string, FailureType>> link_targets;
  for (std::size_t i = 0; i < project.links.size(); ++i) {
    const auto& link = project.links[i];
    const std::string loc = "links[" + std::to_string(i) + "]";
    const auto* from_el = project.find_element(link.from_component);
    const auto* to_el = project.find_element(link.to_component);
    if (from_el == nullptr || from_el->find_ofm(link.from_port, link.failure_type) == nullptr) {
      report.add_error("link-unknown-endpoint", loc,
                       "no output failure mode '" + link.from_component + "/" + link.from_port +
                           "/" + std::string(to_string(link.failure_type)) + "'");
    }
    if (to_el == nullptr || to_el->find_ifm(link.to_port, link.failure_type) == nullptr) {
      report.add_error("link-unknown-endpoint", loc,
                       "no input failure mode '" + link.to_component + "/" + link.to_port + "/" +
                           std::string(to_string(link.failure_type)) + "'");
    }
    if (port_link_set.count({link.from_component, link.from_port, link.to_component,
                             link.to_port}) == 0) {
      report.add_error("link-without-port-link", loc,
                       "failure-mode link is not backed by a port link");
    }
    if (!link_targets.insert({link.to_component, link.to_port, link.failure_type}).second) {
      report.add_error("link-fan-in", loc,
                       "input failure mode '" + link.to_component + "/" + link.to_port + "/" +
                           std::string(to_string(link.failure_type)) +
                           "' is driven by more than one link");
    }
  }

  return report;
}

namespace {

class Flattener {
 public:
  Flattener(const CftProject& project, const TopEvent& top) {
    for (const auto& el : project.elements) indices_.emplace(el.component, index_element(el));
    for (const auto& link : project.links) {
      link_source_[{link.to_component, link.to_port, link.failure_type}] = {
          link.from_component, link.from_port};
    }
    tree_.top_event = top.path();
  }

  ClassicFaultTree run(const TopEvent& top) {
    auto idx = indices_.find(top.component);
    const FailureMode* ofm =
        idx == indices_.end() ? nullptr : idx->second.element->find_ofm(top.port, top.failure_type);
    if (ofm == nullptr) {
      throw UnknownTopError("no output failure mode '" + top.path() + "'");
    }
    const auto sources = idx->second.ofm_sources.find(ofm->id);
    if (sources == idx->second.ofm_sources.end() || sources->second.empty()) {
      tree_.root = emit("false", FlatNodeKind::ConstantFalse, {});
    } else {
      tree_.root = build(top.component, sources->second.front());
    }
    return std::move(tree_);
  }

 private:
  std::string emit(const std::string& id, FlatNodeKind kind, std::vector<std::string> children) {
    if (emitted_.insert(id).second) {
      tree_.nodes.push_back({id, kind, std::move(children)});
    }
    return id;
  }

  static FlatNodeKind to_flat(GateKind kind) {
    switch (kind) {
      case GateKind::And: return FlatNodeKind::And;
      case GateKind::Or: return FlatNodeKind::Or;
      case GateKind::Xor: return FlatNodeKind::Xor;
      case GateKind::Not: return FlatNodeKind::Not;
    }
    return FlatNodeKind::And;
  }

  static std::string basic_event_id(const std::string& component, const std::string& port,
                                    FailureType fty) {
    return component + "." + port + "." + std::string(to_string(fty));
  }

  // Maps (component, node id) to the flattened node id, recursing through
  // gates and across inter-element links.
  std::string build(const std::string& component, const std::string& node_id) {
    const std::string key = component + "\n" + node_id;
    if (auto it = done_.find(key); it != done_.end()) return it->second;
    if (!on_stack_.insert(key).second) {
      throw CyclicModelError("failure propagation is cyclic through '" + component + "/" +
                             node_id + "'");
    }

    const ElementIndex& idx = indices_.at(component);
    std::string result;
    const auto role = idx.role.find(node_id);
    if (role == idx.role.end()) {
      throw Error("dangling node reference '" + component + "/" + node_id + "'");
    }
    switch (role->second) {
      case NodeRole::GateNode: {
        std::vector<std::string> children;
        for (const auto& src : idx.inputs.at(node_id)) {
          children.push_back(build(component, src));
        }
        result = emit(node_id, to_flat(idx.gate_by_id.at(node_id)->kind), std::move(children));
        break;
      }
      case NodeRole::Ifm: {
        const FailureMode& fm = *idx.fm_by_id.at(node_id);
        auto link = link_source_.find({component, fm.port, fm.failure_type});
        if (link == link_source_.end()) {
          // System-boundary inport: the failure enters here.
          result = emit(basic_event_id(component, fm.port, fm.failure_type),
                        FlatNodeKind::BasicEvent, {});
          break;
        }
        const auto& [up_component, up_port] = link->second;
        const ElementIndex& up = indices_.at(up_component);
        const FailureMode* up_ofm = up.element->find_ofm(up_port, fm.failure_type);
        const auto sources =
            up_ofm == nullptr ? up.ofm_sources.end() : up.ofm_sources.find(up_ofm->id);
        if (sources == up.ofm_sources.end() || sources->second.empty()) {
          // The upstream element does not model this failure's causes; it
          // becomes an atomic event at the upstream outport.
          result = emit(basic_event_id(up_component, up_port, fm.failure_type),
                        FlatNodeKind::BasicEvent, {});
        } else {
          result = build(up_component, sources->second.front());
        }
        break;
      }
      case NodeRole::Ofm:
        // Unreachable for valid projects: edges never leave an OFM.
        throw Error("edge source '" + node_id + "' is an output failure mode");
    }

    on_stack_.erase(key);
    done_.emplace(key, result);
    return result;
  }

  std::map<std::string, ElementIndex> indices_;
  std::map<std::tuple<std::string, std::string, FailureType>, std::pair<std::string, std::string>>
      link_source_;
  ClassicFaultTree tree_;
  std::set<std::string> emitted_;
  std::map<std::string, std::string> done_;
  std::set<std::string> on_stack_;
};

}  // namespace

ClassicFaultTree flatten(const CftProject& project, const TopEvent& top) {
  return Flattener(project, top).run(top);
}

}  // namespace cftgen
