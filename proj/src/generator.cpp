#include "cftgen/generator.hpp"

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>

#include "cftgen/errors.hpp"
#include "cftgen/version.hpp"

namespace cftgen {

std::string_view to_string(TraceRecord::Kind kind) {
  switch (kind) {
    case TraceRecord::Kind::ElementCreated: return "element-created";
    case TraceRecord::Kind::FailureModeCreated: return "failure-mode-created";
    case TraceRecord::Kind::RuleApplied: return "rule-applied";
    case TraceRecord::Kind::WorstCaseApplied: return "worst-case-applied";
    case TraceRecord::Kind::TermEliminated: return "term-eliminated";
    case TraceRecord::Kind::EdgeCreated: return "edge-created";
  }
  return "?";
}

namespace {

std::string ifm_id(const std::string& component, const std::string& port, FailureType fty) {
  return component + "/in/" + port + "/" + std::string(to_string(fty));
}

std::string ofm_id(const std::string& component, const std::string& port, FailureType fty) {
  return component + "/out/" + port + "/" + std::string(to_string(fty));
}

void record(GenerationTrace* trace, TraceRecord rec) {
  if (trace != nullptr) trace->records.push_back(std::move(rec));
}

// Instantiates one component's failure propagation into its CFT element.
class ElementBuilder {
 public:
  ElementBuilder(const Component& comp, CftElement& element, const RuleLibrary& lib,
                 const ConnectorTypeTable& table, const GenerationOptions& opts,
                 GenerationTrace* trace)
      : comp_(comp), element_(element), lib_(lib), table_(table), opts_(opts), trace_(trace) {
    for (const auto& link : comp.diagram.linkages) {
      if (link.target.is_diagram()) {
        output_driver_.emplace(link.target.port, link.source);
      } else {
        param_driver_.emplace(std::make_pair(link.target.block, link.target.port), link.source);
      }
    }
  }

  void run() {
    for (const auto* block : topological_block_order(comp_.diagram)) {
      instantiate_block(*block);
    }
    connect_outputs();
  }

 private:
  using MemoKey = std::tuple<std::string, std::string, FailureType>;

  void instantiate_block(const FunctionBlockInstance& block) {
    const RuleSet* rules = lookup_rules(lib_, block.block_type);
    RuleSet synthesized;
    if (rules == nullptr) {
      if (!opts_.worst_case_fallback) {
        throw NoRuleAvailableError(comp_.name + "/" + block.name, block.block_type);
      }
      synthesized = synthesize_worst_case(block, table_);
      rules = &synthesized;
      TraceRecord rec{};
      rec.kind = TraceRecord::Kind::WorstCaseApplied;
      rec.component = comp_.name;
      rec.block = block.name;
      rec.subject = block.block_type;
      record(trace_, std::move(rec));
    }

    ValidationReport bound = validate_rule_set(*rules, block, table_);
    if (!bound.ok()) {
      const Finding first = bound.errors().front();
      throw GenerationError("invalid rule set '" + block.block_type + "' for block '" +
                            comp_.name + "/" + block.name + "': " + first.message);
    }

    for (const auto& output : block.outputs) {
      for (auto fty : table_.failure_types(output.connector_type).to_vector()) {
        const MemoKey key{block.name, output.name, fty};
        auto rule = rules->rules.find(RuleKey{output.name, fty});
        if (rule == rules->rules.end()) {
          memo_.emplace(key, std::nullopt);  // no propagation for this failure type
          continue;
        }
        const std::string rule_name =
            output.name + "." + std::string(to_string(fty));
        auto pruned = prune(rule->second, block, rule_name);
        if (!pruned.has_value()) {
          memo_.emplace(key, std::nullopt);
          continue;
        }
        TraceRecord rec{};
        rec.kind = TraceRecord::Kind::RuleApplied;
        rec.component = comp_.name;
        rec.block = block.name;
        rec.subject = rule_name;
        int counter = 0;
        const std::string root = instantiate(*pruned, block, output.name, fty, counter, rec.gates);
        rec.to = root;
        memo_.emplace(key, root);
        record(trace_, std::move(rec));
      }
    }
  }

  // Removes terms that cannot fail: undriven parameters under the
  // eliminate-as-false policy and upstream outputs without propagation.
  // FALSE operands drop out of a disjunction and collapse a conjunction;
  // under a non-monotone operator there is no sound simplification.
  std::optional<RuleExpr> prune(const RuleExpr& expr, const FunctionBlockInstance& block,
                                const std::string& rule_name) {
    switch (expr.kind()) {
      case RuleExpr::Kind::Term: {
        if (term_drivable(expr, block)) return expr;
        TraceRecord rec{};
        rec.kind = TraceRecord::Kind::TermEliminated;
        rec.component = comp_.name;
        rec.block = block.name;
        rec.subject = expr.param() + "." + std::string(to_string(expr.failure_type()));
        rec.to = rule_name;
        record(trace_, std::move(rec));
        return std::nullopt;
      }
      case RuleExpr::Kind::Not:
      case RuleExpr::Kind::Xor: {
        std::vector<RuleExpr> kept;
        for (const auto& op : expr.operands()) {
          auto p = prune(op, block, rule_name);
          if (!p.has_value()) {
            throw GenerationError("rule '" + rule_name + "' of block '" + comp_.name + "/" +
                                  block.name +
                                  "' applies a non-monotone operator to an eliminated term");
          }
          kept.push_back(std::move(*p));
        }
        if (expr.kind() == RuleExpr::Kind::Not) return RuleExpr::negation(std::move(kept.front()));
        return RuleExpr::exclusive_or(std::move(kept.front()), std::move(kept.back()));
      }
      case RuleExpr::Kind::And: {
        std::vector<RuleExpr> kept;
        for (const auto& op : expr.operands()) {
          auto p = prune(op, block, rule_name);
          if (!p.has_value()) return std::nullopt;  // FALSE AND x = FALSE
          kept.push_back(std::move(*p));
        }
        return RuleExpr::conjunction(std::move(kept));
      }
      case RuleExpr::Kind::Or: {
        std::vector<RuleExpr> kept;
        for (const auto& op : expr.operands()) {
          auto p = prune(op, block, rule_name);
          if (p.has_value()) kept.push_back(std::move(*p));  // FALSE OR x = x
        }
        if (kept.empty()) return std::nullopt;
        return RuleExpr::disjunction(std::move(kept));
      }
    }
    return std::nullopt;
  }

  bool term_drivable(const RuleExpr& term, const FunctionBlockInstance& block) {
    auto driver = param_driver_.find({block.name, term.param()});
    if (driver == param_driver_.end()) {
      return opts_.undriven_input_policy == UndrivenInputPolicy::SynthesizeBasicEvent;
    }
    if (driver->second.is_diagram()) return true;
    return memo_.at({driver->second.block, driver->second.port, term.failure_type()}).has_value();
  }

  std::string instantiate(const RuleExpr& expr, const FunctionBlockInstance& block,
                          const std::string& out_param, FailureType out_fty, int& counter,
                          std::vector<TraceGate>& created) {
    if (expr.kind() == RuleExpr::Kind::Term) {
      return resolve_term(expr, block);
    }
    std::vector<std::string> inputs;
    for (const auto& op : expr.operands()) {
      inputs.push_back(instantiate(op, block, out_param, out_fty, counter, created));
    }
    GateKind kind = GateKind::And;
    switch (expr.kind()) {
      case RuleExpr::Kind::Not: kind = GateKind::Not; break;
      case RuleExpr::Kind::And: kind = GateKind::And; break;
      case RuleExpr::Kind::Or: kind = GateKind::Or; break;
      case RuleExpr::Kind::Xor: kind = GateKind::Xor; break;
      case RuleExpr::Kind::Term: break;
    }
    const std::string id = comp_.name + "/" + block.name + "/" + out_param + "/" +
                           std::string(to_string(out_fty)) + "/g" + std::to_string(counter++);
    element_.add_gate(id, kind, inputs);
    created.push_back({id, kind, inputs});
    for (const auto& input : inputs) {
      TraceRecord rec{};
      rec.kind = TraceRecord::Kind::EdgeCreated;
      rec.component = comp_.name;
      rec.from = input;
      rec.to = id;
      record(trace_, std::move(rec));
    }
    return id;
  }

  std::string resolve_term(const RuleExpr& term, const FunctionBlockInstance& block) {
    auto driver = param_driver_.find({block.name, term.param()});
    if (driver == param_driver_.end()) {
      return synthetic_ifm(block, term.param(), term.failure_type());
    }
    return resolve_endpoint(driver->second, term.failure_type());
  }

  // A source endpoint carries a failure: a diagram input contributes its
  // input failure mode, a block output the memoized root of that output's
  // instantiated rule.
  std::string resolve_endpoint(const LinkEndpoint& source, FailureType fty) {
    if (source.is_diagram()) {
      return ifm_id(comp_.name, source.port, fty);
    }
    return *memo_.at({source.block, source.port, fty});
  }

  // Boundary failure mode for an undriven (constant) parameter, created on
  // first reference under the synthesize-basic-event policy.
  std::string synthetic_ifm(const FunctionBlockInstance& block, const std::string& param,
                            FailureType fty) {
    const std::string port = block.name + "/" + param;
    const std::string id = ifm_id(comp_.name, port, fty);
    if (element_.find_ifm(port, fty) == nullptr) {
      element_.input_failure_modes.push_back({id, port, fty});
      TraceRecord rec{};
      rec.kind = TraceRecord::Kind::FailureModeCreated;
      rec.component = comp_.name;
      rec.subject = id;
      rec.port = port;
      rec.failure_type = std::string(to_string(fty));
      rec.direction = "input";
      record(trace_, std::move(rec));
    }
    return id;
  }

  void connect_outputs() {
    for (const auto& output : comp_.diagram.outputs) {
      auto driver = output_driver_.find(output.name);
      if (driver == output_driver_.end()) continue;  // validation reports this
      for (auto fty : table_.failure_types(output.connector_type).to_vector()) {
        std::optional<std::string> source;
        if (driver->second.is_diagram()) {
          source = ifm_id(comp_.name, driver->second.port, fty);
        } else {
          source = memo_.at({driver->second.block, driver->second.port, fty});
        }
        if (!source.has_value()) continue;  // the failure type does not propagate
        const std::string target = ofm_id(comp_.name, output.name, fty);
        element_.edges.push_back({*source, target});
        TraceRecord rec{};
        rec.kind = TraceRecord::Kind::EdgeCreated;
        rec.component = comp_.name;
        rec.from = *source;
        rec.to = target;
        record(trace_, std::move(rec));
      }
    }
  }

  const Component& comp_;
  CftElement& element_;
  const RuleLibrary& lib_;
  const ConnectorTypeTable& table_;
  const GenerationOptions& opts_;
  GenerationTrace* trace_;
  std::map<std::pair<std::string, std::string>, LinkEndpoint> param_driver_;
  std::map<std::string, LinkEndpoint> output_driver_;
  std::map<MemoKey, std::optional<std::string>> memo_;
};

}  // namespace

CftProject generate_elements(const System& system, const GenerationOptions& opts,
                             GenerationTrace* trace) {
  CftProject project;
  for (const auto& comp : system.components) {
    CftElement element;
    element.component = comp.name;
    element.inports = comp.inports;
    element.outports = comp.outports;
    project.elements.push_back(std::move(element));

    TraceRecord rec{};
    rec.kind = TraceRecord::Kind::ElementCreated;
    rec.component = comp.name;
    rec.inports = comp.inports;
    rec.outports = comp.outports;
    record(trace, std::move(rec));
  }

  std::vector<PortLink> links;
  auto add_link = [&links](PortLink link) {
    for (const auto& existing : links) {
      if (existing == link) return;
    }
    links.push_back(std::move(link));
  };

  if (opts.cross_wiring != CrossWiring::NameMatching) {
    for (const auto& con : system.connections) {
      add_link({con.from_component, con.from_port, con.to_component, con.to_port});
    }
  }
  if (opts.cross_wiring != CrossWiring::ExplicitConnections) {
    for (const auto& from : system.components) {
      for (const auto& to : system.components) {
        if (from.name == to.name) continue;
        for (const auto& outport : from.outports) {
          for (const auto& inport : to.inports) {
            if (outport.name == inport.name &&
                outport.connector_type == inport.connector_type) {
              add_link({from.name, outport.name, to.name, inport.name});
            }
          }
        }
      }
    }
  }

  std::map<std::pair<std::string, std::string>, const PortLink*> by_target;
  for (const auto& link : links) {
    auto [it, inserted] = by_target.emplace(std::make_pair(link.to_component, link.to_port), &link);
    if (!inserted) {
      throw AmbiguousNameMatchError(
          "inport '" + link.to_component + "/" + link.to_port + "' matches outports '" +
          it->second->from_component + "/" + it->second->from_port + "' and '" +
          link.from_component + "/" + link.from_port + "'");
    }
  }

  for (const auto& link : links) {
    TraceRecord rec{};
    rec.kind = TraceRecord::Kind::EdgeCreated;
    rec.from = link.from_component + "/" + link.from_port;
    rec.to = link.to_component + "/" + link.to_port;
    record(trace, std::move(rec));
  }
  project.port_links = std::move(links);
  return project;
}

CftProject generate_failure_modes(CftProject project, const System& system,
                                  const ConnectorTypeTable& table, GenerationTrace* trace) {
  auto add_failure_modes = [&](CftElement& element, const std::vector<Port>& ports,
                               FmDirection direction) {
    for (const auto& port : ports) {
      for (auto fty : table.failure_types(port.connector_type).to_vector()) {
        const bool input = direction == FmDirection::Input;
        FailureMode fm{input ? ifm_id(element.component, port.name, fty)
                             : ofm_id(element.component, port.name, fty),
                       port.name, fty};
        TraceRecord rec{};
        rec.kind = TraceRecord::Kind::FailureModeCreated;
        rec.component = element.component;
        rec.subject = fm.id;
        rec.port = port.name;
        rec.failure_type = std::string(to_string(fty));
        rec.direction = input ? "input" : "output";
        record(trace, std::move(rec));
        (input ? element.input_failure_modes : element.output_failure_modes)
            .push_back(std::move(fm));
      }
    }
  };

  for (const auto& comp : system.components) {
    for (auto& element : project.elements) {
      if (element.component != comp.name) continue;
      add_failure_modes(element, element.inports, FmDirection::Input);
      add_failure_modes(element, element.outports, FmDirection::Output);
    }
  }

  for (const auto& pl : project.port_links) {
    const CftElement* from = project.find_element(pl.from_component);
    const CftElement* to = project.find_element(pl.to_component);
    if (from == nullptr || to == nullptr) continue;
    const Port* from_port = nullptr;
    for (const auto& p : from->outports) {
      if (p.name == pl.from_port) from_port = &p;
    }
    const Port* to_port = nullptr;
    for (const auto& p : to->inports) {
      if (p.name == pl.to_port) to_port = &p;
    }
    if (from_port == nullptr || to_port == nullptr) continue;
    const FailureTypeSet to_set = table.failure_types(to_port->connector_type);
    for (auto fty : table.failure_types(from_port->connector_type).to_vector()) {
      if (!to_set.contains(fty)) continue;
      project.links.push_back(
          {pl.from_component, pl.from_port, pl.to_component, pl.to_port, fty});
      TraceRecord rec{};
      rec.kind = TraceRecord::Kind::EdgeCreated;
      rec.from = ofm_id(pl.from_component, pl.from_port, fty);
      rec.to = ifm_id(pl.to_component, pl.to_port, fty);
      rec.failure_type = std::string(to_string(fty));
      record(trace, std::move(rec));
    }
  }
  return project;
}

CftProject generate_propagation(CftProject project, const System& system, const RuleLibrary& lib,
                                const GenerationOptions& opts, GenerationTrace* trace) {
  for (const auto& comp : system.components) {
    for (auto& element : project.elements) {
      if (element.component != comp.name) continue;
      ElementBuilder(comp, element, lib, lib.connector_types, opts, trace).run();
    }
  }
  return project;
}

GenerationResult generate(const System& system, const RuleLibrary& lib,
                          const GenerationOptions& opts) {
  GenerationResult result;
  result.project = generate_elements(system, opts, &result.trace);
  result.project = generate_failure_modes(std::move(result.project), system,
                                          lib.connector_types, &result.trace);
  result.project =
      generate_propagation(std::move(result.project), system, lib, opts, &result.trace);
  result.project.metadata.emplace_back("tool", kToolName);
  result.project.metadata.emplace_back("version", kToolVersion);
  return result;
}

}  // namespace cftgen
