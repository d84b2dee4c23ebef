#include "cftgen/rule_engine.hpp"

#include <utility>

namespace cftgen {

RuleExpr RuleExpr::term(std::string param, FailureType fty) {
  RuleExpr e;
  e.kind_ = Kind::Term;
  e.param_ = std::move(param);
  e.fty_ = fty;
  return e;
}

RuleExpr RuleExpr::negation(RuleExpr operand) {
  RuleExpr e;
  e.kind_ = Kind::Not;
  e.operands_.push_back(std::move(operand));
  return e;
}

namespace {

RuleExpr make_nary(RuleExpr::Kind kind, std::vector<RuleExpr> operands) {
  // Collapse nested operands of the same kind; a single operand collapses
  // to itself.
  std::vector<RuleExpr> flat;
  for (auto& op : operands) {
    if (op.kind() == kind) {
      for (const auto& sub : op.operands()) flat.push_back(sub);
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.size() == 1) return flat.front();
  if (kind == RuleExpr::Kind::And) return RuleExpr::conjunction(std::move(flat));
  return RuleExpr::disjunction(std::move(flat));
}

}  // namespace

RuleExpr RuleExpr::conjunction(std::vector<RuleExpr> operands) {
  bool nested = false;
  for (const auto& op : operands) nested = nested || op.kind() == Kind::And;
  if (nested || operands.size() == 1) return make_nary(Kind::And, std::move(operands));
  RuleExpr e;
  e.kind_ = Kind::And;
  e.operands_ = std::move(operands);
  return e;
}

RuleExpr RuleExpr::disjunction(std::vector<RuleExpr> operands) {
  bool nested = false;
  for (const auto& op : operands) nested = nested || op.kind() == Kind::Or;
  if (nested || operands.size() == 1) return make_nary(Kind::Or, std::move(operands));
  RuleExpr e;
  e.kind_ = Kind::Or;
  e.operands_ = std::move(operands);
  return e;
}

RuleExpr RuleExpr::exclusive_or(RuleExpr lhs, RuleExpr rhs) {
  RuleExpr e;
  e.kind_ = Kind::Xor;
  e.operands_.push_back(std::move(lhs));
  e.operands_.push_back(std::move(rhs));
  return e;
}

void RuleExpr::visit_terms(const std::function<void(const RuleExpr&)>& fn) const {
  if (kind_ == Kind::Term) {
    fn(*this);
    return;
  }
  for (const auto& op : operands_) op.visit_terms(fn);
}

namespace {

int precedence(RuleExpr::Kind kind) {
  switch (kind) {
    case RuleExpr::Kind::Term: return 4;
    case RuleExpr::Kind::Not: return 3;
    case RuleExpr::Kind::And: return 2;
    case RuleExpr::Kind::Or:
    case RuleExpr::Kind::Xor: return 1;
  }
  return 0;
}

void print(const RuleExpr& e, int parent_prec, std::string& out) {
  const int prec = precedence(e.kind());
  const bool parens = prec < parent_prec && e.kind() != RuleExpr::Kind::Term &&
                      e.kind() != RuleExpr::Kind::Not;
  if (parens) out += "(";
  switch (e.kind()) {
    case RuleExpr::Kind::Term:
      out += e.param();
      out += ".";
      out += to_string(e.failure_type());
      break;
    case RuleExpr::Kind::Not:
      out += "NOT ";
      print(e.operands().front(), precedence(RuleExpr::Kind::Not) + 1, out);
      break;
    case RuleExpr::Kind::And:
    case RuleExpr::Kind::Or:
    case RuleExpr::Kind::Xor: {
      const char* op = e.kind() == RuleExpr::Kind::And ? " AND "
                       : e.kind() == RuleExpr::Kind::Or ? " OR "
                                                        : " XOR ";
      for (std::size_t i = 0; i < e.operands().size(); ++i) {
        if (i > 0) out += op;
        print(e.operands()[i], prec + 1, out);
      }
      break;
    }
  }
  if (parens) out += ")";
}

}  // namespace

std::string RuleExpr::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

const RuleSet* lookup_rules(const RuleLibrary& lib, std::string_view block_type) {
  auto it = lib.rule_sets.find(std::string(block_type));
  return it == lib.rule_sets.end() ? nullptr : &it->second;
}

RuleSet synthesize_worst_case(const FunctionBlockInstance& block,
                              const ConnectorTypeTable& table) {
  RuleSet rs;
  rs.block_type = block.block_type;
  if (block.inputs.empty()) return rs;

  std::vector<RuleExpr> terms;
  for (const auto& input : block.inputs) {
    for (auto fty : table.failure_types(input.connector_type).to_vector()) {
      terms.push_back(RuleExpr::term(input.name, fty));
    }
  }
  for (const auto& output : block.outputs) {
    for (auto fty : table.failure_types(output.connector_type).to_vector()) {
      rs.rules.emplace(RuleKey{output.name, fty}, RuleExpr::disjunction(terms));
    }
  }
  return rs;
}

ValidationReport validate_rule_set(const RuleSet& rules, const FunctionBlockInstance& signature,
                                   const ConnectorTypeTable& table) {
  ValidationReport report;
  const std::string base = signature.name + "[" + rules.block_type + "]";

  for (const auto& [key, expr] : rules.rules) {
    const std::string loc =
        base + "/" + key.output_param + "." + std::string(to_string(key.failure_type));
    const Port* out = signature.find_output(key.output_param);
    if (out == nullptr) {
      report.add_error("rule-unknown-output", loc,
                       "'" + key.output_param + "' is not an output parameter of " +
                           signature.name);
    } else if (!table.failure_types(out->connector_type).contains(key.failure_type)) {
      report.add_error("rule-failure-type-not-mapped", loc,
                       std::string(to_string(key.failure_type)) + " is not a failure type of " +
                           out->connector_type);
    }
    expr.visit_terms([&](const RuleExpr& term) {
      const Port* in = signature.find_input(term.param());
      if (in == nullptr) {
        report.add_error("term-unknown-input", loc,
                         "'" + term.param() + "' is not an input parameter of " + signature.name);
      } else if (!table.failure_types(in->connector_type).contains(term.failure_type())) {
        report.add_error("term-failure-type-not-mapped", loc,
                         "'" + term.param() + "." + std::string(to_string(term.failure_type())) +
                             "': " + std::string(to_string(term.failure_type())) +
                             " is not a failure type of " + in->connector_type);
      }
    });
  }

  for (const auto& output : signature.outputs) {
    for (auto fty : table.failure_types(output.connector_type).to_vector()) {
      if (rules.rules.find(RuleKey{output.name, fty}) == rules.rules.end()) {
        report.add_warning("incomplete-coverage",
                           base + "/" + output.name + "." + std::string(to_string(fty)),
                           "no rule for this output failure type; it will not propagate");
      }
    }
  }

  return report;
}

}  // namespace cftgen
