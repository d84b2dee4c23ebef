#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cftgen/cfc_model.hpp"
#include "cftgen/connector_types.hpp"

namespace cftgen {

// Boolean formula over failure terms `<input-param>.<failure-type>`.
// Conjunctions and disjunctions are n-ary and flattened on construction,
// so `a OR b OR c` is a single three-operand node.
class RuleExpr {
 public:
  enum class Kind { Term, Not, And, Or, Xor };

  static RuleExpr term(std::string param, FailureType fty);
  static RuleExpr negation(RuleExpr operand);
  static RuleExpr conjunction(std::vector<RuleExpr> operands);
  static RuleExpr disjunction(std::vector<RuleExpr> operands);
  static RuleExpr exclusive_or(RuleExpr lhs, RuleExpr rhs);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const std::string& param() const { return param_; }
  [[nodiscard]] FailureType failure_type() const { return fty_; }
  [[nodiscard]] const std::vector<RuleExpr>& operands() const { return operands_; }

  void visit_terms(const std::function<void(const RuleExpr&)>& fn) const;

  // Parseable round-trip form, minimal parentheses.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const RuleExpr&, const RuleExpr&) = default;

 private:
  RuleExpr() = default;

  Kind kind_ = Kind::Term;
  std::string param_;
  FailureType fty_ = FailureType::FalsePositive;
  std::vector<RuleExpr> operands_;
};

struct RuleKey {
  std::string output_param;
  FailureType failure_type;

  friend auto operator<=>(const RuleKey&, const RuleKey&) = default;
};

// All propagation rules for one function-block type: at most one formula per
// (output parameter, failure type). A missing key means that failure type
// does not propagate through this block.
struct RuleSet {
  std::string block_type;
  std::map<RuleKey, RuleExpr> rules;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

struct RuleLibrary {
  std::map<std::string, RuleSet> rule_sets;
  ConnectorTypeTable connector_types = ConnectorTypeTable::with_builtins();
};

// Exact-name lookup; nullptr tells the caller to fall back to the worst
// case.
const RuleSet* lookup_rules(const RuleLibrary& lib, std::string_view block_type);

// Worst-case propagation for a block without rules: every output failure
// type is the disjunction of every failure type of every input parameter.
// A block without inputs yields an empty rule set.
RuleSet synthesize_worst_case(const FunctionBlockInstance& block,
                              const ConnectorTypeTable& table);

// Binds a rule set to a concrete block signature: rule keys must name real
// output parameters with mapped failure types, terms must name real input
// parameters with mapped failure types. Missing (output, failure-type)
// coverage is a warning.
ValidationReport validate_rule_set(const RuleSet& rules, const FunctionBlockInstance& signature,
                                   const ConnectorTypeTable& table);

}  // namespace cftgen
