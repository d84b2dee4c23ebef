#pragma once

#include <set>
#include <string>
#include <vector>

#include "cftgen/cft_model.hpp"

namespace cftgen {

// A minimal cut set: basic events whose joint occurrence causes the top.
using CutSet = std::set<std::string>;
using CutSetFamily = std::set<CutSet>;

// Complete family of minimal cut sets by top-down expansion with idempotence
// and absorption. Requires a coherent tree: NOT or XOR raises
// NonCoherentTreeError. Constant-FALSE leaves eliminate their AND parents
// and drop out of OR parents.
CutSetFamily minimal_cut_sets(const ClassicFaultTree& tree);

// Report order: by size, then lexicographically.
std::vector<CutSet> sorted_cut_sets(const CutSetFamily& family);

enum class Verdict { Equivalent, AImpliesB, BImpliesA, Incomparable };

std::string_view to_string(Verdict verdict);

struct TopComparison {
  TopEvent top;
  Verdict verdict;
  // Minimal cut sets present in only one family (up to max_witnesses each).
  std::vector<CutSet> only_in_a;
  std::vector<CutSet> only_in_b;
};

struct StructuralDelta {
  std::vector<std::string> only_in_a;
  std::vector<std::string> only_in_b;

  [[nodiscard]] bool empty() const { return only_in_a.empty() && only_in_b.empty(); }
};

struct DiffOptions {
  std::size_t max_witnesses = 5;
};

struct DiffReport {
  std::vector<TopComparison> tops;
  StructuralDelta structural;

  [[nodiscard]] bool all_equivalent() const;
};

// All output failure modes present in both projects, in deterministic order.
std::vector<TopEvent> shared_tops(const CftProject& a, const CftProject& b);

// Per-top semantic comparison of two failure models via their minimal cut
// set families, plus a structural summary of elements/ports/failure modes
// present in only one project. Throws UnknownTopError when a requested top
// is missing from either project.
DiffReport diff(const CftProject& a, const CftProject& b, const std::vector<TopEvent>& tops,
                const DiffOptions& opts = {});

}  // namespace cftgen
