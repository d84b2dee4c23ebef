#include "cftgen/analysis.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "cftgen/errors.hpp"

namespace cftgen {

namespace {

bool is_subset(const CutSet& a, const CutSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Idempotence comes from the set representation; absorption drops every
// cut set that contains another.
CutSetFamily minimize(const CutSetFamily& family) {
  CutSetFamily out;
  for (const auto& cs : family) {
    bool absorbed = false;
    for (const auto& other : family) {
      if (&other != &cs && is_subset(other, cs) && !(other == cs)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) out.insert(cs);
  }
  return out;
}

class CutSetSolver {
 public:
  explicit CutSetSolver(const ClassicFaultTree& tree) : tree_(tree) {}

  CutSetFamily solve() { return expand(tree_.root); }

 private:
  CutSetFamily expand(const std::string& id) {
    if (auto it = memo_.find(id); it != memo_.end()) return it->second;
    const FlatNode* node = tree_.find(id);
    if (node == nullptr) throw Error("dangling node reference '" + id + "'");

    CutSetFamily family;
    switch (node->kind) {
      case FlatNodeKind::BasicEvent:
        family.insert(CutSet{id});
        break;
      case FlatNodeKind::ConstantFalse:
        break;  // empty family: the event cannot occur
      case FlatNodeKind::Or: {
        for (const auto& child : node->children) {
          for (const auto& cs : expand(child)) family.insert(cs);
        }
        family = minimize(family);
        break;
      }
      case FlatNodeKind::And: {
        family.insert(CutSet{});
        for (const auto& child : node->children) {
          const CutSetFamily rhs = expand(child);
          if (rhs.empty()) {
            family.clear();  // AND with an impossible operand is impossible
            break;
          }
          CutSetFamily next;
          for (const auto& a : family) {
            for (const auto& b : rhs) {
              CutSet merged = a;
              merged.insert(b.begin(), b.end());
              next.insert(std::move(merged));
            }
          }
          family = minimize(next);
        }
        break;
      }
      case FlatNodeKind::Not:
      case FlatNodeKind::Xor:
        throw NonCoherentTreeError("cut-set analysis requires a coherent tree; node '" + id +
                                   "' is " +
                                   std::string(node->kind == FlatNodeKind::Not ? "NOT" : "XOR"));
    }
    memo_.emplace(id, family);
    return family;
  }

  const ClassicFaultTree& tree_;
  std::map<std::string, CutSetFamily> memo_;
};

}  // namespace

CutSetFamily minimal_cut_sets(const ClassicFaultTree& tree) {
  return CutSetSolver(tree).solve();
}

std::vector<CutSet> sorted_cut_sets(const CutSetFamily& family) {
  std::vector<CutSet> out(family.begin(), family.end());
  std::sort(out.begin(), out.end(), [](const CutSet& a, const CutSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::AImpliesB: return "A-implies-B";
    case Verdict::BImpliesA: return "B-implies-A";
    case Verdict::Incomparable: return "incomparable";
  }
  return "?";
}

bool DiffReport::all_equivalent() const {
  return std::all_of(tops.begin(), tops.end(), [](const TopComparison& tc) {
    return tc.verdict == Verdict::Equivalent;
  });
}

std::vector<TopEvent> shared_tops(const CftProject& a, const CftProject& b) {
  std::vector<TopEvent> tops;
  for (const auto& el : a.elements) {
    const CftElement* other = b.find_element(el.component);
    if (other == nullptr) continue;
    for (const auto& ofm : el.output_failure_modes) {
      if (other->find_ofm(ofm.port, ofm.failure_type) != nullptr) {
        tops.push_back({el.component, ofm.port, ofm.failure_type});
      }
    }
  }
  std::sort(tops.begin(), tops.end());
  return tops;
}

namespace {

// Pointwise f_x >= f_y for monotone functions: every minimal cut set of the
// weaker side must contain one of the stronger side.
bool covers(const CutSetFamily& stronger, const CutSetFamily& weaker) {
  for (const auto& w : weaker) {
    bool contained = false;
    for (const auto& s : stronger) {
      if (is_subset(s, w)) {
        contained = true;
        break;
      }
    }
    if (!contained) return false;
  }
  return true;
}

std::vector<CutSet> witnesses(const CutSetFamily& from, const CutSetFamily& other,
                              std::size_t limit) {
  std::vector<CutSet> out;
  for (const auto& cs : sorted_cut_sets(from)) {
    if (other.count(cs) == 0) {
      out.push_back(cs);
      if (out.size() >= limit) break;
    }
  }
  return out;
}

void structural_entries(const CftProject& project, std::set<std::string>& out) {
  for (const auto& el : project.elements) {
    out.insert("element " + el.component);
    for (const auto& p : el.inports) {
      out.insert("inport " + el.component + "/" + p.name + " (" + p.connector_type + ")");
    }
    for (const auto& p : el.outports) {
      out.insert("outport " + el.component + "/" + p.name + " (" + p.connector_type + ")");
    }
    for (const auto& fm : el.input_failure_modes) {
      out.insert("input failure mode " + el.component + "/" + fm.port + "/" +
                 std::string(to_string(fm.failure_type)));
    }
    for (const auto& fm : el.output_failure_modes) {
      out.insert("output failure mode " + el.component + "/" + fm.port + "/" +
                 std::string(to_string(fm.failure_type)));
    }
  }
}

}  // namespace

DiffReport diff(const CftProject& a, const CftProject& b, const std::vector<TopEvent>& tops,
                const DiffOptions& opts) {
  DiffReport report;

  for (const auto& top : tops) {
    const CutSetFamily fam_a = minimal_cut_sets(flatten(a, top));
    const CutSetFamily fam_b = minimal_cut_sets(flatten(b, top));

    TopComparison tc;
    tc.top = top;
    if (fam_a == fam_b) {
      tc.verdict = Verdict::Equivalent;
    } else if (covers(fam_a, fam_b)) {
      tc.verdict = Verdict::AImpliesB;  // A is the more pessimistic model
    } else if (covers(fam_b, fam_a)) {
      tc.verdict = Verdict::BImpliesA;
    } else {
      tc.verdict = Verdict::Incomparable;
    }
    if (tc.verdict != Verdict::Equivalent) {
      tc.only_in_a = witnesses(fam_a, fam_b, opts.max_witnesses);
      tc.only_in_b = witnesses(fam_b, fam_a, opts.max_witnesses);
    }
    report.tops.push_back(std::move(tc));
  }

  std::set<std::string> in_a;
  std::set<std::string> in_b;
  structural_entries(a, in_a);
  structural_entries(b, in_b);
  std::set_difference(in_a.begin(), in_a.end(), in_b.begin(), in_b.end(),
                      std::back_inserter(report.structural.only_in_a));
  std::set_difference(in_b.begin(), in_b.end(), in_a.begin(), in_a.end(),
                      std::back_inserter(report.structural.only_in_b));
  return report;
}

}  // namespace cftgen
