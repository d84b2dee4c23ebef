#include "cftgen/io/dot_writer.hpp"

namespace cftgen::io {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

const char* gate_shape(GateKind kind) {
  switch (kind) {
    case GateKind::And: return "invhouse";
    case GateKind::Or: return "invtrapezium";
    case GateKind::Xor: return "diamond";
    case GateKind::Not: return "triangle";
  }
  return "box";
}

std::string gate_label(GateKind kind) {
  std::string label(to_string(kind));
  for (auto& c : label) c = static_cast<char>(c - 'a' + 'A');
  return label;
}

}  // namespace

std::string export_dot(const CftProject& project) {
  std::string out = "digraph cft {\n  rankdir=LR;\n  node [fontname=\"Helvetica\"];\n";
  std::size_t cluster = 0;
  for (const auto& el : project.elements) {
    out += "  subgraph cluster_" + std::to_string(cluster++) + " {\n";
    out += "    label=" + quoted(el.component) + ";\n";
    for (const auto& fm : el.input_failure_modes) {
      out += "    " + quoted(fm.id) + " [shape=ellipse,label=" +
             quoted(fm.port + "\\n[" + std::string(to_string(fm.failure_type)) + "]") + "];\n";
    }
    for (const auto& fm : el.output_failure_modes) {
      out += "    " + quoted(fm.id) + " [shape=octagon,label=" +
             quoted(fm.port + "\\n[" + std::string(to_string(fm.failure_type)) + "]") + "];\n";
    }
    for (const auto& g : el.gates) {
      out += "    " + quoted(g.id) + " [shape=" + gate_shape(g.kind) +
             ",label=" + quoted(gate_label(g.kind)) + "];\n";
    }
    for (const auto& e : el.edges) {
      out += "    " + quoted(e.source) + " -> " + quoted(e.target) + ";\n";
    }
    out += "  }\n";
  }
  for (const auto& link : project.links) {
    const std::string fty(to_string(link.failure_type));
    out += "  " +
           quoted(link.from_component + "/out/" + link.from_port + "/" + fty) + " -> " +
           quoted(link.to_component + "/in/" + link.to_port + "/" + fty) +
           " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

std::string export_dot(const ClassicFaultTree& tree) {
  std::string out = "digraph fault_tree {\n  rankdir=BT;\n  node [fontname=\"Helvetica\"];\n";
  out += "  label=" + quoted(tree.top_event) + ";\n";
  for (const auto& node : tree.nodes) {
    switch (node.kind) {
      case FlatNodeKind::BasicEvent:
        out += "  " + quoted(node.id) + " [shape=circle,label=" + quoted(node.id) + "];\n";
        break;
      case FlatNodeKind::ConstantFalse:
        out += "  " + quoted(node.id) + " [shape=plaintext,label=\"FALSE\"];\n";
        break;
      case FlatNodeKind::And:
      case FlatNodeKind::Or:
      case FlatNodeKind::Xor:
      case FlatNodeKind::Not: {
        const GateKind kind = node.kind == FlatNodeKind::And   ? GateKind::And
                              : node.kind == FlatNodeKind::Or  ? GateKind::Or
                              : node.kind == FlatNodeKind::Xor ? GateKind::Xor
                                                               : GateKind::Not;
        out += "  " + quoted(node.id) + " [shape=" + gate_shape(kind) +
               ",label=" + quoted(gate_label(kind)) + "];\n";
        break;
      }
    }
  }
  for (const auto& node : tree.nodes) {
    for (const auto& child : node.children) {
      out += "  " + quoted(child) + " -> " + quoted(node.id) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace cftgen::io
