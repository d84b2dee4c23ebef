#include "cftgen/io/cft_io.hpp"

#include "cftgen/errors.hpp"
#include "cftgen/io/json_util.hpp"

namespace cftgen::io {

namespace {

constexpr const char* kFormat = "cft/1";

Json ports_to_json(const std::vector<Port>& ports) {
  Json arr = Json::array();
  for (const auto& p : ports) {
    arr.push_back(Json{{"name", p.name}, {"type", p.connector_type}});
  }
  return arr;
}

Json fms_to_json(const std::vector<FailureMode>& fms) {
  Json arr = Json::array();
  for (const auto& fm : fms) {
    arr.push_back(Json{{"id", fm.id},
                       {"port", fm.port},
                       {"failure_type", std::string(to_string(fm.failure_type))}});
  }
  return arr;
}

std::vector<Port> ports_from_json(const Json& j, const std::string& path) {
  std::vector<Port> out;
  const Json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    expect_keys(arr[i], {"name", "type"}, p);
    out.push_back({identifier(arr[i], "name", p), identifier(arr[i], "type", p)});
  }
  return out;
}

std::vector<FailureMode> fms_from_json(const Json& j, const std::string& path) {
  std::vector<FailureMode> out;
  const Json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    expect_keys(arr[i], {"id", "port", "failure_type"}, p);
    FailureMode fm;
    fm.id = as_string(require(arr[i], "id", p), p + ".id");
    fm.port = as_string(require(arr[i], "port", p), p + ".port");
    fm.failure_type = failure_type_of(require(arr[i], "failure_type", p), p + ".failure_type");
    out.push_back(std::move(fm));
  }
  return out;
}

// Splits "component/port" link endpoints.
std::pair<std::string, std::string> split_port_path(const Json& j, const std::string& path) {
  const std::string text = as_string(j, path);
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw SchemaError("expected a component/port path", 0, 0, path);
  }
  return {text.substr(0, slash), text.substr(slash + 1)};
}

}  // namespace

std::string export_cft(const CftProject& project) {
  Json doc;
  doc["format"] = kFormat;
  Json meta = Json::object();
  for (const auto& [key, value] : project.metadata) meta[key] = value;
  doc["metadata"] = std::move(meta);

  Json elements = Json::array();
  for (const auto& el : project.elements) {
    Json je;
    je["component"] = el.component;
    je["inports"] = ports_to_json(el.inports);
    je["outports"] = ports_to_json(el.outports);
    je["input_failure_modes"] = fms_to_json(el.input_failure_modes);
    je["output_failure_modes"] = fms_to_json(el.output_failure_modes);
    Json gates = Json::array();
    for (const auto& g : el.gates) {
      gates.push_back(Json{{"id", g.id}, {"kind", std::string(to_string(g.kind))}});
    }
    je["gates"] = std::move(gates);
    Json edges = Json::array();
    for (const auto& e : el.edges) {
      edges.push_back(Json{{"from", e.source}, {"to", e.target}});
    }
    je["edges"] = std::move(edges);
    elements.push_back(std::move(je));
  }
  doc["elements"] = std::move(elements);

  Json port_links = Json::array();
  for (const auto& pl : project.port_links) {
    port_links.push_back(Json{{"from", pl.from_component + "/" + pl.from_port},
                              {"to", pl.to_component + "/" + pl.to_port}});
  }
  doc["port_links"] = std::move(port_links);

  Json links = Json::array();
  for (const auto& link : project.links) {
    links.push_back(Json{{"from", link.from_component + "/" + link.from_port},
                         {"to", link.to_component + "/" + link.to_port},
                         {"failure_type", std::string(to_string(link.failure_type))}});
  }
  doc["links"] = std::move(links);

  return doc.dump(2) + "\n";
}

CftProject import_cft(std::string_view text) {
  const Json doc = parse_json(text);
  expect_keys(doc, {"format", "metadata", "elements", "port_links", "links"}, "$");

  if (as_string(require(doc, "format", "$"), "$.format") != kFormat) {
    throw SchemaError("unsupported format, expected '" + std::string(kFormat) + "'", 0, 0,
                      "$.format");
  }

  CftProject project;
  if (doc.contains("metadata")) {
    for (const auto& [key, value] : as_object(doc["metadata"], "$.metadata").items()) {
      project.metadata.emplace_back(key, as_string(value, "$.metadata." + key));
    }
  }

  if (doc.contains("elements")) {
    const Json& elements = as_array(doc["elements"], "$.elements");
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const std::string path = "$.elements[" + std::to_string(i) + "]";
      const Json& je = elements[i];
      expect_keys(je,
                  {"component", "inports", "outports", "input_failure_modes",
                   "output_failure_modes", "gates", "edges"},
                  path);
      CftElement el;
      el.component = identifier(je, "component", path);
      if (je.contains("inports")) el.inports = ports_from_json(je["inports"], path + ".inports");
      if (je.contains("outports")) {
        el.outports = ports_from_json(je["outports"], path + ".outports");
      }
      if (je.contains("input_failure_modes")) {
        el.input_failure_modes =
            fms_from_json(je["input_failure_modes"], path + ".input_failure_modes");
      }
      if (je.contains("output_failure_modes")) {
        el.output_failure_modes =
            fms_from_json(je["output_failure_modes"], path + ".output_failure_modes");
      }
      if (je.contains("gates")) {
        const Json& gates = as_array(je["gates"], path + ".gates");
        for (std::size_t k = 0; k < gates.size(); ++k) {
          const std::string gp = path + ".gates[" + std::to_string(k) + "]";
          expect_keys(gates[k], {"id", "kind"}, gp);
          const std::string kind = as_string(require(gates[k], "kind", gp), gp + ".kind");
          auto parsed = parse_gate_kind(kind);
          if (!parsed.has_value()) {
            throw SchemaError("unknown gate kind '" + kind + "'", 0, 0, gp + ".kind");
          }
          el.gates.push_back({as_string(require(gates[k], "id", gp), gp + ".id"), *parsed});
        }
      }
      if (je.contains("edges")) {
        const Json& edges = as_array(je["edges"], path + ".edges");
        for (std::size_t k = 0; k < edges.size(); ++k) {
          const std::string ep = path + ".edges[" + std::to_string(k) + "]";
          expect_keys(edges[k], {"from", "to"}, ep);
          el.edges.push_back({as_string(require(edges[k], "from", ep), ep + ".from"),
                              as_string(require(edges[k], "to", ep), ep + ".to")});
        }
      }
      project.elements.push_back(std::move(el));
    }
  }

  if (doc.contains("port_links")) {
    const Json& port_links = as_array(doc["port_links"], "$.port_links");
    for (std::size_t i = 0; i < port_links.size(); ++i) {
      const std::string path = "$.port_links[" + std::to_string(i) + "]";
      expect_keys(port_links[i], {"from", "to"}, path);
      auto [fc, fp] = split_port_path(require(port_links[i], "from", path), path + ".from");
      auto [tc, tp] = split_port_path(require(port_links[i], "to", path), path + ".to");
      project.port_links.push_back({fc, fp, tc, tp});
    }
  }

  if (doc.contains("links")) {
    const Json& links = as_array(doc["links"], "$.links");
    for (std::size_t i = 0; i < links.size(); ++i) {
      const std::string path = "$.links[" + std::to_string(i) + "]";
      expect_keys(links[i], {"from", "to", "failure_type"}, path);
      auto [fc, fp] = split_port_path(require(links[i], "from", path), path + ".from");
      auto [tc, tp] = split_port_path(require(links[i], "to", path), path + ".to");
      project.links.push_back(
          {fc, fp, tc, tp,
           failure_type_of(require(links[i], "failure_type", path), path + ".failure_type")});
    }
  }

  return project;
}

}  // namespace cftgen::io
