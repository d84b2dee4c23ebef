#include "cftgen/io/project_reader.hpp"

#include <nlohmann/json.hpp>

#include "cftgen/errors.hpp"
#include "cftgen/io/json_util.hpp"

namespace cftgen::io {

namespace {

Port parse_typed_port(const Json& j, const std::string& path) {
  expect_keys(j, {"name", "type"}, path);
  return {identifier(j, "name", path), identifier(j, "type", path)};
}

std::vector<Port> parse_port_list(const Json& j, const std::string& path) {
  std::vector<Port> out;
  const Json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(parse_typed_port(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// "BLOCK/PARAM" or a bare diagram port name.
LinkEndpoint parse_endpoint(const Json& j, const std::string& path) {
  const std::string text = as_string(j, path);
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    check_identifier(text, path);
    return {"", text};
  }
  const std::string block = text.substr(0, slash);
  const std::string port = text.substr(slash + 1);
  check_identifier(block, path);
  check_identifier(port, path);
  return {block, port};
}

void resolve_source(const CfcDiagram& diagram, const LinkEndpoint& ep, const std::string& path) {
  if (ep.is_diagram()) {
    for (const auto& p : diagram.inputs) {
      if (p.name == ep.port) return;
    }
    throw SchemaError("'" + ep.port + "' is not a diagram input", 0, 0, path);
  }
  const FunctionBlockInstance* block = diagram.find_block(ep.block);
  if (block == nullptr) {
    throw SchemaError("no block named '" + ep.block + "'", 0, 0, path);
  }
  if (block->find_output(ep.port) == nullptr) {
    throw SchemaError("block '" + ep.block + "' has no output parameter '" + ep.port + "'", 0, 0,
                      path);
  }
}

void resolve_target(const CfcDiagram& diagram, const LinkEndpoint& ep, const std::string& path) {
  if (ep.is_diagram()) {
    for (const auto& p : diagram.outputs) {
      if (p.name == ep.port) return;
    }
    throw SchemaError("'" + ep.port + "' is not a diagram output", 0, 0, path);
  }
  const FunctionBlockInstance* block = diagram.find_block(ep.block);
  if (block == nullptr) {
    throw SchemaError("no block named '" + ep.block + "'", 0, 0, path);
  }
  if (block->find_input(ep.port) == nullptr) {
    throw SchemaError("block '" + ep.block + "' has no input parameter '" + ep.port + "'", 0, 0,
                      path);
  }
}

CfcDiagram parse_diagram(const Json& j, const Component& comp, const std::string& path) {
  expect_keys(j, {"blocks", "linkages"}, path);

  CfcDiagram diagram;
  diagram.inputs = comp.inports;
  diagram.outputs = comp.outports;

  if (j.contains("blocks")) {
    const Json& blocks = as_array(j["blocks"], path + ".blocks");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const std::string block_path = path + ".blocks[" + std::to_string(i) + "]";
      const Json& jb = blocks[i];
      expect_keys(jb, {"name", "block_type", "inputs", "outputs"}, block_path);
      FunctionBlockInstance block;
      block.name = identifier(jb, "name", block_path);
      block.block_type = identifier(jb, "block_type", block_path);
      if (jb.contains("inputs")) {
        block.inputs = parse_port_list(jb["inputs"], block_path + ".inputs");
      }
      if (jb.contains("outputs")) {
        block.outputs = parse_port_list(jb["outputs"], block_path + ".outputs");
      }
      diagram.blocks.push_back(std::move(block));
    }
  }

  if (j.contains("linkages")) {
    const Json& linkages = as_array(j["linkages"], path + ".linkages");
    for (std::size_t i = 0; i < linkages.size(); ++i) {
      const std::string link_path = path + ".linkages[" + std::to_string(i) + "]";
      const Json& jl = linkages[i];
      expect_keys(jl, {"from", "to"}, link_path);
      Linkage link;
      link.source = parse_endpoint(require(jl, "from", link_path), link_path + ".from");
      link.target = parse_endpoint(require(jl, "to", link_path), link_path + ".to");
      resolve_source(diagram, link.source, link_path + ".from");
      resolve_target(diagram, link.target, link_path + ".to");
      diagram.linkages.push_back(std::move(link));
    }
  }
  return diagram;
}

}  // namespace

CfcProjectFile parse_cfc_project_file(std::string_view text) {
  const Json doc = parse_json(text);
  expect_keys(doc, {"system", "connector_types", "components", "connections"}, "$");

  CfcProjectFile file;
  file.system.name = identifier(doc, "system", "$");
  file.connector_types = ConnectorTypeTable::with_builtins();

  if (doc.contains("connector_types")) {
    const Json& types = as_object(doc["connector_types"], "$.connector_types");
    for (const auto& [name, value] : types.items()) {
      const std::string path = "$.connector_types." + name;
      check_identifier(name, path);
      if (value.is_string()) {
        const std::string category = value.get<std::string>();
        if (category == "boolean") {
          file.connector_types.declare(name, TypeCategory::Boolean);
        } else if (category == "numeric") {
          file.connector_types.declare(name, TypeCategory::Numeric);
        } else if (category == "time") {
          file.connector_types.declare(name, TypeCategory::Time);
        } else {
          throw SchemaError("unknown category '" + category +
                                "', expected boolean, numeric or time",
                            0, 0, path);
        }
      } else if (value.is_array()) {
        FailureTypeSet set;
        for (const auto& entry : value) {
          set.insert(failure_type_of(entry, path));
        }
        file.connector_types.declare(name, set);
      } else {
        throw SchemaError("expected a category string or a failure-type list", 0, 0, path);
      }
    }
  }

  if (doc.contains("components")) {
    const Json& components = as_array(doc["components"], "$.components");
    for (std::size_t i = 0; i < components.size(); ++i) {
      const std::string path = "$.components[" + std::to_string(i) + "]";
      const Json& jc = components[i];
      expect_keys(jc, {"name", "inports", "outports", "diagram"}, path);
      Component comp;
      comp.name = identifier(jc, "name", path);
      if (jc.contains("inports")) {
        comp.inports = parse_port_list(jc["inports"], path + ".inports");
      }
      if (jc.contains("outports")) {
        comp.outports = parse_port_list(jc["outports"], path + ".outports");
      }
      if (jc.contains("diagram")) {
        comp.diagram = parse_diagram(as_object(jc["diagram"], path + ".diagram"), comp,
                                     path + ".diagram");
      } else {
        comp.diagram.inputs = comp.inports;
        comp.diagram.outputs = comp.outports;
      }
      file.system.components.push_back(std::move(comp));
    }
  }

  if (doc.contains("connections")) {
    const Json& connections = as_array(doc["connections"], "$.connections");
    for (std::size_t i = 0; i < connections.size(); ++i) {
      const std::string path = "$.connections[" + std::to_string(i) + "]";
      const Json& jc = connections[i];
      expect_keys(jc, {"from", "to"}, path);
      const LinkEndpoint from = parse_endpoint(require(jc, "from", path), path + ".from");
      const LinkEndpoint to = parse_endpoint(require(jc, "to", path), path + ".to");
      if (from.is_diagram() || to.is_diagram()) {
        throw SchemaError("connection endpoints must be component/port paths", 0, 0, path);
      }
      file.system.connections.push_back({from.block, from.port, to.block, to.port});
    }
  }

  return file;
}

System parse_cfc_project(std::string_view text) {
  return parse_cfc_project_file(text).system;
}

}  // namespace cftgen::io
