#include "ribbon/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace ribbon {

namespace {

using nlohmann::json;

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_with_context(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = locate(text, byte);
    throw Error(ErrorCode::InvalidInput, "JSON syntax error at line " + std::to_string(line) +
                                             ", column " + std::to_string(column));
  }
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

std::string expect_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

RibbonGraph parse_graph_json(std::string_view text) {
  const json doc = parse_with_context(text);
  if (!doc.is_object()) bad("graph: expected an object");
  for (const char* key : {"vertices", "edges", "rotation"}) {
    if (!doc.contains(key)) bad(std::string("graph: missing \"") + key + "\"");
  }
  const json& jv = doc["vertices"];
  const json& je = doc["edges"];
  const json& jr = doc["rotation"];
  if (!jv.is_array()) bad("vertices: expected an array");
  if (!je.is_array()) bad("edges: expected an array");
  if (!jr.is_object()) bad("rotation: expected an object");

  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    vertices.push_back(expect_string(jv[i], "vertices[" + std::to_string(i) + "]"));
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = je[i];
    if (!e.is_object() || !e.contains("id") || !e.contains("ends")) {
      bad(where + ": expected {\"id\", \"ends\"}");
    }
    const json& ends = e["ends"];
    if (!ends.is_array() || ends.size() != 2) bad(where + ".ends: expected two vertices");
    edges.push_back({expect_string(e["id"], where + ".id"), expect_string(ends[0], where + ".ends[0]"),
                     expect_string(ends[1], where + ".ends[1]")});
  }
  std::map<std::string, std::vector<std::string>> rotation;
  for (const auto& [name, list] : jr.items()) {
    const std::string where = "rotation." + name;
    if (!list.is_array()) bad(where + ": expected an array");
    auto& out = rotation[name];
    for (std::size_t i = 0; i < list.size(); ++i) {
      out.push_back(expect_string(list[i], where + "[" + std::to_string(i) + "]"));
    }
  }
  return RibbonGraph::build(std::move(vertices), std::move(edges), rotation);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RibbonGraph load_graph_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_graph_json(text);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + std::string(e.what()).substr(to_string(e.code()).size() + 2));
  }
}

nlohmann::ordered_json graph_to_json(const RibbonGraph& g) {
  nlohmann::ordered_json out;
  out["vertices"] = g.vertex_names();
  auto edges = nlohmann::ordered_json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.endpoints(e);
    nlohmann::ordered_json edge;
    edge["id"] = g.edge_name(e);
    edge["ends"] = {g.vertex_name(a), g.vertex_name(b)};
    edges.push_back(std::move(edge));
  }
  out["edges"] = std::move(edges);
  nlohmann::ordered_json rotation = nlohmann::ordered_json::object();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto list = nlohmann::ordered_json::array();
    for (DartId d : g.darts_at(v)) list.push_back(g.edge_name(RibbonGraph::edge_of(d)));
    rotation[g.vertex_name(v)] = std::move(list);
  }
  out["rotation"] = std::move(rotation);
  return out;
}

Divisor parse_divisor_json(const RibbonGraph& g, std::string_view text) {
  const json doc = parse_with_context(text);
  if (!doc.is_object()) bad("divisor: expected an object of integer coefficients");
  Divisor d(g.num_vertices());
  for (const auto& [name, value] : doc.items()) {
    if (!value.is_number_integer()) bad("divisor." + name + ": expected an integer");
    d[g.vertex(name)] += value.get<std::int64_t>();
  }
  return d;
}

nlohmann::ordered_json divisor_to_json(const RibbonGraph& g, const Divisor& d) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (d[v] != 0) out[g.vertex_name(v)] = d[v];
  }
  return out;
}

SpanningTree parse_tree(const RibbonGraph& g, const std::vector<std::string>& edge_ids) {
  std::vector<EdgeId> edges;
  for (const auto& id : edge_ids) edges.push_back(g.edge(id));
  return SpanningTree::make(g, edges);
}

nlohmann::ordered_json tree_to_json(const RibbonGraph& g, SpanningTree t) {
  std::vector<std::string> ids;
  for (EdgeId e : t.edges()) ids.push_back(g.edge_name(e));
  std::sort(ids.begin(), ids.end());
  return ids;
}

nlohmann::ordered_json path_to_json(const RibbonGraph& g, const DirectedPath& p) {
  auto out = nlohmann::ordered_json::array();
  for (DartId d : p.darts()) out.push_back(g.dart_name(d));
  return out;
}

nlohmann::ordered_json cycle_to_json(const RibbonGraph& g, const DirectedCycle& c) {
  auto out = nlohmann::ordered_json::array();
  for (DartId d : c.darts()) out.push_back(g.dart_name(d));
  return out;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item(text.substr(start, comma - start));
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? std::string() : item.substr(first, last - first + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace ribbon
