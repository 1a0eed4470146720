#include "ribbon/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ribbon {

namespace {

std::vector<int> sorted_order(const std::vector<std::string>& names) {
  std::vector<int> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return names[a] < names[b]; });
  return order;
}

}  // namespace

RibbonGraph RibbonGraph::build(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
                               const std::map<std::string, std::vector<std::string>>& rotation) {
  if (vertices.empty()) {
    throw Error(ErrorCode::InvalidInput, "graph has no vertices");
  }
  RibbonGraph g;

  for (const auto& name : vertices) {
    if (name.empty()) throw Error(ErrorCode::InvalidInput, "empty vertex id");
  }
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw Error(ErrorCode::InvalidInput, "duplicate vertex id");
  }
  g.vertex_names_ = std::move(vertices);

  std::vector<std::string> edge_ids;
  edge_ids.reserve(edges.size());
  for (const auto& e : edges) edge_ids.push_back(e.id);
  const auto order = sorted_order(edge_ids);

  g.edge_names_.reserve(edges.size());
  g.tail_.resize(2 * edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const EdgeSpec& spec = edges[order[i]];
    if (spec.id.empty()) throw Error(ErrorCode::InvalidInput, "empty edge id");
    if (!g.edge_names_.empty() && g.edge_names_.back() == spec.id) {
      throw Error(ErrorCode::InvalidInput, "duplicate edge id '" + spec.id + "'");
    }
    const VertexId a = g.vertex(spec.first);
    const VertexId b = g.vertex(spec.second);
    if (a == b) {
      throw Error(ErrorCode::SelfLoop, "edge '" + spec.id + "' joins '" + spec.first + "' to itself");
    }
    g.edge_names_.push_back(spec.id);
    g.tail_[2 * i] = a;
    g.tail_[2 * i + 1] = b;
  }

  std::vector<std::vector<DartId>> darts(g.vertex_names_.size());
  for (const auto& [name, list] : rotation) {
    const VertexId v = g.vertex(name);
    for (const auto& edge_id : list) {
      const EdgeId e = g.edge(edge_id);
      const auto [a, b] = g.endpoints(e);
      if (a != v && b != v) {
        throw Error(ErrorCode::RotationMismatch,
                    "edge '" + edge_id + "' listed at '" + name + "' is not incident to it");
      }
      darts[v].push_back(a == v ? 2 * e : 2 * e + 1);
    }
  }
  g.finalize_rotation(darts);
  return g;
}

RibbonGraph RibbonGraph::with_rotation(const std::vector<std::vector<DartId>>& rotation) const {
  RibbonGraph g;
  g.vertex_names_ = vertex_names_;
  g.edge_names_ = edge_names_;
  g.tail_ = tail_;
  g.finalize_rotation(rotation);
  return g;
}

void RibbonGraph::finalize_rotation(const std::vector<std::vector<DartId>>& rotation) {
  const int n = num_vertices();
  const int darts = num_darts();
  if (static_cast<int>(rotation.size()) != n) {
    throw Error(ErrorCode::RotationMismatch, "rotation must list every vertex");
  }
  next_.assign(darts, kNoDart);
  prev_.assign(darts, kNoDart);
  position_.assign(darts, -1);
  for (VertexId v = 0; v < n; ++v) {
    const auto& list = rotation[v];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const DartId d = list[i];
      if (d < 0 || d >= darts || tail_[d] != v) {
        throw Error(ErrorCode::RotationMismatch,
                    "rotation at '" + vertex_names_[v] + "' holds a dart not leaving it");
      }
      if (position_[d] != -1) {
        throw Error(ErrorCode::RotationMismatch, "edge '" + edge_names_[edge_of(d)] +
                                                     "' repeated in rotation at '" +
                                                     vertex_names_[v] + "'");
      }
      position_[d] = static_cast<int>(i);
      const DartId succ = list[(i + 1) % list.size()];
      next_[d] = succ;
      prev_[succ] = d;
    }
  }
  for (DartId d = 0; d < darts; ++d) {
    if (position_[d] == -1) {
      throw Error(ErrorCode::RotationMismatch, "edge '" + edge_names_[edge_of(d)] +
                                                   "' missing from rotation at '" +
                                                   vertex_names_[tail_[d]] + "'");
    }
  }
  rotation_ = rotation;

  for (VertexId v = 0; v < n; ++v) {
    if (rotation_[v].empty() && n > 0) {
      throw Error(n == 1 ? ErrorCode::InvalidInput : ErrorCode::Disconnected,
                  "vertex '" + vertex_names_[v] + "' has degree 0");
    }
  }

  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (DartId d : rotation_[v]) {
      const VertexId w = head(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::Disconnected, "underlying graph is not connected");
  }
}

DartId RibbonGraph::dart_from(EdgeId e, VertexId v) const {
  if (tail_[2 * e] == v) return 2 * e;
  if (tail_[2 * e + 1] == v) return 2 * e + 1;
  throw Error(ErrorCode::InvalidInput,
              "edge '" + edge_names_[e] + "' does not touch '" + vertex_names_[v] + "'");
}

int RibbonGraph::multiplicity(VertexId v, VertexId w) const {
  int count = 0;
  for (DartId d : rotation_[v]) {
    if (head(d) == w) ++count;
  }
  return count;
}

std::optional<VertexId> RibbonGraph::find_vertex(const std::string& name) const {
  const auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - vertex_names_.begin());
}

std::optional<EdgeId> RibbonGraph::find_edge(const std::string& name) const {
  const auto it = std::lower_bound(edge_names_.begin(), edge_names_.end(), name);
  if (it == edge_names_.end() || *it != name) return std::nullopt;
  return static_cast<EdgeId>(it - edge_names_.begin());
}

VertexId RibbonGraph::vertex(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
}

EdgeId RibbonGraph::edge(const std::string& name) const {
  if (auto e = find_edge(name)) return *e;
  throw Error(ErrorCode::UnknownEdge, "unknown edge '" + name + "'");
}

std::string RibbonGraph::dart_name(DartId d) const {
  return edge_names_[edge_of(d)] + "@" + vertex_names_[tail(d)];
}

DartId RibbonGraph::parse_dart(const std::string& text) const {
  const auto at = text.rfind('@');
  if (at == std::string::npos) {
    throw Error(ErrorCode::InvalidInput, "dart '" + text + "' must look like <edge>@<tail>");
  }
  const EdgeId e = edge(text.substr(0, at));
  return dart_from(e, vertex(text.substr(at + 1)));
}

std::vector<std::vector<DartId>> faces(const RibbonGraph& g) {
  std::vector<std::vector<DartId>> result;
  std::vector<char> seen(g.num_darts(), 0);
  for (DartId start = 0; start < g.num_darts(); ++start) {
    if (seen[start]) continue;
    auto& face = result.emplace_back();
    for (DartId d = start; !seen[d]; d = g.rotate(RibbonGraph::reverse(d))) {
      seen[d] = 1;
      face.push_back(d);
    }
  }
  return result;
}

int genus(const RibbonGraph& g) {
  const int chi = g.num_vertices() - g.num_edges() + static_cast<int>(faces(g).size());
  if (chi > 2 || (chi % 2) != 0) {
    throw Error(ErrorCode::InternalError,
                "Euler characteristic " + std::to_string(chi) + " is not 2 - 2g");
  }
  return (2 - chi) / 2;
}

bool is_planar(const RibbonGraph& g) { return genus(g) == 0; }

}  // namespace ribbon
