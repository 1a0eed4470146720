#ifndef RIBBON_RIBBON_GRAPH_HPP
#define RIBBON_RIBBON_GRAPH_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/error.hpp"

namespace ribbon {

struct EdgeSpec {
  std::string id;
  std::string first;
  std::string second;
};

/**
 * A connected loop-free multigraph with a cyclic order of edge ends at
 * every vertex.
 *
 * Edges are stored as dart pairs: dart 2e leaves the first listed end of
 * edge e and dart 2e+1 leaves the second, so reverse(d) = d ^ 1. Vertices
 * are indexed in sorted name order and edges in sorted id order, which
 * fixes every downstream enumeration order.
 *
 * Values are immutable after build() and safe to share across threads.
 */
class RibbonGraph {
 public:
  /// Validates and builds. `rotation` maps each vertex name to the ids of
  /// its incident edges in cyclic order.
  static RibbonGraph build(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
                           const std::map<std::string, std::vector<std::string>>& rotation);

  /// Same underlying graph, different cyclic orders. Each inner list holds
  /// the darts leaving that vertex.
  RibbonGraph with_rotation(const std::vector<std::vector<DartId>>& rotation) const;

  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int num_edges() const { return static_cast<int>(edge_names_.size()); }
  int num_darts() const { return 2 * num_edges(); }

  static constexpr DartId reverse(DartId d) { return d ^ 1; }
  static constexpr EdgeId edge_of(DartId d) { return d >> 1; }

  VertexId tail(DartId d) const { return tail_[d]; }
  VertexId head(DartId d) const { return tail_[reverse(d)]; }

  /// Next dart in the cyclic order at tail(d).
  DartId rotate(DartId d) const { return next_[d]; }
  DartId rotate_back(DartId d) const { return prev_[d]; }

  /// Position of d within the rotation list of its tail.
  int rotation_index(DartId d) const { return position_[d]; }

  std::span<const DartId> darts_at(VertexId v) const { return rotation_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }

  /// The dart of edge e that leaves v.
  DartId dart_from(EdgeId e, VertexId v) const;

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    return {tail_[2 * e], tail_[2 * e + 1]};
  }

  /// Number of edges joining v and w.
  int multiplicity(VertexId v, VertexId w) const;

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& edge_name(EdgeId e) const { return edge_names_[e]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& edge_names() const { return edge_names_; }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;
  VertexId vertex(const std::string& name) const;  // throws UnknownVertex
  EdgeId edge(const std::string& name) const;      // throws UnknownEdge

  /// "<edge>@<tail>", e.g. "e1@a".
  std::string dart_name(DartId d) const;
  /// Accepts "<edge>@<tail>".
  DartId parse_dart(const std::string& text) const;

  const std::vector<std::vector<DartId>>& rotation_lists() const { return rotation_; }

 private:
  RibbonGraph() = default;
  void finalize_rotation(const std::vector<std::vector<DartId>>& rotation);

  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<VertexId> tail_;
  std::vector<DartId> next_;
  std::vector<DartId> prev_;
  std::vector<int> position_;
  std::vector<std::vector<DartId>> rotation_;
};

/// Orbits of the face permutation d -> rotate(reverse(d)), each listed from
/// its smallest dart; orbits are ordered by that dart.
std::vector<std::vector<DartId>> faces(const RibbonGraph& g);

/// From V - E + F = 2 - 2g.
int genus(const RibbonGraph& g);
bool is_planar(const RibbonGraph& g);

}  // namespace ribbon

#endif  // RIBBON_RIBBON_GRAPH_HPP
