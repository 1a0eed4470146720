#ifndef RIBBON_SPANNING_TREE_HPP
#define RIBBON_SPANNING_TREE_HPP

#include <cstdint>
#include <vector>

#include "ribbon/cycle.hpp"

namespace ribbon {

/// Enumeration refuses graphs with more edges than this.
inline constexpr int kMaxTreeEnumerationEdges = 24;

/// Edge subset stored as a bitmask over edge ids; only graphs with at most
/// 64 edges can hold trees.
class SpanningTree {
 public:
  SpanningTree() = default;

  /// Validates that `edges` is a spanning tree of g (NotATree otherwise).
  static SpanningTree make(const RibbonGraph& g, const std::vector<EdgeId>& edges);
  static SpanningTree from_mask_unchecked(std::uint64_t mask) { return SpanningTree(mask); }

  std::uint64_t mask() const { return mask_; }
  bool contains(EdgeId e) const { return (mask_ >> e) & 1u; }
  std::vector<EdgeId> edges() const;

  friend bool operator==(SpanningTree, SpanningTree) = default;
  friend auto operator<=>(SpanningTree a, SpanningTree b) { return a.edges() <=> b.edges(); }

 private:
  explicit SpanningTree(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

/// All spanning trees, lexicographic in their sorted edge ids.
std::vector<SpanningTree> spanning_trees(const RibbonGraph& g);

/// Per vertex, the tree dart pointing one step toward `root`; kNoDart at root.
std::vector<DartId> orient_toward(const RibbonGraph& g, SpanningTree t, VertexId root);

/// The tree path from x to y (empty when x == y).
DirectedPath tree_geodesic(const RibbonGraph& g, SpanningTree t, VertexId x, VertexId y);

/// For e running from y to x: the unique cycle in T + e, i.e. the geodesic
/// x -> y followed by e. When e is in T this is (reverse(e), e).
DirectedCycle fundamental_cycle(const RibbonGraph& g, SpanningTree t, DartId e);

/// Greedy extension of `seed` (assumed acyclic) to a spanning tree, adding
/// edges in id order.
SpanningTree extend_to_spanning_tree(const RibbonGraph& g, const std::vector<EdgeId>& seed);

}  // namespace ribbon

#endif  // RIBBON_SPANNING_TREE_HPP
