#include "ribbon/spanning_tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ribbon {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

struct TreeSearch {
  const RibbonGraph& g;
  int needed;
  std::vector<int> label;
  std::vector<EdgeId> chosen;
  std::vector<SpanningTree> out;

  void extend(EdgeId from) {
    if (static_cast<int>(chosen.size()) == needed) {
      std::uint64_t mask = 0;
      for (EdgeId e : chosen) mask |= std::uint64_t{1} << e;
      out.push_back(SpanningTree::from_mask_unchecked(mask));
      return;
    }
    const int remaining = needed - static_cast<int>(chosen.size());
    for (EdgeId e = from; e + remaining <= g.num_edges(); ++e) {
      const auto [a, b] = g.endpoints(e);
      const int la = label[a];
      const int lb = label[b];
      if (la == lb) continue;
      const std::vector<int> saved = label;
      for (auto& l : label) {
        if (l == lb) l = la;
      }
      chosen.push_back(e);
      extend(e + 1);
      chosen.pop_back();
      label = saved;
    }
  }
};

}  // namespace

SpanningTree SpanningTree::make(const RibbonGraph& g, const std::vector<EdgeId>& edges) {
  if (g.num_edges() > 64) throw Error(ErrorCode::TooLarge, "trees need at most 64 edges");
  if (static_cast<int>(edges.size()) != g.num_vertices() - 1) {
    throw Error(ErrorCode::NotATree, "a spanning tree has |V| - 1 edges");
  }
  DisjointSets sets(g.num_vertices());
  std::uint64_t mask = 0;
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges()) throw Error(ErrorCode::UnknownEdge, "edge out of range");
    const auto [a, b] = g.endpoints(e);
    if (!sets.unite(a, b)) throw Error(ErrorCode::NotATree, "edge set contains a cycle");
    mask |= std::uint64_t{1} << e;
  }
  return SpanningTree(mask);
}

std::vector<EdgeId> SpanningTree::edges() const {
  std::vector<EdgeId> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<EdgeId>(__builtin_ctzll(m)));
  }
  return out;
}

std::vector<SpanningTree> spanning_trees(const RibbonGraph& g) {
  if (g.num_edges() > kMaxTreeEnumerationEdges) {
    throw Error(ErrorCode::TooLarge, std::to_string(g.num_edges()) + " edges exceeds the cap of " +
                                         std::to_string(kMaxTreeEnumerationEdges));
  }
  TreeSearch search{g, g.num_vertices() - 1, {}, {}, {}};
  search.label.resize(g.num_vertices());
  std::iota(search.label.begin(), search.label.end(), 0);
  search.extend(0);
  return std::move(search.out);
}

std::vector<DartId> orient_toward(const RibbonGraph& g, SpanningTree t, VertexId root) {
  std::vector<DartId> toward(g.num_vertices(), kNoDart);
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<VertexId> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (DartId d : g.darts_at(v)) {
      if (!t.contains(RibbonGraph::edge_of(d))) continue;
      const VertexId w = g.head(d);
      if (seen[w]) continue;
      seen[w] = 1;
      toward[w] = RibbonGraph::reverse(d);
      queue.push_back(w);
    }
  }
  return toward;
}

DirectedPath tree_geodesic(const RibbonGraph& g, SpanningTree t, VertexId x, VertexId y) {
  const auto toward = orient_toward(g, t, y);
  std::vector<DartId> darts;
  for (VertexId v = x; v != y; v = g.head(toward[v])) darts.push_back(toward[v]);
  return DirectedPath::make(g, std::move(darts));
}

DirectedCycle fundamental_cycle(const RibbonGraph& g, SpanningTree t, DartId e) {
  const VertexId y = g.tail(e);
  const VertexId x = g.head(e);
  auto darts = tree_geodesic(g, t, x, y).darts();
  darts.push_back(e);
  return DirectedCycle::make(g, std::move(darts));
}

SpanningTree extend_to_spanning_tree(const RibbonGraph& g, const std::vector<EdgeId>& seed) {
  DisjointSets sets(g.num_vertices());
  std::vector<EdgeId> edges;
  for (EdgeId e : seed) {
    const auto [a, b] = g.endpoints(e);
    if (!sets.unite(a, b)) throw Error(ErrorCode::NotATree, "seed edges contain a cycle");
    edges.push_back(e);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.endpoints(e);
    if (sets.unite(a, b)) edges.push_back(e);
  }
  return SpanningTree::make(g, edges);
}

}  // namespace ribbon
