#include "ribbon/cycle.hpp"

#include <algorithm>
#include <deque>

namespace ribbon {

namespace {

std::string path_error(const RibbonGraph& g, DartId a, DartId b) {
  return "dart " + g.dart_name(b) + " does not continue from " + g.dart_name(a);
}

}  // namespace

// --- DirectedPath ---------------------------------------------------------

DirectedPath DirectedPath::make(const RibbonGraph& g, std::vector<DartId> darts) {
  std::vector<char> used(g.num_edges(), 0);
  for (std::size_t i = 0; i < darts.size(); ++i) {
    const DartId d = darts[i];
    if (d < 0 || d >= g.num_darts()) throw Error(ErrorCode::InvalidInput, "dart out of range");
    if (i > 0 && g.head(darts[i - 1]) != g.tail(d)) {
      throw Error(ErrorCode::InvalidInput, path_error(g, darts[i - 1], d));
    }
    auto& u = used[RibbonGraph::edge_of(d)];
    if (u) throw Error(ErrorCode::InvalidInput, "path repeats edge " + g.edge_name(RibbonGraph::edge_of(d)));
    u = 1;
  }
  return DirectedPath(std::move(darts));
}

std::vector<VertexId> DirectedPath::vertices(const RibbonGraph& g) const {
  std::vector<VertexId> out;
  if (darts_.empty()) return out;
  out.reserve(darts_.size() + 1);
  out.push_back(g.tail(darts_.front()));
  for (DartId d : darts_) out.push_back(g.head(d));
  return out;
}

DirectedPath DirectedPath::reversed() const {
  std::vector<DartId> out(darts_.rbegin(), darts_.rend());
  for (auto& d : out) d = RibbonGraph::reverse(d);
  return DirectedPath(std::move(out));
}

// --- DirectedCycle --------------------------------------------------------

DirectedCycle DirectedCycle::make(const RibbonGraph& g, std::vector<DartId> darts) {
  const std::size_t k = darts.size();
  if (k < 2) throw Error(ErrorCode::NotACycle, "a cycle needs at least two darts");
  for (DartId d : darts) {
    if (d < 0 || d >= g.num_darts()) throw Error(ErrorCode::NotACycle, "dart out of range");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const DartId a = darts[i];
    const DartId b = darts[(i + 1) % k];
    if (g.head(a) != g.tail(b)) throw Error(ErrorCode::NotACycle, path_error(g, a, b));
  }
  const bool degenerate = k == 2 && darts[1] == RibbonGraph::reverse(darts[0]);
  std::vector<VertexId> tails;
  std::vector<EdgeId> edges;
  for (DartId d : darts) {
    tails.push_back(g.tail(d));
    edges.push_back(RibbonGraph::edge_of(d));
  }
  std::sort(tails.begin(), tails.end());
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(tails.begin(), tails.end()) != tails.end()) {
    throw Error(ErrorCode::NotACycle, "cycle repeats a vertex");
  }
  if (!degenerate && std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::NotACycle, "cycle repeats an edge");
  }

  std::rotate(darts.begin(), std::min_element(darts.begin(), darts.end()), darts.end());
  DirectedCycle c;
  c.darts_ = std::move(darts);
  for (DartId d : c.darts_) c.tails_.push_back(g.tail(d));
  return c;
}

int DirectedCycle::index_of(VertexId x) const {
  const auto it = std::find(tails_.begin(), tails_.end(), x);
  return it == tails_.end() ? -1 : static_cast<int>(it - tails_.begin());
}

bool DirectedCycle::contains(VertexId v) const { return index_of(v) >= 0; }

DartId DirectedCycle::out_dart(VertexId x) const {
  const int i = index_of(x);
  if (i < 0) throw Error(ErrorCode::VertexNotOnCycle, "vertex not on cycle");
  return darts_[i];
}

DartId DirectedCycle::in_dart(VertexId x) const {
  const int i = index_of(x);
  if (i < 0) throw Error(ErrorCode::VertexNotOnCycle, "vertex not on cycle");
  const int k = static_cast<int>(darts_.size());
  return RibbonGraph::reverse(darts_[(i + k - 1) % k]);
}

DirectedCycle DirectedCycle::reversed() const {
  DirectedCycle c;
  c.darts_.assign(darts_.rbegin(), darts_.rend());
  for (auto& d : c.darts_) d = RibbonGraph::reverse(d);
  // Tail of reverse(d) is the head of d, which is the next tail along the cycle.
  const std::size_t k = tails_.size();
  c.tails_.resize(k);
  for (std::size_t i = 0; i < k; ++i) c.tails_[i] = tails_[(2 * k - i) % k];
  const auto first = std::min_element(c.darts_.begin(), c.darts_.end()) - c.darts_.begin();
  std::rotate(c.darts_.begin(), c.darts_.begin() + first, c.darts_.end());
  std::rotate(c.tails_.begin(), c.tails_.begin() + first, c.tails_.end());
  return c;
}

DirectedCycle parse_cycle(const RibbonGraph& g, const std::vector<std::string>& tokens) {
  if (tokens.size() < 2) throw Error(ErrorCode::NotACycle, "a cycle needs at least two edges");
  auto explicit_dart = [&](const std::string& t) -> std::optional<DartId> {
    if (t.find('@') == std::string::npos) return std::nullopt;
    return g.parse_dart(t);
  };

  std::vector<DartId> darts;
  if (auto d = explicit_dart(tokens[0])) {
    darts.push_back(*d);
  } else {
    const EdgeId e = g.edge(tokens[0]);
    const auto [a, b] = g.endpoints(e);
    VertexId head = b;
    if (auto next = explicit_dart(tokens[1])) {
      head = g.tail(*next);
    } else {
      const auto [c, d] = g.endpoints(g.edge(tokens[1]));
      const bool a_shared = a == c || a == d;
      const bool b_shared = b == c || b == d;
      if (a_shared && !b_shared) head = a;
    }
    darts.push_back(g.dart_from(e, head == b ? a : b));
  }
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const VertexId at = g.head(darts.back());
    if (auto d = explicit_dart(tokens[i])) {
      darts.push_back(*d);
    } else {
      darts.push_back(g.dart_from(g.edge(tokens[i]), at));
    }
  }
  return DirectedCycle::make(g, std::move(darts));
}

// --- sides and separation -------------------------------------------------

Side classify_side(const RibbonGraph& g, const DirectedCycle& c, DartId d) {
  const VertexId x = g.tail(d);
  const DartId out = c.out_dart(x);
  const DartId in = c.in_dart(x);
  if (d == out || d == in) return Side::OnCycle;
  if (out == in) return Side::Left;
  const int deg = g.degree(x);
  const int base = g.rotation_index(out);
  const int pos_d = (g.rotation_index(d) - base + deg) % deg;
  const int pos_in = (g.rotation_index(in) - base + deg) % deg;
  return pos_d < pos_in ? Side::Right : Side::Left;
}

SideCounts side_counts(const RibbonGraph& g, const DirectedCycle& c, VertexId x) {
  SideCounts counts;
  for (DartId d : g.darts_at(x)) {
    switch (classify_side(g, c, d)) {
      case Side::Left: ++counts.left; break;
      case Side::Right: ++counts.right; break;
      case Side::OnCycle: break;
    }
  }
  return counts;
}

WitnessSearch find_witnesses(const RibbonGraph& g, const DirectedCycle& c) {
  WitnessSearch result;
  if (c.is_degenerate()) return result;

  std::vector<char> on_cycle(g.num_vertices(), 0);
  for (VertexId v : c.vertices()) on_cycle[v] = 1;
  std::vector<char> cycle_edge(g.num_edges(), 0);
  for (DartId d : c.darts()) cycle_edge[RibbonGraph::edge_of(d)] = 1;

  for (DartId d = 0; d < g.num_darts() && !result.short_witness; ++d) {
    if (cycle_edge[RibbonGraph::edge_of(d)] || !on_cycle[g.tail(d)] || !on_cycle[g.head(d)]) {
      continue;
    }
    if (classify_side(g, c, d) == Side::Left &&
        classify_side(g, c, RibbonGraph::reverse(d)) == Side::Right) {
      result.short_witness = DirectedPath::make(g, {d});
    }
  }

  // Components of G - V(C), labelled in order of smallest vertex.
  const int n = g.num_vertices();
  std::vector<int> component(n, -1);
  int components = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (on_cycle[s] || component[s] >= 0) continue;
    std::vector<VertexId> stack{s};
    component[s] = components;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (DartId d : g.darts_at(v)) {
        const VertexId w = g.head(d);
        if (!on_cycle[w] && component[w] < 0) {
          component[w] = components;
          stack.push_back(w);
        }
      }
    }
    ++components;
  }

  std::vector<DartId> left_entry(components, kNoDart);
  std::vector<DartId> right_entry(components, kNoDart);
  for (VertexId x : c.vertices()) {
    for (DartId d : g.darts_at(x)) {
      const VertexId w = g.head(d);
      if (on_cycle[w]) continue;
      const int k = component[w];
      const Side side = classify_side(g, c, d);
      if (side == Side::Left && left_entry[k] == kNoDart) left_entry[k] = d;
      if (side == Side::Right && right_entry[k] == kNoDart) right_entry[k] = d;
    }
  }

  for (int k = 0; k < components; ++k) {
    if (left_entry[k] == kNoDart || right_entry[k] == kNoDart) continue;
    const VertexId from = g.head(left_entry[k]);
    const VertexId to = g.head(right_entry[k]);
    std::vector<DartId> parent(n, kNoDart);
    std::vector<char> seen(n, 0);
    std::deque<VertexId> queue{from};
    seen[from] = 1;
    while (!queue.empty() && !seen[to]) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (DartId d : g.darts_at(v)) {
        const VertexId w = g.head(d);
        if (on_cycle[w] || seen[w]) continue;
        seen[w] = 1;
        parent[w] = d;
        queue.push_back(w);
      }
    }
    std::vector<DartId> inner;
    for (VertexId v = to; v != from; v = g.tail(parent[v])) inner.push_back(parent[v]);
    std::vector<DartId> darts{left_entry[k]};
    darts.insert(darts.end(), inner.rbegin(), inner.rend());
    darts.push_back(RibbonGraph::reverse(right_entry[k]));
    result.long_witness = DirectedPath::make(g, std::move(darts));
    break;
  }
  return result;
}

Separation is_separating(const RibbonGraph& g, const DirectedCycle& c) {
  WitnessSearch search = find_witnesses(g, c);
  Separation s;
  s.separating = search.separating();
  if (search.short_witness) {
    s.witness = std::move(search.short_witness);
  } else if (search.long_witness) {
    s.witness = std::move(search.long_witness);
  }
  return s;
}

// --- enumeration ----------------------------------------------------------

namespace {

struct CycleSearch {
  const RibbonGraph& g;
  VertexId start;
  std::vector<char> on_path;
  std::vector<char> edge_used;
  std::vector<DartId> path;
  std::vector<DirectedCycle> out;

  void extend(VertexId v) {
    for (DartId d : g.darts_at(v)) {
      const EdgeId e = RibbonGraph::edge_of(d);
      if (edge_used[e]) continue;
      const VertexId w = g.head(d);
      if (w == start) {
        path.push_back(d);
        out.push_back(DirectedCycle::make(g, path));
        path.pop_back();
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = 1;
      edge_used[e] = 1;
      path.push_back(d);
      extend(w);
      path.pop_back();
      edge_used[e] = 0;
      on_path[w] = 0;
    }
  }
};

}  // namespace

std::vector<DirectedCycle> enumerate_cycles(const RibbonGraph& g) {
  std::vector<DirectedCycle> all;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    CycleSearch search{g, s, std::vector<char>(g.num_vertices(), 0),
                       std::vector<char>(g.num_edges(), 0), {}, {}};
    search.on_path[s] = 1;
    search.extend(s);
    for (auto& c : search.out) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace ribbon
