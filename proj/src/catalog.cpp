#include "ribbon/catalog.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

namespace ribbon {

namespace {

using Rotation = std::map<std::string, std::vector<std::string>>;

std::string edge_id(int i) { return "e" + std::to_string(i); }

RibbonGraph banana(int n) {
  std::vector<EdgeSpec> edges;
  Rotation rotation;
  for (int i = 1; i <= n; ++i) {
    edges.push_back({edge_id(i), "a", "b"});
    rotation["a"].push_back(edge_id(i));
    rotation["b"].insert(rotation["b"].begin(), edge_id(i));
  }
  return RibbonGraph::build({"a", "b"}, edges, rotation);
}

RibbonGraph triangle() {
  return RibbonGraph::build({"a", "b", "c"},
                            {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "a"}},
                            {{"a", {"e1", "e3"}}, {"b", {"e1", "e2"}}, {"c", {"e2", "e3"}}});
}

// Paths of lengths 1, 2 and 3 from a to b.
RibbonGraph theta() {
  return RibbonGraph::build({"a", "b", "c", "d", "e"},
                            {{"e1", "a", "b"},
                             {"e2", "a", "c"},
                             {"e3", "c", "b"},
                             {"e4", "a", "d"},
                             {"e5", "d", "e"},
                             {"e6", "e", "b"}},
                            {{"a", {"e1", "e2", "e4"}},
                             {"b", {"e1", "e6", "e3"}},
                             {"c", {"e2", "e3"}},
                             {"d", {"e4", "e5"}},
                             {"e", {"e5", "e6"}}});
}

// Counterclockwise orders of a straight-line drawing: a at the center of
// the triangle b, c, d.
RibbonGraph k4() {
  return RibbonGraph::build({"a", "b", "c", "d"},
                            {{"e1", "a", "b"},
                             {"e2", "a", "c"},
                             {"e3", "a", "d"},
                             {"e4", "b", "c"},
                             {"e5", "b", "d"},
                             {"e6", "c", "d"}},
                            {{"a", {"e1", "e2", "e3"}},
                             {"b", {"e4", "e1", "e5"}},
                             {"c", {"e6", "e2", "e4"}},
                             {"d", {"e5", "e3", "e6"}}});
}

RibbonGraph k5() {
  const std::vector<std::string> names{"a", "b", "c", "d", "e"};
  std::vector<EdgeSpec> edges;
  Rotation rotation;
  int next = 1;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const std::string id = edge_id(next++);
      edges.push_back({id, names[i], names[j]});
      rotation[names[i]].push_back(id);
      rotation[names[j]].push_back(id);
    }
  }
  return RibbonGraph::build(names, edges, rotation);
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"P2", "B2", "B3", "B4", "B5", "B6", "C3", "theta", "K4", "K5"};
}

RibbonGraph builtin_graph(const std::string& name) {
  if (name == "P2") return banana(1);
  if (name.size() == 2 && name[0] == 'B' && name[1] >= '2' && name[1] <= '6') {
    return banana(name[1] - '0');
  }
  if (name == "C3") return triangle();
  if (name == "theta") return theta();
  if (name == "K4") return k4();
  if (name == "K5") return k5();
  throw Error(ErrorCode::InvalidInput, "unknown builtin graph '" + name + "'");
}

std::uint64_t count_rotation_systems(const RibbonGraph& g) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (int k = 2; k < g.degree(v); ++k) {
      if (total > kMax / k) return kMax;
      total *= k;
    }
  }
  return total;
}

std::vector<RibbonGraph> generate_rotation_systems(const RibbonGraph& g, const RotationMode& mode) {
  const int n = g.num_vertices();
  std::vector<std::vector<DartId>> base(n);
  for (VertexId v = 0; v < n; ++v) {
    base[v].assign(g.darts_at(v).begin(), g.darts_at(v).end());
    std::sort(base[v].begin(), base[v].end());
  }

  std::vector<RibbonGraph> out;
  switch (mode.kind) {
    case RotationMode::Kind::Default:
      out.push_back(g);
      break;
    case RotationMode::Kind::All: {
      const std::uint64_t total = count_rotation_systems(g);
      if (total > kMaxRotationSystems) {
        throw Error(ErrorCode::CapExceeded, std::to_string(total) + " rotation systems exceed the cap of " +
                                                std::to_string(kMaxRotationSystems));
      }
      out.reserve(total);
      auto current = base;
      while (true) {
        out.push_back(g.with_rotation(current));
        // Odometer over vertices, the last vertex turning fastest.
        int v = n - 1;
        for (; v >= 0; --v) {
          if (std::next_permutation(current[v].begin() + (current[v].empty() ? 0 : 1), current[v].end())) break;
        }
        if (v < 0) break;
      }
      break;
    }
    case RotationMode::Kind::Sample: {
      std::mt19937_64 rng(mode.seed);
      out.reserve(mode.count);
      for (std::uint64_t i = 0; i < mode.count; ++i) {
        auto current = base;
        for (auto& list : current) {
          if (list.size() > 2) std::shuffle(list.begin() + 1, list.end(), rng);
        }
        out.push_back(g.with_rotation(current));
      }
      break;
    }
  }
  return out;
}

}  // namespace ribbon
