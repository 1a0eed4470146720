// Brute-force reference computations for the tests. They work from plain
// names and lists and share no code with the library's algorithms.
#ifndef RIBBON_TESTS_ORACLES_HPP
#define RIBBON_TESTS_ORACLES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace oracle {

struct PlainGraph {
  std::vector<std::string> vertices;
  std::map<std::string, std::pair<std::string, std::string>> edges;  // id -> ends
  std::map<std::string, std::vector<std::string>> rotation;          // vertex -> edge ids
};

inline PlainGraph from(const ribbon::RibbonGraph& g) {
  PlainGraph p;
  p.vertices = g.vertex_names();
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.endpoints(e);
    p.edges[g.edge_name(e)] = {g.vertex_name(a), g.vertex_name(b)};
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int d : g.darts_at(v)) p.rotation[g.vertex_name(v)].push_back(g.edge_name(d >> 1));
  }
  return p;
}

inline const std::string& other_end(const PlainGraph& p, const std::string& edge, const std::string& v) {
  const auto& ends = p.edges.at(edge);
  return ends.first == v ? ends.second : ends.first;
}

/// Faces traced on half-edges (edge, vertex): leave v along edge, arrive at
/// w, continue with the edge after `edge` in w's list.
inline int face_count(const PlainGraph& p) {
  std::set<std::pair<std::string, std::string>> seen;
  int faces = 0;
  for (const auto& [v, list] : p.rotation) {
    for (const auto& start_edge : list) {
      if (seen.count({start_edge, v})) continue;
      ++faces;
      std::pair<std::string, std::string> h{start_edge, v};
      while (!seen.count(h)) {
        seen.insert(h);
        const std::string w = other_end(p, h.first, h.second);
        const auto& at_w = p.rotation.at(w);
        const auto pos = std::find(at_w.begin(), at_w.end(), h.first) - at_w.begin();
        h = {at_w[(pos + 1) % at_w.size()], w};
      }
    }
  }
  return faces;
}

inline int genus(const PlainGraph& p) {
  const int chi = static_cast<int>(p.vertices.size()) - static_cast<int>(p.edges.size()) + face_count(p);
  return (2 - chi) / 2;
}

/// Spanning trees by checking every (n-1)-subset with union-find.
inline std::vector<std::vector<std::string>> spanning_trees(const PlainGraph& p) {
  std::vector<std::string> ids;
  for (const auto& [id, ends] : p.edges) ids.push_back(id);
  const int n = static_cast<int>(p.vertices.size());
  const int m = static_cast<int>(ids.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[p.vertices[i]] = i;
  std::vector<std::vector<std::string>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (__builtin_popcountll(mask) != n - 1) continue;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    std::vector<std::string> chosen;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!((mask >> e) & 1)) continue;
      const auto& [a, b] = p.edges.at(ids[e]);
      const int ra = find(index[a]);
      const int rb = find(index[b]);
      if (ra == rb) acyclic = false;
      parent[ra] = rb;
      chosen.push_back(ids[e]);
    }
    if (acyclic) out.push_back(chosen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Determinant by cofactor expansion along the first row.
inline std::int64_t cofactor_det(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(row);
    }
    total += (j % 2 ? -1 : 1) * a[0][j] * cofactor_det(minor);
  }
  return total;
}

inline std::vector<std::vector<std::int64_t>> reduced_laplacian(const PlainGraph& p, std::size_t root) {
  const std::size_t n = p.vertices.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[p.vertices[i]] = i;
  std::vector<std::vector<std::int64_t>> full(n, std::vector<std::int64_t>(n, 0));
  for (const auto& [id, ends] : p.edges) {
    const auto a = index[ends.first];
    const auto b = index[ends.second];
    ++full[a][a];
    ++full[b][b];
    --full[a][b];
    --full[b][a];
  }
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == root) continue;
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != root) row.push_back(full[i][j]);
    }
    out.push_back(row);
  }
  return out;
}

/// D ~ 0 for deg D = 0: the reduced Laplacian is invertible over Q, so D is
/// in the image iff the rational solution with x_root = 0 is integral.
inline bool equivalent_to_zero(const PlainGraph& p, const std::vector<std::int64_t>& d) {
  using boost::multiprecision::cpp_rational;
  const std::size_t root = 0;
  auto a = reduced_laplacian(p, root);
  const std::size_t n = a.size();
  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n] = d[i + 1];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (m[pivot][col] == 0) ++pivot;
    std::swap(m[pivot], m[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const cpp_rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const cpp_rational x = m[i][n] / m[i][i];
    if (denominator(x) != 1) return false;
  }
  return true;
}

/// (v - r)_r(T) by direct simulation on names: orient T toward r by BFS,
/// then advance-and-move until the chip reaches r.
inline std::vector<std::string> act_generator(const PlainGraph& p, const std::string& r,
                                              const std::string& v, std::vector<std::string> tree) {
  std::map<std::string, std::string> rotor;  // vertex -> edge id
  std::set<std::string> done{r};
  std::vector<std::string> frontier{r};
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& u : frontier) {
      for (const auto& e : tree) {
        const auto& [a, b] = p.edges.at(e);
        if (a != u && b != u) continue;
        const std::string w = other_end(p, e, u);
        if (done.count(w)) continue;
        done.insert(w);
        rotor[w] = e;
        next.push_back(w);
      }
    }
    frontier = next;
  }
  std::string chip = v;
  while (chip != r) {
    const auto& list = p.rotation.at(chip);
    const auto pos = std::find(list.begin(), list.end(), rotor[chip]) - list.begin();
    rotor[chip] = list[(pos + 1) % list.size()];
    chip = other_end(p, rotor[chip], chip);
  }
  std::vector<std::string> out;
  for (const auto& [u, e] : rotor) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

#endif  // RIBBON_TESTS_ORACLES_HPP
