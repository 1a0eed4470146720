#include "ribbon/geodesic.hpp"

#include <climits>

namespace ribbon {

bool ReversibilityCache::operator()(const DirectedCycle& c) {
  const auto it = cache_.find(c.darts());
  if (it != cache_.end()) return it->second;
  const bool result = is_reversible(*g_, c);
  cache_.emplace(c.darts(), result);
  return result;
}

namespace {

constexpr std::size_t kMaxRecordedViolations = 10;

}  // namespace

GeodesicReport check_geodesic_identities(const TorsorAction& action, ReversibilityCache& cache) {
  const RibbonGraph& g = action.graph();
  const int n = g.num_vertices();
  const auto& trees = action.trees();

  GeodesicReport report;
  report.planar = is_planar(g);

  auto gen = [&](VertexId root, VertexId v, int t) { return action.generator(root, v)[t]; };
  auto gen_inv = [&](VertexId root, VertexId v, int t) {
    return action.generator_inverse(root, v)[t];
  };
  auto violation = [&](IdentityTally& tally, GeodesicInstance instance) {
    ++tally.violations;
    if (report.violations.size() < kMaxRecordedViolations) {
      report.violations.push_back(std::move(instance));
    }
  };

  for (int t = 0; t < trees.size(); ++t) {
    const SpanningTree tree = trees[t];
    std::vector<std::vector<DartId>> toward(n);
    for (VertexId root = 0; root < n; ++root) toward[root] = orient_toward(g, tree, root);
    auto geodesic = [&](VertexId from, VertexId to) {
      std::vector<VertexId> out{from};
      for (VertexId v = from; v != to; v = g.head(toward[to][v])) out.push_back(g.head(toward[to][v]));
      return out;
    };

    for (DartId e = 0; e < g.num_darts(); ++e) {
      const VertexId y = g.tail(e);
      const VertexId x = g.head(e);
      const bool reversible_here = cache(fundamental_cycle(g, tree, e));
      for (VertexId s : geodesic(x, y)) {
        const int moved = gen(y, s, t);  // T' = (s-y)_y(T)
        const bool equation = gen(x, y, moved) == gen(x, s, t);
        const bool reversible_there = cache(fundamental_cycle(g, trees[moved], e));
        const GeodesicInstance instance{"", tree, e, x, y, s, -1};

        if (reversible_here && reversible_there) {
          ++report.part_a.checked;
          if (!equation) {
            auto v = instance;
            v.part = "a";
            violation(report.part_a, v);
          }
        }
        if (equation) {
          ++report.part_b.checked;
          if (reversible_here != reversible_there) {
            auto v = instance;
            v.part = "b";
            violation(report.part_b, v);
          }
        } else {
          ++report.equation_failures;
          if (!report.first_equation_failure) {
            report.first_equation_failure = instance;
            report.first_equation_failure->part = "equation";
            report.first_failure_both_nonreversible = !reversible_here && !reversible_there;
          }
        }
      }
    }

    std::vector<VertexId> visits;
    std::vector<int> first_visit(n);
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId z = 0; z < n; ++z) {
        auto rotors = toward[x];
        visits.clear();
        route_to_root(g, rotors, z, x, &visits);
        std::fill(first_visit.begin(), first_visit.end(), INT_MAX);
        for (std::size_t i = 0; i < visits.size(); ++i) {
          if (first_visit[visits[i]] == INT_MAX) first_visit[visits[i]] = static_cast<int>(i);
        }
        for (VertexId s = 0; s < n; ++s) {
          if (first_visit[s] == INT_MAX) continue;
          bool first_on_path = true;
          for (VertexId w : geodesic(s, x)) first_on_path &= first_visit[w] >= first_visit[s];
          if (!first_on_path) continue;
          ++report.part_c.checked;
          // (z-s)_x = (z-x)_x - (s-x)_x
          if (gen(x, z, gen_inv(x, s, t)) != gen(s, z, t)) {
            violation(report.part_c, GeodesicInstance{"c", tree, kNoDart, x, -1, s, z});
          }
        }
      }
    }

    if (!report.planar) continue;
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = 0; y < n; ++y) {
        if (x == y || g.multiplicity(x, y) == 0) continue;
        for (VertexId s : geodesic(x, y)) {
          ++report.part_d_geodesic.checked;
          if (gen(x, s, gen_inv(x, y, t)) != gen(y, s, t)) {
            violation(report.part_d_geodesic, GeodesicInstance{"d-geodesic", tree, kNoDart, x, y, s, -1});
          }
        }
        for (VertexId z = 0; z < n; ++z) {
          ++report.part_d_adjacent.checked;
          if (gen(x, z, t) != gen(y, z, gen_inv(y, x, t))) {
            violation(report.part_d_adjacent, GeodesicInstance{"d-adjacent", tree, kNoDart, x, y, -1, z});
          }
        }
      }
    }
  }
  return report;
}

IdentityTally check_reversal_identity(const TorsorAction& action) {
  const RibbonGraph& g = action.graph();
  IdentityTally tally;
  for (const SpanningTree& t : action.trees().trees()) {
    for (DartId e = 0; e < g.num_darts(); ++e) {
      const auto rho = RotorConfiguration::tree_plus_dart(g, t, e);
      const auto rho_bar = RotorConfiguration::tree_plus_dart(g, t, RibbonGraph::reverse(e));
      ++tally.checked;
      if (reverse_on_cycle(g, rho, fundamental_cycle(g, t, e)) != rho_bar) ++tally.violations;
    }
  }
  return tally;
}

IdentityTally check_routing_computes_action(const TorsorAction& action) {
  const RibbonGraph& g = action.graph();
  const auto& trees = action.trees();
  IdentityTally tally;
  for (int t = 0; t < trees.size(); ++t) {
    for (DartId e = 0; e < g.num_darts(); ++e) {
      if (trees[t].contains(RibbonGraph::edge_of(e))) continue;
      const VertexId y = g.tail(e);
      const auto rho = RotorConfiguration::tree_plus_dart(g, trees[t], e);
      const auto cycle = fundamental_cycle(g, trees[t], e);
      for (VertexId s : cycle.vertices()) {
        ++tally.checked;
        const auto route = route_first_arrival(g, Unicycle::make(g, rho, s), y);
        const int expected = action.generator(y, s)[t];
        if (trees.index_of(route.config.tree_without(g, y)) != expected) ++tally.violations;
      }
    }
  }
  return tally;
}

GeodesicReport check_geodesic_identities(const RibbonGraph& g) {
  TorsorAction action(g);
  ReversibilityCache cache(g);
  return check_geodesic_identities(action, cache);
}

}  // namespace ribbon
