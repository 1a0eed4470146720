#ifndef RIBBON_GEODESIC_HPP
#define RIBBON_GEODESIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/torsor.hpp"

namespace ribbon {

/// Memoized is_reversible() keyed by canonical cycle. Not thread-safe.
class ReversibilityCache {
 public:
  explicit ReversibilityCache(const RibbonGraph& g) : g_(&g) {}
  bool operator()(const DirectedCycle& c);
  std::size_t size() const { return cache_.size(); }

 private:
  const RibbonGraph* g_;
  std::map<std::vector<DartId>, bool> cache_;
};

struct IdentityTally {
  std::int64_t checked = 0;
  std::int64_t violations = 0;
};

/// One instance of an identity; unused fields stay -1.
struct GeodesicInstance {
  std::string part;
  SpanningTree tree;
  DartId e = kNoDart;
  VertexId x = -1;
  VertexId y = -1;
  VertexId s = -1;
  VertexId z = -1;
};

/**
 * Exhaustive check of the identities relating spanning-tree actions at
 * different roots:
 *
 *  (a) for e from y to x, s on the tree geodesic x..y and T' = (s-y)_y(T):
 *      if C_e(T) and C_e(T') are reversible then (y-x)_x(T') = (s-x)_x(T);
 *  (b) conversely, when that equation holds the two cycles agree on
 *      reversibility;
 *  (c) if s is the first vertex of the geodesic s..x visited while routing
 *      from (T_x, z), then (z-s)_x(T) = (z-s)_s(T);
 *  (d) planar graphs only, x and y adjacent: (s-y)_x(T) = (s-y)_y(T) for s
 *      on the geodesic x..y, and (z-x)_x(T) = (z-x)_y(T) for every z.
 */
struct GeodesicReport {
  bool planar = false;
  IdentityTally part_a;
  IdentityTally part_b;
  IdentityTally part_c;
  IdentityTally part_d_geodesic;
  IdentityTally part_d_adjacent;

  /// Instances where the equation of (a) fails; not violations by themselves.
  std::int64_t equation_failures = 0;
  std::optional<GeodesicInstance> first_equation_failure;
  bool first_failure_both_nonreversible = false;

  std::vector<GeodesicInstance> violations;  // first few, in search order

  bool passed() const {
    return part_a.violations == 0 && part_b.violations == 0 && part_c.violations == 0 &&
           part_d_geodesic.violations == 0 && part_d_adjacent.violations == 0;
  }
};

GeodesicReport check_geodesic_identities(const TorsorAction& action, ReversibilityCache& cache);
GeodesicReport check_geodesic_identities(const RibbonGraph& g);

/// reverse_on_cycle(rho_e(T)) == rho_{reverse(e)}(T) for every tree and dart.
IdentityTally check_reversal_identity(const TorsorAction& action);

/// For e from y to x outside T and s on the tree geodesic x..y: routing
/// (rho_e(T), s) until the chip first reaches y leaves T_y(sigma) equal to
/// (s - y)_y(T).
IdentityTally check_routing_computes_action(const TorsorAction& action);

}  // namespace ribbon

#endif  // RIBBON_GEODESIC_HPP
