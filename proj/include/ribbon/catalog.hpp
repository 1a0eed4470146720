#ifndef RIBBON_CATALOG_HPP
#define RIBBON_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// P2, B2..B6, C3, theta, K4, K5. Each comes with a planar rotation, except
/// K5 which gets neighbors in name order.
RibbonGraph builtin_graph(const std::string& name);
std::vector<std::string> builtin_names();

inline constexpr std::uint64_t kMaxRotationSystems = 20000;

struct RotationMode {
  enum class Kind { Default, All, Sample };
  Kind kind = Kind::Default;
  std::uint64_t count = 0;  // Sample only
  std::uint64_t seed = 0;   // Sample only

  static RotationMode keep() { return {}; }
  static RotationMode all() { return {Kind::All, 0, 0}; }
  static RotationMode sample(std::uint64_t count, std::uint64_t seed) {
    return {Kind::Sample, count, seed};
  }
};

/// Product over vertices of (deg - 1)!, saturating at UINT64_MAX.
std::uint64_t count_rotation_systems(const RibbonGraph& g);

/// All mode: every rotation system, each vertex's darts starting from its
/// smallest dart, later vertices varying fastest. Refuses more than
/// kMaxRotationSystems with CapExceeded. Sample mode: `count` independent
/// uniform draws from a seeded mt19937_64. Default mode: g itself.
std::vector<RibbonGraph> generate_rotation_systems(const RibbonGraph& g, const RotationMode& mode);

}  // namespace ribbon

#endif  // RIBBON_CATALOG_HPP
