#ifndef RIBBON_CYCLE_HPP
#define RIBBON_CYCLE_HPP

#include <compare>
#include <optional>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// Edge-injective walk; consecutive darts chain head to tail. May be empty
/// (the geodesic from a vertex to itself).
class DirectedPath {
 public:
  DirectedPath() = default;
  static DirectedPath make(const RibbonGraph& g, std::vector<DartId> darts);

  const std::vector<DartId>& darts() const { return darts_; }
  std::size_t size() const { return darts_.size(); }
  bool empty() const { return darts_.empty(); }

  /// Vertices visited in order; has size() + 1 entries, or is empty.
  std::vector<VertexId> vertices(const RibbonGraph& g) const;
  DirectedPath reversed() const;

  friend bool operator==(const DirectedPath&, const DirectedPath&) = default;

 private:
  explicit DirectedPath(std::vector<DartId> darts) : darts_(std::move(darts)) {}
  std::vector<DartId> darts_;
};

/**
 * Oriented cycle, vertex- and edge-injective, stored rotated so that its
 * smallest dart id comes first. Equality is therefore independent of the
 * starting point, while C and its reversal stay distinct.
 *
 * The length-2 cycle (d, reverse(d)) is admitted; is_degenerate() flags it.
 */
class DirectedCycle {
 public:
  static DirectedCycle make(const RibbonGraph& g, std::vector<DartId> darts);

  const std::vector<DartId>& darts() const { return darts_; }
  const std::vector<VertexId>& vertices() const { return tails_; }
  std::size_t size() const { return darts_.size(); }
  bool is_degenerate() const {
    return darts_.size() == 2 && darts_[1] == RibbonGraph::reverse(darts_[0]);
  }

  bool contains(VertexId v) const;
  /// Dart of the cycle leaving x.
  DartId out_dart(VertexId x) const;
  /// Dart at x of the cycle edge arriving at x (i.e. the reversed arriving dart).
  DartId in_dart(VertexId x) const;

  DirectedCycle reversed() const;

  friend bool operator==(const DirectedCycle& a, const DirectedCycle& b) {
    return a.darts_ == b.darts_;
  }
  friend auto operator<=>(const DirectedCycle& a, const DirectedCycle& b) {
    return a.darts_ <=> b.darts_;
  }

 private:
  DirectedCycle() = default;
  int index_of(VertexId x) const;

  std::vector<DartId> darts_;
  std::vector<VertexId> tails_;
};

/// Parses a cycle from tokens that are either "<edge>" or "<edge>@<tail>".
/// Orientation follows the token order; a bare first token of a length-2
/// cycle is read as leaving the edge's first listed end.
DirectedCycle parse_cycle(const RibbonGraph& g, const std::vector<std::string>& tokens);

enum class Side { OnCycle, Left, Right };

/// Right darts at x come strictly after the cycle's out-dart and before its
/// in-dart in the cyclic order at x; Left darts strictly after the in-dart
/// and before the out-dart. For a degenerate cycle every other dart is Left.
Side classify_side(const RibbonGraph& g, const DirectedCycle& c, DartId d);

struct SideCounts {
  int left = 0;
  int right = 0;
};
SideCounts side_counts(const RibbonGraph& g, const DirectedCycle& c, VertexId x);

struct WitnessSearch {
  std::optional<DirectedPath> short_witness;  // a single chord, left at its start
  std::optional<DirectedPath> long_witness;   // passes through vertices off the cycle
  bool separating() const { return !short_witness && !long_witness; }
};

/// Complete search: every witness either is one chord or runs through a
/// single component of G - V(C) touched from both sides.
WitnessSearch find_witnesses(const RibbonGraph& g, const DirectedCycle& c);

struct Separation {
  bool separating = true;
  std::optional<DirectedPath> witness;
};
Separation is_separating(const RibbonGraph& g, const DirectedCycle& c);

/// Every non-degenerate directed cycle of g, in a deterministic order.
std::vector<DirectedCycle> enumerate_cycles(const RibbonGraph& g);

}  // namespace ribbon

#endif  // RIBBON_CYCLE_HPP
