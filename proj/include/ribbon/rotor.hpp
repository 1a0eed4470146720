#ifndef RIBBON_ROTOR_HPP
#define RIBBON_ROTOR_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ribbon/cycle.hpp"
#include "ribbon/spanning_tree.hpp"

namespace ribbon {

/// One outgoing dart per vertex, except possibly at an excluded root.
class RotorConfiguration {
 public:
  RotorConfiguration() = default;

  static RotorConfiguration make(const RibbonGraph& g, std::vector<DartId> rotors,
                                 std::optional<VertexId> excluded_root = std::nullopt);

  /// T oriented toward `root`, with no rotor at the root.
  static RotorConfiguration toward_root(const RibbonGraph& g, SpanningTree t, VertexId root);

  /// T oriented toward tail(e), plus the rotor e at tail(e).
  static RotorConfiguration tree_plus_dart(const RibbonGraph& g, SpanningTree t, DartId e);

  DartId operator[](VertexId v) const { return rotors_[v]; }
  const std::vector<DartId>& rotors() const { return rotors_; }
  std::optional<VertexId> excluded_root() const { return excluded_root_; }
  bool is_total() const { return !excluded_root_; }

  RotorConfiguration with(VertexId v, DartId d) const;

  /// The tree formed by every rotor except the one at v (T_v of a unicycle,
  /// or the underlying tree of a rooted configuration when v is the root).
  SpanningTree tree_without(const RibbonGraph& g, VertexId v) const;

  friend bool operator==(const RotorConfiguration&, const RotorConfiguration&) = default;

 private:
  RotorConfiguration(std::vector<DartId> rotors, std::optional<VertexId> root)
      : rotors_(std::move(rotors)), excluded_root_(root) {}

  std::vector<DartId> rotors_;
  std::optional<VertexId> excluded_root_;
};

struct RotorState {
  RotorConfiguration config;
  VertexId chip = 0;

  friend bool operator==(const RotorState&, const RotorState&) = default;
};

/// The single directed cycle of a total configuration's functional graph, if
/// there is exactly one.
std::optional<DirectedCycle> unique_cycle(const RibbonGraph& g, const RotorConfiguration& config);

/// A total rotor configuration with one directed cycle, and a chip on it.
class Unicycle {
 public:
  static Unicycle make(const RibbonGraph& g, RotorConfiguration config, VertexId chip);

  const RotorConfiguration& config() const { return state_.config; }
  VertexId chip() const { return state_.chip; }
  const RotorState& state() const { return state_; }
  const DirectedCycle& cycle() const { return *cycle_; }

 private:
  Unicycle(RotorState state, DirectedCycle cycle) : state_(std::move(state)), cycle_(std::move(cycle)) {}

  RotorState state_;
  std::optional<DirectedCycle> cycle_;
};

struct TraceStep {
  VertexId at;
  DartId rotor;  // the rotor at `at` after advancing; the chip moves along it
  VertexId to;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Step-by-step log of a run.
struct TraceRecord {
  RotorState initial;
  RotorState final;
  std::vector<TraceStep> steps;

  /// Replaying the steps from `initial` lands on `final`.
  bool replays(const RibbonGraph& g) const;
  /// Sorted distinct darts the chip moved along. For the run from a unicycle
  /// to its reversal this is the edge set E_C of the reversal.
  std::vector<DartId> traversed_darts() const;
  /// Departures from each vertex.
  std::vector<int> departures(int num_vertices) const;
  /// One {"at","rotor","to"} object per line.
  std::string to_json_lines(const RibbonGraph& g) const;
};

struct StepOutcome {
  RotorConfiguration config;
  VertexId chip;
  TraceStep entry;
};

/// Advance the rotor at x and move the chip along it.
StepOutcome step(const RibbonGraph& g, const RotorConfiguration& config, VertexId x);

/// Runs the full 2m-step period and checks it: the state recurs, every dart
/// is traversed once, every rotor turns exactly once. Throws PeriodViolation.
TraceRecord run_cycle_period(const RibbonGraph& g, const Unicycle& u);

struct Route {
  RotorConfiguration config;
  TraceRecord trace;
};

/// (rho, x) ~>_y (sigma, y): run until the chip first stands on y.
Route route_first_arrival(const RibbonGraph& g, const Unicycle& u, VertexId y);

/// (rho, x) ~>_{y,e} (sigma, y): the unique state within one period with the
/// chip on y = tail(e) and sigma[y] = e.
Route route_to_rotor_state(const RibbonGraph& g, const Unicycle& u, VertexId y, DartId e);

/// Rotors on C reversed, everything else kept. Requires C = C(rho).
RotorConfiguration reverse_on_cycle(const RibbonGraph& g, const RotorConfiguration& rho,
                                    const DirectedCycle& c);

/// Deterministic unicycle realizing C: the cycle minus its first dart's edge
/// is extended to a spanning tree in edge-id order, oriented toward the tail
/// of that dart, and the dart is added. The chip sits on that tail.
Unicycle canonical_unicycle(const RibbonGraph& g, const DirectedCycle& c);

/// Whether (rho-bar, v) occurs within one period from (rho, v).
bool reverses_within_period(const RibbonGraph& g, const Unicycle& u);

/// Reversibility of C, decided from canonical_unicycle().
bool is_reversible(const RibbonGraph& g, const DirectedCycle& c);

/// Trace of the run (rho, v) ~> (rho-bar, v), if C(rho) is reversible.
std::optional<TraceRecord> reversal_trace(const RibbonGraph& g, const Unicycle& u);

struct MaximalReversal {
  RotorConfiguration config;
  VertexId vertex;
  TraceRecord trace;
};

/// First state, the initial one included, with the chip at some u on C and
/// the rotor at u equal to the reversed cycle's dart there. Only a degenerate
/// cycle can match at the start.
MaximalReversal maximal_reversal(const RibbonGraph& g, const Unicycle& u);

struct LcrcPartition {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};

/// Vertices off C split by which side of C they hang from; nullopt when some
/// component of G - V(C) touches both sides.
std::optional<LcrcPartition> lcrc_partition(const RibbonGraph& g, const DirectedCycle& c);

/// Number of unicycles whose cycle is C (chip positions included).
std::uint64_t count_unicycles(const RibbonGraph& g, const DirectedCycle& c);

/// Every unicycle whose cycle is C; throws CapExceeded above `cap`.
std::vector<Unicycle> unicycles_for_cycle(const RibbonGraph& g, const DirectedCycle& c,
                                          std::uint64_t cap);

/// Number of total configurations (product of degrees); an upper bound for
/// the number of unicycle rotor configurations.
std::uint64_t count_total_configurations(const RibbonGraph& g);

/// Every unicycle of g; throws CapExceeded if more than `cap` total
/// configurations would be scanned.
std::vector<Unicycle> all_unicycles(const RibbonGraph& g, std::uint64_t cap);

/// A unicycle drawn as (rho_e(T), chip) with T, e and the chip uniform.
Unicycle random_unicycle(const RibbonGraph& g, const std::vector<SpanningTree>& trees,
                         std::mt19937_64& rng);

/// Rotor-routing with the root excluded: from `chip`, run until the chip
/// reaches the root. Rotors are updated in place; returns the step count.
/// Appends the visited vertices (start included) to `visits` when given.
std::int64_t route_to_root(const RibbonGraph& g, std::vector<DartId>& rotors, VertexId chip,
                           VertexId root, std::vector<VertexId>* visits = nullptr,
                           std::vector<TraceStep>* steps = nullptr);

}  // namespace ribbon

#endif  // RIBBON_ROTOR_HPP
