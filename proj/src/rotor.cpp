#include "ribbon/rotor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ribbon/integer_matrix.hpp"

namespace ribbon {

namespace {

/// Mutable simulation state shared by every run below.
struct Walker {
  const RibbonGraph& g;
  std::vector<DartId> rotors;
  VertexId chip;

  TraceStep advance() {
    const DartId d = g.rotate(rotors[chip]);
    rotors[chip] = d;
    const TraceStep s{chip, d, g.head(d)};
    chip = s.to;
    return s;
  }
};

/// Tracks how many rotors differ from a target configuration.
struct MismatchCounter {
  const std::vector<DartId>& target;
  int mismatches = 0;

  MismatchCounter(const std::vector<DartId>& t, const std::vector<DartId>& current) : target(t) {
    for (std::size_t v = 0; v < t.size(); ++v) mismatches += current[v] != t[v];
  }
  void update(VertexId v, DartId before, DartId after) {
    mismatches -= before != target[v];
    mismatches += after != target[v];
  }
};

RotorState make_state(const RibbonGraph& g, const std::vector<DartId>& rotors, VertexId chip,
                      std::optional<VertexId> root = std::nullopt) {
  return RotorState{RotorConfiguration::make(g, rotors, root), chip};
}

int period_length(const RibbonGraph& g) { return 2 * g.num_edges(); }

}  // namespace

// --- RotorConfiguration ---------------------------------------------------

RotorConfiguration RotorConfiguration::make(const RibbonGraph& g, std::vector<DartId> rotors,
                                            std::optional<VertexId> excluded_root) {
  if (static_cast<int>(rotors.size()) != g.num_vertices()) {
    throw Error(ErrorCode::InvalidInput, "rotor configuration needs one entry per vertex");
  }
  if (excluded_root && (*excluded_root < 0 || *excluded_root >= g.num_vertices())) {
    throw Error(ErrorCode::UnknownVertex, "excluded root out of range");
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (excluded_root && v == *excluded_root) {
      rotors[v] = kNoDart;
      continue;
    }
    const DartId d = rotors[v];
    if (d < 0 || d >= g.num_darts() || g.tail(d) != v) {
      throw Error(ErrorCode::InvalidInput, "rotor at '" + g.vertex_name(v) + "' does not leave it");
    }
  }
  return RotorConfiguration(std::move(rotors), excluded_root);
}

RotorConfiguration RotorConfiguration::toward_root(const RibbonGraph& g, SpanningTree t,
                                                   VertexId root) {
  return RotorConfiguration(orient_toward(g, t, root), root);
}

RotorConfiguration RotorConfiguration::tree_plus_dart(const RibbonGraph& g, SpanningTree t,
                                                      DartId e) {
  auto rotors = orient_toward(g, t, g.tail(e));
  rotors[g.tail(e)] = e;
  return RotorConfiguration(std::move(rotors), std::nullopt);
}

RotorConfiguration RotorConfiguration::with(VertexId v, DartId d) const {
  auto rotors = rotors_;
  rotors[v] = d;
  auto root = excluded_root_;
  if (root && *root == v) root.reset();
  return RotorConfiguration(std::move(rotors), root);
}

SpanningTree RotorConfiguration::tree_without(const RibbonGraph& g, VertexId v) const {
  std::vector<EdgeId> edges;
  for (VertexId w = 0; w < static_cast<VertexId>(rotors_.size()); ++w) {
    if (w == v || rotors_[w] == kNoDart) continue;
    edges.push_back(RibbonGraph::edge_of(rotors_[w]));
  }
  std::sort(edges.begin(), edges.end());
  return SpanningTree::make(g, edges);
}

std::optional<DirectedCycle> unique_cycle(const RibbonGraph& g, const RotorConfiguration& config) {
  if (!config.is_total()) return std::nullopt;
  const int n = g.num_vertices();
  std::vector<int> colour(n, 0);  // 0 new, 1 on current walk, 2 finished
  std::optional<VertexId> cycle_start;
  int cycles = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (colour[s]) continue;
    std::vector<VertexId> walk;
    VertexId v = s;
    while (colour[v] == 0) {
      colour[v] = 1;
      walk.push_back(v);
      v = g.head(config[v]);
    }
    if (colour[v] == 1) {
      ++cycles;
      cycle_start = v;
    }
    for (VertexId w : walk) colour[w] = 2;
  }
  if (cycles != 1) return std::nullopt;
  std::vector<DartId> darts;
  VertexId v = *cycle_start;
  do {
    darts.push_back(config[v]);
    v = g.head(config[v]);
  } while (v != *cycle_start);
  return DirectedCycle::make(g, std::move(darts));
}

Unicycle Unicycle::make(const RibbonGraph& g, RotorConfiguration config, VertexId chip) {
  if (!config.is_total()) {
    throw Error(ErrorCode::InvalidInput, "a unicycle needs a rotor at every vertex");
  }
  auto cycle = unique_cycle(g, config);
  if (!cycle) throw Error(ErrorCode::InvalidInput, "configuration does not have exactly one cycle");
  if (!cycle->contains(chip)) throw Error(ErrorCode::VertexNotOnCycle, "chip is not on the cycle");
  return Unicycle(RotorState{std::move(config), chip}, std::move(*cycle));
}

// --- traces ---------------------------------------------------------------

bool TraceRecord::replays(const RibbonGraph& g) const {
  auto rotors = initial.config.rotors();
  VertexId chip = initial.chip;
  for (const auto& s : steps) {
    if (s.at != chip || rotors[chip] == kNoDart) return false;
    const DartId d = g.rotate(rotors[chip]);
    if (d != s.rotor || g.head(d) != s.to) return false;
    rotors[chip] = d;
    chip = s.to;
  }
  return chip == final.chip && rotors == final.config.rotors();
}

std::vector<DartId> TraceRecord::traversed_darts() const {
  std::vector<DartId> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.rotor);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> TraceRecord::departures(int num_vertices) const {
  std::vector<int> out(num_vertices, 0);
  for (const auto& s : steps) ++out[s.at];
  return out;
}

std::string TraceRecord::to_json_lines(const RibbonGraph& g) const {
  std::ostringstream os;
  for (const auto& s : steps) {
    nlohmann::ordered_json line;
    line["at"] = g.vertex_name(s.at);
    line["rotor"] = g.dart_name(s.rotor);
    line["to"] = g.vertex_name(s.to);
    os << line.dump() << '\n';
  }
  return os.str();
}

// --- single runs ----------------------------------------------------------

StepOutcome step(const RibbonGraph& g, const RotorConfiguration& config, VertexId x) {
  if (config[x] == kNoDart) {
    throw Error(ErrorCode::ChipAtExcludedRoot, "no rotor at '" + g.vertex_name(x) + "'");
  }
  const DartId d = g.rotate(config[x]);
  return StepOutcome{config.with(x, d), g.head(d), TraceStep{x, d, g.head(d)}};
}

TraceRecord run_cycle_period(const RibbonGraph& g, const Unicycle& u) {
  Walker w{g, u.config().rotors(), u.chip()};
  TraceRecord trace;
  trace.initial = u.state();
  const int period = period_length(g);
  trace.steps.reserve(period);
  for (int i = 0; i < period; ++i) trace.steps.push_back(w.advance());
  trace.final = make_state(g, w.rotors, w.chip);

  if (!(trace.final == trace.initial)) {
    throw Error(ErrorCode::PeriodViolation, "state did not recur after 2m steps");
  }
  std::vector<int> traversed(g.num_darts(), 0);
  for (const auto& s : trace.steps) ++traversed[s.rotor];
  for (DartId d = 0; d < g.num_darts(); ++d) {
    if (traversed[d] != 1) {
      throw Error(ErrorCode::PeriodViolation,
                  "dart " + g.dart_name(d) + " traversed " + std::to_string(traversed[d]) + " times");
    }
  }
  const auto turns = trace.departures(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (turns[v] != g.degree(v)) {
      throw Error(ErrorCode::PeriodViolation, "rotor at '" + g.vertex_name(v) + "' advanced " +
                                                  std::to_string(turns[v]) + " times");
    }
  }
  return trace;
}

Route route_first_arrival(const RibbonGraph& g, const Unicycle& u, VertexId y) {
  Walker w{g, u.config().rotors(), u.chip()};
  TraceRecord trace;
  trace.initial = u.state();
  const int period = period_length(g);
  while (w.chip != y) {
    if (static_cast<int>(trace.steps.size()) >= period) {
      throw Error(ErrorCode::NotReached, "chip never reached '" + g.vertex_name(y) + "'");
    }
    trace.steps.push_back(w.advance());
  }
  trace.final = make_state(g, w.rotors, w.chip);
  return Route{trace.final.config, std::move(trace)};
}

Route route_to_rotor_state(const RibbonGraph& g, const Unicycle& u, VertexId y, DartId e) {
  if (g.tail(e) != y) throw Error(ErrorCode::InvalidInput, "dart does not leave the target vertex");
  Walker w{g, u.config().rotors(), u.chip()};
  TraceRecord trace;
  trace.initial = u.state();
  const int period = period_length(g);
  while (!(w.chip == y && w.rotors[y] == e)) {
    if (static_cast<int>(trace.steps.size()) >= period) {
      throw Error(ErrorCode::NotReached, "no state with the requested rotor within one period");
    }
    trace.steps.push_back(w.advance());
  }
  trace.final = make_state(g, w.rotors, w.chip);
  return Route{trace.final.config, std::move(trace)};
}

RotorConfiguration reverse_on_cycle(const RibbonGraph& g, const RotorConfiguration& rho,
                                    const DirectedCycle& c) {
  const auto actual = unique_cycle(g, rho);
  if (!actual || !(*actual == c)) {
    throw Error(ErrorCode::CycleMismatch, "cycle is not the cycle of the configuration");
  }
  auto rotors = rho.rotors();
  for (VertexId x : c.vertices()) rotors[x] = c.in_dart(x);
  return RotorConfiguration::make(g, std::move(rotors));
}

Unicycle canonical_unicycle(const RibbonGraph& g, const DirectedCycle& c) {
  const DartId first = c.darts().front();
  std::vector<EdgeId> seed;
  if (c.is_degenerate()) {
    seed.push_back(RibbonGraph::edge_of(first));
  } else {
    for (std::size_t i = 1; i < c.size(); ++i) seed.push_back(RibbonGraph::edge_of(c.darts()[i]));
  }
  const SpanningTree t = extend_to_spanning_tree(g, seed);
  const VertexId root = g.tail(first);
  auto rotors = orient_toward(g, t, root);
  rotors[root] = first;
  return Unicycle::make(g, RotorConfiguration::make(g, std::move(rotors)), root);
}

namespace {

/// Runs at most one period from u looking for (target, chip). With `trace`,
/// records the steps up to the match.
bool reaches_within_period(const RibbonGraph& g, const Unicycle& u,
                           const std::vector<DartId>& target, TraceRecord* trace) {
  Walker w{g, u.config().rotors(), u.chip()};
  MismatchCounter counter(target, w.rotors);
  const int period = period_length(g);
  for (int i = 0; i < period; ++i) {
    const VertexId at = w.chip;
    const DartId before = w.rotors[at];
    const TraceStep s = w.advance();
    counter.update(at, before, s.rotor);
    if (trace) trace->steps.push_back(s);
    if (w.chip == u.chip() && counter.mismatches == 0) return true;
  }
  return false;
}

}  // namespace

bool reverses_within_period(const RibbonGraph& g, const Unicycle& u) {
  const auto target = reverse_on_cycle(g, u.config(), u.cycle());
  return reaches_within_period(g, u, target.rotors(), nullptr);
}

bool is_reversible(const RibbonGraph& g, const DirectedCycle& c) {
  return reverses_within_period(g, canonical_unicycle(g, c));
}

std::optional<TraceRecord> reversal_trace(const RibbonGraph& g, const Unicycle& u) {
  const auto target = reverse_on_cycle(g, u.config(), u.cycle());
  TraceRecord trace;
  trace.initial = u.state();
  if (!reaches_within_period(g, u, target.rotors(), &trace)) return std::nullopt;
  trace.final = RotorState{target, u.chip()};
  return trace;
}

MaximalReversal maximal_reversal(const RibbonGraph& g, const Unicycle& u) {
  const DirectedCycle& c = u.cycle();
  std::vector<DartId> reversed_dart(g.num_vertices(), kNoDart);
  for (VertexId x : c.vertices()) reversed_dart[x] = c.in_dart(x);

  Walker w{g, u.config().rotors(), u.chip()};
  TraceRecord trace;
  trace.initial = u.state();
  const int period = period_length(g);
  for (int i = 0; i <= period; ++i) {
    if (w.rotors[w.chip] == reversed_dart[w.chip]) {
      trace.final = make_state(g, w.rotors, w.chip);
      return MaximalReversal{trace.final.config, w.chip, std::move(trace)};
    }
    trace.steps.push_back(w.advance());
  }
  throw Error(ErrorCode::NotReached, "no maximal reversal within one period");
}

std::optional<LcrcPartition> lcrc_partition(const RibbonGraph& g, const DirectedCycle& c) {
  const int n = g.num_vertices();
  std::vector<char> on_cycle(n, 0);
  for (VertexId v : c.vertices()) on_cycle[v] = 1;

  // bit 1: reached from a Left edge, bit 2: from a Right edge
  std::vector<int> reach(n, 0);
  for (int side_bit : {1, 2}) {
    const Side side = side_bit == 1 ? Side::Left : Side::Right;
    std::vector<VertexId> stack;
    for (VertexId x : c.vertices()) {
      for (DartId d : g.darts_at(x)) {
        const VertexId y = g.head(d);
        if (on_cycle[y] || (reach[y] & side_bit)) continue;
        if (classify_side(g, c, d) != side) continue;
        reach[y] |= side_bit;
        stack.push_back(y);
      }
    }
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (DartId d : g.darts_at(v)) {
        const VertexId y = g.head(d);
        if (on_cycle[y] || (reach[y] & side_bit)) continue;
        reach[y] |= side_bit;
        stack.push_back(y);
      }
    }
  }

  LcrcPartition p;
  for (VertexId v = 0; v < n; ++v) {
    if (on_cycle[v]) continue;
    if (reach[v] == 3) return std::nullopt;
    if (reach[v] == 1) p.left.push_back(v);
    if (reach[v] == 2) p.right.push_back(v);
    if (reach[v] == 0) throw Error(ErrorCode::InternalError, "vertex unreachable from the cycle");
  }
  return p;
}

// --- enumeration ----------------------------------------------------------

std::uint64_t count_unicycles(const RibbonGraph& g, const DirectedCycle& c) {
  // Off-cycle rotors form a forest draining into C, counted by the Laplacian
  // minor on the off-cycle vertices.
  std::vector<VertexId> off;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!c.contains(v)) off.push_back(v);
  }
  IntMatrix minor(off.size(), std::vector<std::int64_t>(off.size(), 0));
  for (std::size_t i = 0; i < off.size(); ++i) {
    for (std::size_t j = 0; j < off.size(); ++j) {
      minor[i][j] = i == j ? g.degree(off[i]) : -g.multiplicity(off[i], off[j]);
    }
  }
  return static_cast<std::uint64_t>(determinant(minor)) * c.size();
}

std::vector<Unicycle> unicycles_for_cycle(const RibbonGraph& g, const DirectedCycle& c,
                                          std::uint64_t cap) {
  const std::uint64_t total = count_unicycles(g, c);
  if (total > cap) {
    throw Error(ErrorCode::CapExceeded, std::to_string(total) + " unicycles exceed the cap");
  }
  const int n = g.num_vertices();
  std::vector<DartId> rotors(n, kNoDart);
  for (VertexId x : c.vertices()) rotors[x] = c.out_dart(x);
  std::vector<VertexId> off;
  for (VertexId v = 0; v < n; ++v) {
    if (!c.contains(v)) off.push_back(v);
  }

  std::vector<Unicycle> out;
  out.reserve(total);
  // Depth-first over off-cycle vertices; a new cycle can only close through
  // the vertex just assigned, so following rotors from it detects it.
  auto closes_cycle = [&](VertexId start) {
    VertexId v = g.head(rotors[start]);
    for (int hops = 0; hops <= n; ++hops) {
      if (v == start) return true;
      if (rotors[v] == kNoDart || c.contains(v)) return false;
      v = g.head(rotors[v]);
    }
    return true;
  };
  auto assign = [&](auto&& self, std::size_t i) -> void {
    if (i == off.size()) {
      const auto config = RotorConfiguration::make(g, rotors);
      for (VertexId x : c.vertices()) out.push_back(Unicycle::make(g, config, x));
      return;
    }
    const VertexId y = off[i];
    for (DartId d : g.darts_at(y)) {
      rotors[y] = d;
      if (!closes_cycle(y)) self(self, i + 1);
    }
    rotors[y] = kNoDart;
  };
  assign(assign, 0);
  if (out.size() != total) {
    throw Error(ErrorCode::InternalError, "unicycle enumeration disagrees with the forest count");
  }
  return out;
}

std::uint64_t count_total_configurations(const RibbonGraph& g) {
  std::uint64_t product = 1;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto deg = static_cast<std::uint64_t>(g.degree(v));
    if (product > UINT64_MAX / deg) return UINT64_MAX;
    product *= deg;
  }
  return product;
}

std::vector<Unicycle> all_unicycles(const RibbonGraph& g, std::uint64_t cap) {
  const std::uint64_t total = count_total_configurations(g);
  if (total > cap) {
    throw Error(ErrorCode::CapExceeded, std::to_string(total) + " configurations exceed the cap");
  }
  const int n = g.num_vertices();
  std::vector<int> digit(n, 0);
  std::vector<Unicycle> out;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<DartId> rotors(n);
    for (VertexId v = 0; v < n; ++v) rotors[v] = g.darts_at(v)[digit[v]];
    auto config = RotorConfiguration::make(g, std::move(rotors));
    if (auto cycle = unique_cycle(g, config)) {
      for (VertexId x : cycle->vertices()) out.push_back(Unicycle::make(g, config, x));
    }
    for (VertexId v = n - 1; v >= 0; --v) {
      if (++digit[v] < g.degree(v)) break;
      digit[v] = 0;
    }
  }
  return out;
}

Unicycle random_unicycle(const RibbonGraph& g, const std::vector<SpanningTree>& trees,
                         std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick_tree(0, trees.size() - 1);
  std::uniform_int_distribution<DartId> pick_dart(0, g.num_darts() - 1);
  const SpanningTree t = trees[pick_tree(rng)];
  const DartId e = pick_dart(rng);
  auto config = RotorConfiguration::tree_plus_dart(g, t, e);
  const auto cycle = fundamental_cycle(g, t, e);
  std::uniform_int_distribution<std::size_t> pick_chip(0, cycle.size() - 1);
  return Unicycle::make(g, std::move(config), cycle.vertices()[pick_chip(rng)]);
}

std::int64_t route_to_root(const RibbonGraph& g, std::vector<DartId>& rotors, VertexId chip,
                           VertexId root, std::vector<VertexId>* visits,
                           std::vector<TraceStep>* steps) {
  // Past the budget, a repeated state raises InternalError.
  const std::int64_t budget =
      4 * static_cast<std::int64_t>(g.num_darts()) * g.num_vertices() + 64;
  std::set<std::pair<std::vector<DartId>, VertexId>> seen;
  std::int64_t count = 0;
  if (visits) visits->push_back(chip);
  while (chip != root) {
    if (count >= budget && !seen.emplace(rotors, chip).second) {
      throw Error(ErrorCode::InternalError, "rotor-routing toward the root revisited a state");
    }
    const DartId d = g.rotate(rotors[chip]);
    rotors[chip] = d;
    const VertexId to = g.head(d);
    if (steps) steps->push_back(TraceStep{chip, d, to});
    chip = to;
    if (visits) visits->push_back(chip);
    ++count;
  }
  return count;
}

}  // namespace ribbon
