#include "ribbon/corpus.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <filesystem>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "ribbon/geodesic.hpp"
#include "ribbon/json_io.hpp"
#include "ribbon/torsor.hpp"

namespace ribbon {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::pair<CheckKind, std::string_view> kCheckNames[] = {
    {CheckKind::Periodicity, "periodicity"},
    {CheckKind::Torsor, "torsor"},
    {CheckKind::ReversibilityWelldef, "reversibility-welldef"},
    {CheckKind::SeparatingReversible, "separating-reversible"},
    {CheckKind::PlanarReversible, "planar-reversible"},
    {CheckKind::GeodesicIdentities, "geodesic-identities"},
    {CheckKind::Theorem1, "theorem1"},
};

ojson config_to_json(const RibbonGraph& g, const RotorConfiguration& config) {
  ojson out = ojson::object();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (config[v] != kNoDart) out[g.vertex_name(v)] = g.dart_name(config[v]);
  }
  return out;
}

ojson unicycle_to_json(const RibbonGraph& g, const Unicycle& u) {
  ojson out;
  out["rotors"] = config_to_json(g, u.config());
  out["chip"] = g.vertex_name(u.chip());
  return out;
}

// Shared per-graph state, built on first use.
class GraphContext {
 public:
  explicit GraphContext(const RibbonGraph& g) : g_(g), cache_(g) {}

  const RibbonGraph& graph() const { return g_; }
  const TorsorAction& action() {
    if (!action_) action_ = std::make_unique<TorsorAction>(g_);
    return *action_;
  }
  const std::vector<DirectedCycle>& cycles() {
    if (!cycles_) cycles_ = enumerate_cycles(g_);
    return *cycles_;
  }
  std::vector<DirectedCycle> cycles_with_degenerate() {
    auto out = cycles();
    for (EdgeId e = 0; e < g_.num_edges(); ++e) out.push_back(DirectedCycle::make(g_, {2 * e, 2 * e + 1}));
    return out;
  }
  bool reversible(const DirectedCycle& c) { return cache_(c); }
  ReversibilityCache& cache() { return cache_; }

 private:
  const RibbonGraph& g_;
  ReversibilityCache cache_;
  std::unique_ptr<TorsorAction> action_;
  std::optional<std::vector<DirectedCycle>> cycles_;
};

void fail(CheckOutcome& out, ojson witness) {
  if (out.pass) out.witness = std::move(witness);
  out.pass = false;
}

// --- periodicity ---------------------------------------------------------

// Re-derives every period property from the raw trace.
std::optional<std::string> audit_period(const RibbonGraph& g, const Unicycle& u, const TraceRecord& trace) {
  const int m = g.num_edges();
  if (static_cast<int>(trace.steps.size()) != 2 * m) return "period length";
  if (!trace.replays(g)) return "trace does not replay";
  if (!(trace.final == trace.initial)) return "state does not recur";

  std::vector<int> traversed(g.num_darts(), 0);
  std::vector<int> turns(g.num_vertices(), 0);
  std::vector<int> arrivals(g.num_vertices(), 0);
  std::vector<int> hits(g.num_darts(), 0);
  auto rotors = u.config().rotors();
  VertexId chip = u.chip();
  for (const TraceStep& s : trace.steps) {
    ++hits[rotors[chip]];  // state before this step
    if (s.at != chip || g.tail(s.rotor) != chip || g.head(s.rotor) != s.to) return "malformed step";
    if (s.rotor != g.rotate(rotors[chip])) return "rotor did not advance by one";
    rotors[chip] = s.rotor;
    ++turns[chip];
    ++traversed[s.rotor];
    ++arrivals[s.to];
    chip = s.to;
  }
  for (DartId d = 0; d < g.num_darts(); ++d) {
    if (traversed[d] != 1) return "dart " + g.dart_name(d) + " traversed " + std::to_string(traversed[d]) + " times";
    if (hits[d] != 1) return "state with rotor " + g.dart_name(d) + " seen " + std::to_string(hits[d]) + " times";
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (turns[v] != g.degree(v)) return "rotor at " + g.vertex_name(v) + " turned " + std::to_string(turns[v]) + " times";
    if (arrivals[v] != turns[v]) return "arrivals and departures differ at " + g.vertex_name(v);
  }
  return std::nullopt;
}

CheckOutcome check_periodicity(GraphContext& ctx, std::uint64_t seed) {
  const RibbonGraph& g = ctx.graph();
  CheckOutcome out{CheckKind::Periodicity};
  const auto cycles = ctx.cycles_with_degenerate();
  std::uint64_t total = 0;
  for (const auto& c : cycles) total += count_unicycles(g, c);

  std::vector<Unicycle> unicycles;
  const bool exhaustive = total <= kExhaustiveUnicycles;
  if (exhaustive) {
    for (const auto& c : cycles) {
      auto batch = unicycles_for_cycle(g, c, kExhaustiveUnicycles);
      if (batch.size() != count_unicycles(g, c)) {
        ojson w;
        w["reason"] = "enumerated unicycle count disagrees with the determinant count";
        w["cycle"] = cycle_to_json(g, c);
        fail(out, std::move(w));
      }
      for (auto& u : batch) unicycles.push_back(std::move(u));
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < kSampledUnicycles; ++i) {
      unicycles.push_back(random_unicycle(g, ctx.action().trees().trees(), rng));
    }
  }

  for (const auto& u : unicycles) {
    std::optional<std::string> problem;
    try {
      problem = audit_period(g, u, run_cycle_period(g, u));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PeriodViolation) throw;
      problem = e.what();
    }
    if (problem) {
      ojson w = unicycle_to_json(g, u);
      w["reason"] = *problem;
      fail(out, std::move(w));
    }
  }
  out.stats["mode"] = exhaustive ? "exhaustive" : "sampled";
  out.stats["unicycles_total"] = total;
  out.stats["unicycles_checked"] = unicycles.size();
  return out;
}

// --- torsor --------------------------------------------------------------

CheckOutcome check_torsor(GraphContext& ctx) {
  const RibbonGraph& g = ctx.graph();
  CheckOutcome out{CheckKind::Torsor};
  const TorsorAction& action = ctx.action();
  const std::int64_t trees = action.trees().size();
  const auto group = group_structure(g);
  const BigInt det = abs(determinant(reduced_laplacian(g, 0)));
  if (group.order != trees || det != trees) {
    ojson w;
    w["reason"] = "matrix-tree count mismatch";
    w["trees"] = trees;
    w["group_order"] = group.order.str();
    w["determinant"] = det.str();
    fail(out, std::move(w));
  }
  int roots_passed = 0;
  for (VertexId r = 0; r < g.num_vertices(); ++r) {
    const TorsorReport report = verify_torsor(action, r);
    if (report.passed()) {
      ++roots_passed;
      continue;
    }
    ojson w;
    w["root"] = g.vertex_name(r);
    w["well_defined"] = report.well_defined;
    w["free"] = report.free;
    w["transitive"] = report.transitive;
    w["order_matches"] = report.order_matches;
    fail(out, std::move(w));
  }
  out.stats["trees"] = trees;
  out.stats["roots_passed"] = roots_passed;
  return out;
}

// --- reversibility well-definedness -----------------------------------------

CheckOutcome check_reversibility_welldef(GraphContext& ctx) {
  const RibbonGraph& g = ctx.graph();
  CheckOutcome out{CheckKind::ReversibilityWelldef};
  std::int64_t cycles_checked = 0;
  std::int64_t unicycles_checked = 0;
  std::int64_t reversible_count = 0;

  for (const auto& c : ctx.cycles_with_degenerate()) {
    ++cycles_checked;
    const bool rev = ctx.reversible(c);
    reversible_count += rev;
    auto witness = [&](const std::string& reason) {
      ojson w;
      w["cycle"] = cycle_to_json(g, c);
      w["reason"] = reason;
      return w;
    };
    if (rev != ctx.reversible(c.reversed())) fail(out, witness("C and its reversal disagree"));

    const auto partition = lcrc_partition(g, c);
    if (rev && !partition) fail(out, witness("reversible cycle without a left/right partition"));

    std::optional<std::vector<DartId>> edge_set;
    for (const auto& u : unicycles_for_cycle(g, c, kExhaustiveUnicycles)) {
      ++unicycles_checked;
      auto with_unicycle = [&](const std::string& reason) {
        ojson w = witness(reason);
        w["unicycle"] = unicycle_to_json(g, u);
        return w;
      };
      if (reverses_within_period(g, u) != rev) {
        fail(out, with_unicycle("reversibility differs between unicycles"));
        continue;
      }
      const auto rho_bar = reverse_on_cycle(g, u.config(), c);
      const auto maximal = maximal_reversal(g, u);
      const bool lands_on_reversal = maximal.config == rho_bar && maximal.vertex == u.chip();
      if (lands_on_reversal != rev) fail(out, with_unicycle("maximal reversal inconsistent"));
      if (!rev || c.is_degenerate()) continue;

      const auto trace = reversal_trace(g, u);
      if (!trace) {
        fail(out, with_unicycle("no reversal trace"));
        continue;
      }
      const auto traversed = trace->traversed_darts();
      if (!edge_set) {
        edge_set = traversed;
      } else if (*edge_set != traversed) {
        fail(out, with_unicycle("traversed dart set depends on the unicycle"));
      }
      if (partition) {
        const auto departures = trace->departures(g.num_vertices());
        for (VertexId y : partition->left) {
          if (departures[y] != 0) fail(out, with_unicycle("left vertex " + g.vertex_name(y) + " visited"));
        }
        for (VertexId y : partition->right) {
          if (departures[y] != g.degree(y)) {
            fail(out, with_unicycle("right vertex " + g.vertex_name(y) + " not visited degree times"));
          }
        }
      }
    }

    if (rev && partition && edge_set) {
      std::vector<DartId> expected;
      for (VertexId y : partition->right) {
        for (DartId d : g.darts_at(y)) expected.push_back(d);
      }
      for (VertexId x : c.vertices()) {
        expected.push_back(c.in_dart(x));
        for (DartId d : g.darts_at(x)) {
          if (classify_side(g, c, d) == Side::Right) expected.push_back(d);
        }
      }
      std::sort(expected.begin(), expected.end());
      expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
      if (expected != *edge_set) fail(out, witness("traversed darts differ from the predicted set"));
    }
  }
  out.stats["cycles"] = cycles_checked;
  out.stats["reversible"] = reversible_count;
  out.stats["unicycles"] = unicycles_checked;
  return out;
}

// --- separating vs reversible ------------------------------------------------

std::optional<std::string> audit_witness(const RibbonGraph& g, const DirectedCycle& c,
                                         const DirectedPath& p) {
  if (p.empty()) return "empty witness";
  const auto vs = p.vertices(g);
  if (!c.contains(vs.front()) || !c.contains(vs.back())) return "witness does not end on the cycle";
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    if (c.contains(vs[i])) return "witness touches the cycle internally";
  }
  for (DartId d : p.darts()) {
    for (DartId cd : c.darts()) {
      if (RibbonGraph::edge_of(d) == RibbonGraph::edge_of(cd)) return "witness uses a cycle edge";
    }
  }
  if (classify_side(g, c, p.darts().front()) != Side::Left) return "witness does not start on the left";
  if (classify_side(g, c, RibbonGraph::reverse(p.darts().back())) != Side::Right) {
    return "witness does not end on the right";
  }
  return std::nullopt;
}

CheckOutcome check_separating_reversible(GraphContext& ctx) {
  const RibbonGraph& g = ctx.graph();
  CheckOutcome out{CheckKind::SeparatingReversible};
  std::int64_t separating = 0;
  std::int64_t reversible_nonseparating = 0;
  for (const auto& c : ctx.cycles()) {
    const auto search = find_witnesses(g, c);
    const bool rev = ctx.reversible(c);
    auto witness = [&](const std::string& reason) {
      ojson w;
      w["cycle"] = cycle_to_json(g, c);
      w["reason"] = reason;
      if (search.short_witness) w["short_witness"] = path_to_json(g, *search.short_witness);
      if (search.long_witness) w["long_witness"] = path_to_json(g, *search.long_witness);
      return w;
    };
    for (const auto* p : {&search.short_witness, &search.long_witness}) {
      if (!*p) continue;
      if (auto problem = audit_witness(g, c, **p)) fail(out, witness(*problem));
    }
    if (search.short_witness && search.short_witness->size() != 1) fail(out, witness("short witness is not one edge"));
    if (search.long_witness && search.long_witness->size() < 2) fail(out, witness("long witness too short"));
    if (search.separating() != find_witnesses(g, c.reversed()).separating()) {
      fail(out, witness("C and its reversal disagree on separation"));
    }
    if (search.separating()) {
      ++separating;
      if (!rev) fail(out, witness("separating cycle is not reversible"));
    } else if (rev) {
      ++reversible_nonseparating;
      if (search.long_witness) fail(out, witness("reversible cycle with a witness longer than one edge"));
    }
  }
  out.stats["cycles"] = ctx.cycles().size();
  out.stats["separating"] = separating;
  out.stats["reversible_nonseparating"] = reversible_nonseparating;
  return out;
}

// --- planar vs all-reversible ---------------------------------------------

CheckOutcome check_planar_reversible(GraphContext& ctx, bool planar) {
  const RibbonGraph& g = ctx.graph();
  CheckOutcome out{CheckKind::PlanarReversible};
  std::optional<DirectedCycle> first_nonreversible;
  for (const auto& c : ctx.cycles()) {
    if (!ctx.reversible(c)) {
      first_nonreversible = c;
      break;
    }
  }
  const bool all_reversible = !first_nonreversible;
  out.stats["all_reversible"] = all_reversible;
  if (planar != all_reversible) {
    ojson w;
    w["planar"] = planar;
    w["all_reversible"] = all_reversible;
    if (first_nonreversible) w["nonreversible_cycle"] = cycle_to_json(g, *first_nonreversible);
    fail(out, std::move(w));
  }
  if (first_nonreversible) out.stats["nonreversible_cycle"] = cycle_to_json(g, *first_nonreversible);
  return out;
}

// --- geodesic identities ------------------------------------------------------

ojson tally_json(const IdentityTally& t) {
  ojson out;
  out["checked"] = t.checked;
  out["violations"] = t.violations;
  return out;
}

ojson instance_json(const RibbonGraph& g, const GeodesicInstance& inst) {
  ojson out;
  out["part"] = inst.part;
  out["tree"] = tree_to_json(g, inst.tree);
  if (inst.e != kNoDart) out["e"] = g.dart_name(inst.e);
  for (auto [key, v] : {std::pair{"x", inst.x}, {"y", inst.y}, {"s", inst.s}, {"z", inst.z}}) {
    if (v >= 0) out[key] = g.vertex_name(v);
  }
  return out;
}

CheckOutcome check_geodesic(GraphContext& ctx) {
  const RibbonGraph& g = ctx.graph();
  CheckOutcome out{CheckKind::GeodesicIdentities};
  const auto report = check_geodesic_identities(ctx.action(), ctx.cache());
  const auto reversal = check_reversal_identity(ctx.action());
  const auto routing = check_routing_computes_action(ctx.action());
  out.stats["a"] = tally_json(report.part_a);
  out.stats["b"] = tally_json(report.part_b);
  out.stats["c"] = tally_json(report.part_c);
  out.stats["d_geodesic"] = tally_json(report.part_d_geodesic);
  out.stats["d_adjacent"] = tally_json(report.part_d_adjacent);
  out.stats["reversal_identity"] = tally_json(reversal);
  out.stats["routing_computes_action"] = tally_json(routing);
  out.stats["equation_failures"] = report.equation_failures;
  if (!report.passed()) fail(out, instance_json(g, report.violations.front()));
  if (reversal.violations > 0) fail(out, ojson{{"reason", "reversal identity violated"}});
  if (routing.violations > 0) fail(out, ojson{{"reason", "routing does not compute the action"}});
  return out;
}

// --- basepoint ------------------------------------------------------------

ojson counterexample_json(const RibbonGraph& g, const BasepointCounterexample& c) {
  ojson out;
  out["r"] = g.vertex_name(c.root_r);
  out["s"] = g.vertex_name(c.root_s);
  out["divisor"] = divisor_to_json(g, Divisor::difference(g.num_vertices(), c.v, 0));
  out["tree"] = tree_to_json(g, c.tree);
  out["image_r"] = tree_to_json(g, c.image_r);
  out["image_s"] = tree_to_json(g, c.image_s);
  return out;
}

// Recomputes (v - v0)_r(T) with plain act_generator calls.
SpanningTree act_difference_directly(const RibbonGraph& g, const std::vector<SpanningTree>& trees,
                                     VertexId r, VertexId v, SpanningTree t) {
  // (v - v0)_r(T) = (v - r)_r applied to the tree T1 with (v0 - r)_r(T1) = T.
  for (const SpanningTree& t1 : trees) {
    if (act_generator(g, r, 0, t1) == t) return act_generator(g, r, v, t1);
  }
  throw Error(ErrorCode::InternalError, "generator is not onto");
}

CheckOutcome check_theorem1(GraphContext& ctx, bool planar, GraphReport& report) {
  const RibbonGraph& g = ctx.graph();
  CheckOutcome out{CheckKind::Theorem1};
  const BasepointResult result = is_basepoint_independent(ctx.action());
  report.basepoint_independent = result.independent;
  out.stats["planar"] = planar;
  out.stats["basepoint_independent"] = result.independent;
  if (result.counterexample) {
    const auto& c = *result.counterexample;
    report.basepoint_counterexample = counterexample_json(g, c);
    const auto& trees = ctx.action().trees().trees();
    const auto direct_r = act_difference_directly(g, trees, c.root_r, c.v, c.tree);
    const auto direct_s = act_difference_directly(g, trees, c.root_s, c.v, c.tree);
    if (direct_r != c.image_r || direct_s != c.image_s || direct_r == direct_s) {
      ojson w = *report.basepoint_counterexample;
      w["reason"] = "counterexample does not reproduce";
      fail(out, std::move(w));
    }
  }
  if (result.independent == !!result.counterexample) {
    fail(out, ojson{{"reason", "counterexample presence inconsistent"}});
  }
  if (result.independent != planar) {
    ojson w;
    w["reason"] = "basepoint-independence differs from planarity";
    w["planar"] = planar;
    if (report.basepoint_counterexample) w["counterexample"] = *report.basepoint_counterexample;
    fail(out, std::move(w));
  }
  return out;
}

}  // namespace

std::string_view check_name(CheckKind kind) {
  for (const auto& [k, name] : kCheckNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<CheckKind> parse_check(std::string_view name) {
  for (const auto& [k, n] : kCheckNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<CheckKind> all_checks() {
  std::vector<CheckKind> out;
  for (const auto& [k, name] : kCheckNames) out.push_back(k);
  return out;
}

std::vector<CheckKind> parse_check_list(std::string_view text) {
  std::vector<CheckKind> out;
  for (const auto& name : split_list(text)) {
    if (name.empty()) continue;
    const auto kind = parse_check(name);
    if (!kind) throw Error(ErrorCode::InvalidInput, "unknown check '" + name + "'");
    if (std::find(out.begin(), out.end(), *kind) == out.end()) out.push_back(*kind);
  }
  return out;
}

CorpusSpec builtin_corpus(std::uint64_t seed) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.checks = all_checks();
  auto add = [&](const std::string& name, RotationMode mode) {
    spec.entries.push_back({name, builtin_graph(name), mode});
  };
  add("P2", RotationMode::keep());
  add("B2", RotationMode::keep());
  add("B3", RotationMode::all());
  add("B4", RotationMode::all());
  add("B5", RotationMode::all());
  add("B6", RotationMode::sample(100, seed));
  add("C3", RotationMode::keep());
  add("theta", RotationMode::all());
  add("K4", RotationMode::all());
  add("K5", RotationMode::sample(50, seed));
  return spec;
}

CorpusSpec parse_corpus_json(std::string_view text, const std::string& base_dir) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::InvalidInput, "corpus JSON syntax error at line " + std::to_string(line) +
                                             ", column " + std::to_string(column));
  }
  auto bad = [](const std::string& what) { return Error(ErrorCode::InvalidInput, "corpus: " + what); };
  if (!doc.is_object()) throw bad("expected an object");

  CorpusSpec spec;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw bad("seed must be a nonnegative integer");
    spec.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("checks")) {
    if (!doc["checks"].is_array()) throw bad("checks must be an array");
    for (const auto& c : doc["checks"]) {
      if (!c.is_string()) throw bad("check names must be strings");
      const auto kind = parse_check(c.get<std::string>());
      if (!kind) throw bad("unknown check '" + c.get<std::string>() + "'");
      spec.checks.push_back(*kind);
    }
  } else {
    spec.checks = all_checks();
  }
  if (!doc.contains("graphs") || !doc["graphs"].is_array()) throw bad("graphs must be an array");
  for (const auto& entry : doc["graphs"]) {
    if (!entry.is_object()) throw bad("graph entries must be objects");
    CorpusEntry out{"", builtin_graph("P2"), RotationMode::keep()};
    if (entry.contains("builtin") && entry["builtin"].is_string()) {
      out.name = entry["builtin"].get<std::string>();
      out.base = builtin_graph(out.name);
    } else if (entry.contains("file") && entry["file"].is_string()) {
      std::filesystem::path path = entry["file"].get<std::string>();
      if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
      out.name = entry["file"].get<std::string>();
      out.base = load_graph_file(path.string());
    } else {
      throw bad("graph entry needs \"builtin\" or \"file\"");
    }
    if (entry.contains("rotations")) {
      const auto& r = entry["rotations"];
      if (r == "all") {
        out.mode = RotationMode::all();
      } else if (r == "default") {
        out.mode = RotationMode::keep();
      } else if (r.is_object() && r.contains("sample")) {
        if (!r.contains("seed")) throw bad("sample mode requires an explicit seed");
        if (!r["sample"].is_number_unsigned() || !r["seed"].is_number_unsigned()) {
          throw bad("sample and seed must be nonnegative integers");
        }
        out.mode = RotationMode::sample(r["sample"].get<std::uint64_t>(), r["seed"].get<std::uint64_t>());
      } else {
        throw bad("rotations must be \"default\", \"all\" or {\"sample\", \"seed\"}");
      }
    }
    spec.entries.push_back(std::move(out));
  }
  return spec;
}

GraphReport run_graph_checks(const RibbonGraph& g, const std::string& name,
                             const std::vector<CheckKind>& checks, std::uint64_t seed) {
  GraphReport report;
  report.name = name;
  report.genus = genus(g);
  report.planar = report.genus == 0;
  GraphContext ctx(g);
  for (CheckKind kind : checks) {
    switch (kind) {
      case CheckKind::Periodicity:
        report.checks.push_back(check_periodicity(ctx, seed));
        break;
      case CheckKind::Torsor:
        report.checks.push_back(check_torsor(ctx));
        break;
      case CheckKind::ReversibilityWelldef:
        report.checks.push_back(check_reversibility_welldef(ctx));
        break;
      case CheckKind::SeparatingReversible:
        report.checks.push_back(check_separating_reversible(ctx));
        break;
      case CheckKind::PlanarReversible:
        report.checks.push_back(check_planar_reversible(ctx, report.planar));
        break;
      case CheckKind::GeodesicIdentities:
        report.checks.push_back(check_geodesic(ctx));
        break;
      case CheckKind::Theorem1:
        report.checks.push_back(check_theorem1(ctx, report.planar, report));
        break;
    }
  }
  return report;
}

bool GraphReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.pass; });
}

ojson GraphReport::to_json() const {
  ojson out;
  out["graph"] = name;
  out["genus"] = genus;
  out["planar"] = planar;
  out["basepoint_independent"] = basepoint_independent ? ojson(*basepoint_independent) : ojson(nullptr);
  if (basepoint_counterexample) out["counterexample"] = *basepoint_counterexample;
  ojson checks_json = ojson::object();
  for (const auto& c : checks) {
    ojson entry;
    entry["result"] = c.pass ? "pass" : "fail";
    entry["stats"] = c.stats;
    if (c.witness) entry["witness"] = *c.witness;
    checks_json[std::string(check_name(c.kind))] = std::move(entry);
  }
  out["checks"] = std::move(checks_json);
  return out;
}

bool CorpusReport::passed() const {
  return std::all_of(graphs.begin(), graphs.end(), [](const GraphReport& g) { return g.passed(); });
}

int CorpusReport::theorem1_mismatches() const {
  int mismatches = 0;
  for (const auto& g : graphs) {
    if (g.basepoint_independent && *g.basepoint_independent != g.planar) ++mismatches;
  }
  return mismatches;
}

ojson CorpusReport::to_json() const {
  ojson out;
  ojson totals = ojson::object();
  for (CheckKind kind : checks) {
    int passed = 0;
    int failed = 0;
    std::optional<ojson> first;
    for (const auto& g : graphs) {
      for (const auto& c : g.checks) {
        if (c.kind != kind) continue;
        if (c.pass) {
          ++passed;
        } else {
          ++failed;
          if (!first) first = ojson{{"graph", g.name}, {"witness", c.witness.value_or(ojson())}};
        }
      }
    }
    ojson entry;
    entry["passed"] = passed;
    entry["failed"] = failed;
    if (first) entry["first_failure"] = *first;
    totals[std::string(check_name(kind))] = std::move(entry);
  }
  out["passed"] = passed();
  out["graphs_checked"] = graphs.size();
  out["theorem1_mismatches"] = theorem1_mismatches();
  out["checks"] = std::move(totals);
  auto list = ojson::array();
  for (const auto& g : graphs) list.push_back(g.to_json());
  out["graphs"] = std::move(list);
  return out;
}

std::string CorpusReport::summary_text() const {
  std::ostringstream s;
  s << graphs.size() << " graphs checked\n";
  for (CheckKind kind : checks) {
    int passed = 0;
    int total = 0;
    for (const auto& g : graphs) {
      for (const auto& c : g.checks) {
        if (c.kind != kind) continue;
        ++total;
        passed += c.pass;
      }
    }
    s << "  " << check_name(kind) << ": " << passed << "/" << total << " passed\n";
  }
  int planar = 0;
  for (const auto& g : graphs) planar += g.planar;
  s << "  planar graphs: " << planar << ", theorem1 mismatches: " << theorem1_mismatches() << "\n";
  s << (passed() ? "PASS" : "FAIL") << "\n";
  return s.str();
}

CorpusReport run_corpus(const CorpusSpec& spec, int jobs) {
  struct Task {
    std::string name;
    RibbonGraph graph;
  };
  std::vector<Task> tasks;
  for (const auto& entry : spec.entries) {
    if (entry.base.num_edges() > kMaxTreeEnumerationEdges) {
      throw Error(ErrorCode::CapExceeded, "'" + entry.name + "' has more than " +
                                              std::to_string(kMaxTreeEnumerationEdges) + " edges");
    }
    const auto systems = generate_rotation_systems(entry.base, entry.mode);
    for (std::size_t i = 0; i < systems.size(); ++i) {
      tasks.push_back({entry.name + "#" + std::to_string(i), systems[i]});
    }
  }

  CorpusReport report;
  report.checks = spec.checks;
  if (spec.checks.empty()) return report;

  std::vector<std::optional<GraphReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    try {
      results[i] = run_graph_checks(tasks[i].graph, tasks[i].name, spec.checks, spec.seed + i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    report.graphs.push_back(std::move(*results[i]));
  }
  return report;
}

}  // namespace ribbon
