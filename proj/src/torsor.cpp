#include "ribbon/torsor.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>

#include <omp.h>

namespace ribbon {

// --- Permutation ----------------------------------------------------------

Permutation Permutation::identity(int n) {
  std::vector<std::int32_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::after(const Permutation& first) const {
  std::vector<std::int32_t> out(first.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[first.images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<std::int32_t> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[images_[i]] = static_cast<std::int32_t>(i);
  return Permutation(std::move(out));
}

Permutation Permutation::power(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Permutation result = identity(size());
  while (e > 0) {
    if (e & 1u) result = base.after(result);
    base = base.after(base);
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const { return fixed_points() == size(); }

int Permutation::fixed_points() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == static_cast<std::int32_t>(i);
  return count;
}

std::int64_t Permutation::order() const {
  std::int64_t result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

// --- TreeIndex ------------------------------------------------------------

TreeIndex::TreeIndex(const RibbonGraph& g) : TreeIndex(spanning_trees(g)) {}

TreeIndex::TreeIndex(std::vector<SpanningTree> trees) : trees_(std::move(trees)) {
  by_mask_.reserve(trees_.size());
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    by_mask_.emplace_back(trees_[i].mask(), static_cast<int>(i));
  }
  std::sort(by_mask_.begin(), by_mask_.end());
}

int TreeIndex::index_of_mask(std::uint64_t mask) const {
  const auto it = std::lower_bound(by_mask_.begin(), by_mask_.end(), std::make_pair(mask, -1));
  if (it == by_mask_.end() || it->first != mask) {
    throw Error(ErrorCode::NotATree, "edge set is not an enumerated spanning tree");
  }
  return it->second;
}

int TreeIndex::index_of(SpanningTree t) const { return index_of_mask(t.mask()); }

// --- generator action -----------------------------------------------------

namespace {

std::uint64_t rotor_mask(const std::vector<DartId>& rotors) {
  std::uint64_t mask = 0;
  for (DartId d : rotors) {
    if (d != kNoDart) mask |= std::uint64_t{1} << RibbonGraph::edge_of(d);
  }
  return mask;
}

/// Fills the table row block for one (root, tree) pair.
void fill_generator_block(const RibbonGraph& g, const TreeIndex& trees, VertexId root, int t,
                          GeneratorTables& tables) {
  const int n = g.num_vertices();
  const auto base = orient_toward(g, trees[t], root);
  std::vector<DartId> rotors;
  for (VertexId v = 0; v < n; ++v) {
    rotors = base;
    route_to_root(g, rotors, v, root);
    tables.image[(static_cast<std::size_t>(root) * n + v) * tables.num_trees + t] =
        trees.index_of_mask(rotor_mask(rotors));
  }
}

GeneratorTables empty_tables(const RibbonGraph& g, const TreeIndex& trees) {
  GeneratorTables tables;
  tables.num_vertices = g.num_vertices();
  tables.num_trees = trees.size();
  tables.image.assign(static_cast<std::size_t>(tables.num_vertices) * tables.num_vertices *
                          tables.num_trees,
                      -1);
  return tables;
}

}  // namespace

SpanningTree act_generator(const RibbonGraph& g, VertexId root, VertexId v, SpanningTree t,
                           TraceRecord* trace) {
  auto rotors = orient_toward(g, t, root);
  if (trace) {
    trace->steps.clear();
    trace->initial = RotorState{RotorConfiguration::make(g, rotors, root), v};
  }
  route_to_root(g, rotors, v, root, nullptr, trace ? &trace->steps : nullptr);
  auto config = RotorConfiguration::make(g, rotors, root);
  SpanningTree out = config.tree_without(g, root);
  if (trace) trace->final = RotorState{std::move(config), root};
  return out;
}

GeneratorTables generator_tables_serial(const RibbonGraph& g, const TreeIndex& trees) {
  GeneratorTables tables = empty_tables(g, trees);
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    for (int t = 0; t < trees.size(); ++t) fill_generator_block(g, trees, root, t, tables);
  }
  return tables;
}

GeneratorTables generator_tables_parallel(const RibbonGraph& g, const TreeIndex& trees,
                                          int threads) {
  GeneratorTables tables = empty_tables(g, trees);
  const std::int64_t blocks = static_cast<std::int64_t>(g.num_vertices()) * trees.size();
  const int team = threads > 0 ? threads : omp_get_max_threads();
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 8) num_threads(team)
  for (std::int64_t k = 0; k < blocks; ++k) {
    try {
      fill_generator_block(g, trees, static_cast<VertexId>(k / trees.size()),
                           static_cast<int>(k % trees.size()), tables);
    } catch (...) {
#pragma omp critical(ribbon_generator_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return tables;
}

// --- TorsorAction ---------------------------------------------------------

TorsorAction::TorsorAction(const RibbonGraph& g, Execution exec)
    : g_(g),
      trees_(g),
      tables_(exec == Execution::Parallel ? generator_tables_parallel(g, trees_)
                                          : generator_tables_serial(g, trees_)) {
  const int n = g.num_vertices();
  const int count = trees_.size();
  generators_.reserve(static_cast<std::size_t>(n) * n);
  inverses_.reserve(static_cast<std::size_t>(n) * n);
  for (VertexId root = 0; root < n; ++root) {
    for (VertexId v = 0; v < n; ++v) {
      std::vector<std::int32_t> images(count);
      for (int t = 0; t < count; ++t) images[t] = tables_.at(root, v, t);
      generators_.emplace_back(std::move(images));
      inverses_.push_back(generators_.back().inverse());
    }
  }
}

const Permutation& TorsorAction::generator(VertexId root, VertexId v) const {
  return generators_[static_cast<std::size_t>(root) * g_.num_vertices() + v];
}

const Permutation& TorsorAction::generator_inverse(VertexId root, VertexId v) const {
  return inverses_[static_cast<std::size_t>(root) * g_.num_vertices() + v];
}

Permutation TorsorAction::divisor_action(VertexId root, const Divisor& d) const {
  if (d.size() != g_.num_vertices()) {
    throw Error(ErrorCode::InvalidInput, "divisor size does not match the graph");
  }
  if (d.degree() != 0) throw Error(ErrorCode::DegreeMismatch, "divisor must have degree 0");
  // Generators at a fixed root commute, so the order of application is free.
  Permutation result = Permutation::identity(trees_.size());
  for (VertexId v = 0; v < g_.num_vertices(); ++v) {
    if (v == root || d[v] == 0) continue;
    result = generator(root, v).power(d[v]).after(result);
  }
  return result;
}

SpanningTree TorsorAction::act(VertexId root, const Divisor& d, SpanningTree t) const {
  return trees_[divisor_action(root, d)[trees_.index_of(t)]];
}

// --- reports --------------------------------------------------------------

TorsorReport verify_torsor(const TorsorAction& action, VertexId root) {
  const RibbonGraph& g = action.graph();
  const int n = g.num_vertices();
  const int count = action.trees().size();
  TorsorReport report;
  report.tree_count = count;

  report.well_defined = true;
  for (VertexId w = 0; w < n; ++w) {
    if (!action.divisor_action(root, laplacian_image(g, w)).is_identity()) {
      report.well_defined = false;
    }
  }

  // The image of Div^0 in Sym(trees): closure of the generators.
  std::set<Permutation> group{Permutation::identity(count)};
  std::vector<Permutation> frontier{Permutation::identity(count)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (VertexId v = 0; v < n; ++v) {
        if (v == root) continue;
        Permutation q = action.generator(root, v).after(p);
        if (group.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  report.group_size = static_cast<std::int64_t>(group.size());

  report.free = true;
  std::vector<char> orbit(count, 0);
  for (const auto& p : group) {
    if (!p.is_identity() && p.fixed_points() > 0) report.free = false;
    if (count > 0) orbit[p[0]] = 1;
  }
  report.transitive = std::all_of(orbit.begin(), orbit.end(), [](char c) { return c != 0; });
  report.order_matches = report.group_size == count && group_structure(g).order == count;
  return report;
}

TorsorReport verify_torsor(const RibbonGraph& g, VertexId root) {
  return verify_torsor(TorsorAction(g), root);
}

bool divisors_equivalent_by_action(const TorsorAction& action, const Divisor& d1,
                                   const Divisor& d2, VertexId root, int tree) {
  if (d1.degree() != d2.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "divisors have different degrees");
  }
  const Permutation p = action.divisor_action(root, d1 - d2);
  if (tree < 0 || tree >= p.size()) throw Error(ErrorCode::InvalidInput, "tree index out of range");
  return p[tree] == tree;
}

namespace {

/// (v - v0)_r for every root r and vertex v, v0 = vertex 0.
std::vector<std::vector<Permutation>> based_generators(const TorsorAction& action) {
  const int n = action.graph().num_vertices();
  std::vector<std::vector<Permutation>> out(n);
  for (VertexId r = 0; r < n; ++r) {
    const Permutation& undo = action.generator_inverse(r, 0);
    for (VertexId v = 0; v < n; ++v) out[r].push_back(action.generator(r, v).after(undo));
  }
  return out;
}

struct Mismatch {
  VertexId v;
  int tree;
};

std::optional<Mismatch> first_mismatch(const std::vector<Permutation>& a,
                                       const std::vector<Permutation>& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    for (int t = 0; t < a[v].size(); ++t) {
      if (a[v][t] != b[v][t]) return Mismatch{static_cast<VertexId>(v), t};
    }
  }
  return std::nullopt;
}

}  // namespace

BasepointResult is_basepoint_independent(const TorsorAction& action, Execution exec) {
  const int n = action.graph().num_vertices();
  const auto based = based_generators(action);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId r = 0; r < n; ++r) {
    for (VertexId s = r + 1; s < n; ++s) pairs.emplace_back(r, s);
  }
  std::vector<std::optional<Mismatch>> found(pairs.size());
  const auto count = static_cast<std::int64_t>(pairs.size());
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
      found[k] = first_mismatch(based[pairs[k].first], based[pairs[k].second]);
    }
  } else {
    for (std::int64_t k = 0; k < count; ++k) {
      found[k] = first_mismatch(based[pairs[k].first], based[pairs[k].second]);
    }
  }

  BasepointResult result;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!found[k]) continue;
    const auto [r, s] = pairs[k];
    const auto [v, t] = *found[k];
    const auto& trees = action.trees();
    result.independent = false;
    result.counterexample =
        BasepointCounterexample{r, s, v, trees[t], trees[based[r][v][t]], trees[based[s][v][t]]};
    break;
  }
  return result;
}

BasepointResult is_basepoint_independent(const RibbonGraph& g) {
  return is_basepoint_independent(TorsorAction(g));
}

}  // namespace ribbon
