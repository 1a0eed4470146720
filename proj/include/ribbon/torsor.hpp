#ifndef RIBBON_TORSOR_HPP
#define RIBBON_TORSOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ribbon/rotor.hpp"
#include "ribbon/sandpile.hpp"
#include "ribbon/spanning_tree.hpp"

namespace ribbon {

/// Permutation of tree indices; p[i] is the image of tree i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::int32_t> images) : images_(std::move(images)) {}
  static Permutation identity(int n);

  std::int32_t operator[](std::int32_t i) const { return images_[i]; }
  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<std::int32_t>& images() const { return images_; }

  /// (*this) after `first`: i -> this[first[i]].
  Permutation after(const Permutation& first) const;
  Permutation inverse() const;
  Permutation power(std::int64_t k) const;  // k may be negative
  bool is_identity() const;
  int fixed_points() const;
  std::int64_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::int32_t> images_;
};

/// The enumerated spanning trees with a mask -> index lookup.
class TreeIndex {
 public:
  explicit TreeIndex(const RibbonGraph& g);
  explicit TreeIndex(std::vector<SpanningTree> trees);

  const std::vector<SpanningTree>& trees() const { return trees_; }
  int size() const { return static_cast<int>(trees_.size()); }
  const SpanningTree& operator[](int i) const { return trees_[i]; }
  /// Throws NotATree for an unknown tree.
  int index_of(SpanningTree t) const;
  int index_of_mask(std::uint64_t mask) const;

 private:
  std::vector<SpanningTree> trees_;
  std::vector<std::pair<std::uint64_t, int>> by_mask_;
};

/// (v - r)_r(T): orient T toward r, place the chip on v, rotor-route until
/// the chip reaches r; the rotors then form the image tree.
SpanningTree act_generator(const RibbonGraph& g, VertexId root, VertexId v, SpanningTree t,
                           TraceRecord* trace = nullptr);

enum class Execution { Serial, Parallel };

/**
 * image[(root * n + v) * trees + t] is the index of (v - root)_root(tree t),
 * for every root, vertex and tree.
 */
struct GeneratorTables {
  int num_vertices = 0;
  int num_trees = 0;
  std::vector<std::int32_t> image;

  std::int32_t at(VertexId root, VertexId v, int t) const {
    return image[(static_cast<std::size_t>(root) * num_vertices + v) * num_trees + t];
  }

  friend bool operator==(const GeneratorTables&, const GeneratorTables&) = default;
};

/// Reference implementation: plain nested loops.
GeneratorTables generator_tables_serial(const RibbonGraph& g, const TreeIndex& trees);
/// OpenMP over (root, tree) pairs; `threads` <= 0 uses the runtime default.
GeneratorTables generator_tables_parallel(const RibbonGraph& g, const TreeIndex& trees,
                                          int threads = 0);

/// The rotor-routing action of Div^0 on spanning trees, for every root.
class TorsorAction {
 public:
  explicit TorsorAction(const RibbonGraph& g, Execution exec = Execution::Parallel);

  const RibbonGraph& graph() const { return g_; }
  const TreeIndex& trees() const { return trees_; }
  const GeneratorTables& tables() const { return tables_; }

  /// (v - root)_root as a permutation of tree indices.
  const Permutation& generator(VertexId root, VertexId v) const;
  const Permutation& generator_inverse(VertexId root, VertexId v) const;

  /// D acting at `root`; D = sum over v != root of D[v] (v - root). Throws
  /// DegreeMismatch unless deg D = 0.
  Permutation divisor_action(VertexId root, const Divisor& d) const;
  SpanningTree act(VertexId root, const Divisor& d, SpanningTree t) const;

 private:
  RibbonGraph g_;
  TreeIndex trees_;
  GeneratorTables tables_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> inverses_;
};

struct TorsorReport {
  bool well_defined = false;  // Laplacian images act trivially
  bool free = false;          // only the identity has fixed points
  bool transitive = false;    // one orbit
  bool order_matches = false; // |group| = |trees| = |Pic^0|
  std::int64_t group_size = 0;
  std::int64_t tree_count = 0;

  bool passed() const { return well_defined && free && transitive && order_matches; }
};

TorsorReport verify_torsor(const TorsorAction& action, VertexId root);
TorsorReport verify_torsor(const RibbonGraph& g, VertexId root);

/// Second oracle for divisor equivalence: D - D' acting at `root` fixes the
/// tree with index `tree`. Throws InvalidInput for a bad index.
bool divisors_equivalent_by_action(const TorsorAction& action, const Divisor& d1,
                                   const Divisor& d2, VertexId root = 0, int tree = 0);

struct BasepointCounterexample {
  VertexId root_r = 0;
  VertexId root_s = 0;
  VertexId v = 0;  // the divisor is v - v0, v0 the first vertex
  SpanningTree tree;
  SpanningTree image_r;
  SpanningTree image_s;
};

struct BasepointResult {
  bool independent = true;
  std::optional<BasepointCounterexample> counterexample;
};

/// Compares (v - v0)_r and (v - v0)_s on every tree for every v and every
/// pair of roots r < s. The first counterexample
/// in (r, s, v, tree) order is reported.
BasepointResult is_basepoint_independent(const TorsorAction& action,
                                         Execution exec = Execution::Parallel);
BasepointResult is_basepoint_independent(const RibbonGraph& g);

}  // namespace ribbon

#endif  // RIBBON_TORSOR_HPP
