#ifndef RIBBON_CORPUS_HPP
#define RIBBON_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ribbon/catalog.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

enum class CheckKind {
  Periodicity,
  Torsor,
  ReversibilityWelldef,
  SeparatingReversible,
  PlanarReversible,
  GeodesicIdentities,
  Theorem1,
};

std::string_view check_name(CheckKind kind);
std::optional<CheckKind> parse_check(std::string_view name);
std::vector<CheckKind> all_checks();
/// Comma-separated names; throws InvalidInput on an unknown one.
std::vector<CheckKind> parse_check_list(std::string_view text);

/// Graphs with more unicycles than this are sampled by the periodicity check.
inline constexpr std::uint64_t kExhaustiveUnicycles = 10000;
inline constexpr int kSampledUnicycles = 1000;

struct CorpusEntry {
  std::string name;
  RibbonGraph base;
  RotationMode mode;
};

struct CorpusSpec {
  std::vector<CorpusEntry> entries;
  std::vector<CheckKind> checks;
  std::uint64_t seed = 1;
};

/// P2, B2, all of B3, B4, B5, theta and K4, C3, seeded samples of B6 and K5
/// (50 systems for K5).
CorpusSpec builtin_corpus(std::uint64_t seed);

/// {"seed": N, "checks": [...], "graphs": [{"builtin": "K4" | "file": path,
///   "rotations": "default" | "all" | {"sample": N, "seed": S}}]}
/// Relative file paths resolve against `base_dir`.
CorpusSpec parse_corpus_json(std::string_view text, const std::string& base_dir);

struct CheckOutcome {
  explicit CheckOutcome(CheckKind k) : kind(k) {}

  CheckKind kind;
  bool pass = true;
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  std::optional<nlohmann::ordered_json> witness;  // first counterexample
};

struct GraphReport {
  std::string name;  // "<entry>#<index>"
  bool planar = false;
  int genus = 0;
  std::optional<bool> basepoint_independent;  // set by the theorem1 check
  std::optional<nlohmann::ordered_json> basepoint_counterexample;
  std::vector<CheckOutcome> checks;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

/// Runs `checks` on one ribbon graph. `seed` drives any sampling.
GraphReport run_graph_checks(const RibbonGraph& g, const std::string& name,
                             const std::vector<CheckKind>& checks, std::uint64_t seed);

struct CorpusReport {
  std::vector<CheckKind> checks;
  std::vector<GraphReport> graphs;

  bool passed() const;
  /// Graphs where planarity and basepoint-independence disagree.
  int theorem1_mismatches() const;
  nlohmann::ordered_json to_json() const;
  std::string summary_text() const;
};

/// Expands rotation systems, then checks graphs on `jobs` OpenMP threads
/// (<= 0: runtime default). Output order follows the corpus order.
/// Throws CapExceeded for a graph with more than kMaxTreeEnumerationEdges
/// edges or an oversized "all" expansion.
CorpusReport run_corpus(const CorpusSpec& spec, int jobs);

}  // namespace ribbon

#endif  // RIBBON_CORPUS_HPP
