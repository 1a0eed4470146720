// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ribbon/catalog.hpp"
#include "ribbon/corpus.hpp"
#include "ribbon/cycle.hpp"
#include "ribbon/sandpile.hpp"
#include "ribbon/rotor.hpp"
#include "ribbon/torsor.hpp"

using namespace ribbon;

namespace {

struct Line {
  int number;
  std::string title;
  bool pass;
  std::string detail;
};

// Every graph ran `kind` and passed it.
bool kind_passed(const CorpusReport& report, CheckKind kind, int& graphs) {
  graphs = 0;
  bool ok = !report.graphs.empty();
  for (const auto& g : report.graphs) {
    bool seen = false;
    for (const auto& c : g.checks) {
      if (c.kind != kind) continue;
      seen = true;
      ok = ok && c.pass;
    }
    ok = ok && seen;
    graphs += seen;
  }
  return ok;
}

Line from_corpus(int number, const std::string& title, const CorpusReport& report, CheckKind kind) {
  int graphs = 0;
  const bool ok = kind_passed(report, kind, graphs);
  return {number, title, ok, std::to_string(graphs) + " graphs"};
}

Line matrix_tree() {
  bool ok = true;
  for (const auto& name : builtin_names()) {
    const auto g = builtin_graph(name);
    const auto group = group_structure(g);
    ok = ok && group.order == BigInt(oracle::spanning_trees(oracle::from(g)).size());
    ok = ok && group.order == abs(BigInt(oracle::cofactor_det(oracle::reduced_laplacian(oracle::from(g), 0))));
  }
  for (int n = 2; n <= 6; ++n) {
    const auto group = group_structure(builtin_graph("B" + std::to_string(n)));
    ok = ok && group.invariant_factors == std::vector<BigInt>{BigInt(n)};
  }
  ok = ok && group_structure(builtin_graph("K4")).order == 16;
  return {2, "matrix-tree", ok, std::to_string(builtin_names().size()) + " graphs"};
}

Line planar_reversible() {
  bool ok = true;
  int graphs = 0;
  auto run = [&](const std::string& name, RotationMode mode) {
    for (const auto& g : generate_rotation_systems(builtin_graph(name), mode)) {
      bool all = true;
      for (const auto& c : enumerate_cycles(g)) all = all && is_reversible(g, c);
      ok = ok && all == is_planar(g);
      ++graphs;
    }
  };
  run("B3", RotationMode::all());
  run("theta", RotationMode::all());
  run("K4", RotationMode::all());
  run("K5", RotationMode::sample(50, 1));
  return {6, "planar iff all cycles reversible", ok, std::to_string(graphs) + " graphs"};
}

Line theorem1(const CorpusReport& report) {
  int graphs = 0;
  bool ok = kind_passed(report, CheckKind::Theorem1, graphs) && report.theorem1_mismatches() == 0;
  int nonplanar = 0;
  int k4 = 0;
  int b3 = 0;
  for (const auto& g : report.graphs) {
    ok = ok && g.basepoint_independent.has_value();
    if (!g.planar) {
      ++nonplanar;
      ok = ok && g.basepoint_counterexample.has_value();
    }
    k4 += g.name.rfind("K4#", 0) == 0;
    b3 += g.name.rfind("B3#", 0) == 0;
  }
  ok = ok && k4 == 16 && b3 == 4;
  return {8, "basepoint independence iff planar", ok,
          std::to_string(graphs) + " graphs, " + std::to_string(nonplanar) + " counterexamples"};
}

Line oracle_equivalence() {
  bool ok = true;
  long divisors = 0;
  for (const auto& name : builtin_names()) {
    const auto g = builtin_graph(name);
    const int n = g.num_vertices();
    if (n > 4) continue;
    const TorsorAction action(g);
    const auto plain = oracle::from(g);
    std::vector<std::int64_t> c(n, -2);
    while (true) {
      std::int64_t degree = 0;
      for (auto x : c) degree += x;
      if (degree == 0) {
        const Divisor d(c);
        const Divisor zero(n);
        const bool snf = divisors_equivalent(g, d, zero);
        ok = ok && snf == oracle::equivalent_to_zero(plain, c);
        for (VertexId r = 0; r < n; ++r) ok = ok && snf == divisors_equivalent_by_action(action, d, zero, r, r % action.trees().size());
        ++divisors;
      }
      int i = 0;
      while (i < n && c[i] == 2) c[i++] = -2;
      if (i == n) break;
      ++c[i];
    }
  }
  return {9, "divisor equivalence oracles agree", ok, std::to_string(divisors) + " divisors"};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Line> lines;
  try {
    const auto report = run_corpus(builtin_corpus(1), 1);
    lines.push_back(from_corpus(1, "rotor walk periodicity", report, CheckKind::Periodicity));
    lines.push_back(matrix_tree());
    lines.push_back(from_corpus(3, "free and transitive action", report, CheckKind::Torsor));
    lines.push_back(from_corpus(4, "reversibility well defined", report, CheckKind::ReversibilityWelldef));
    lines.push_back(from_corpus(5, "separating cycles reversible", report, CheckKind::SeparatingReversible));
    lines.push_back(planar_reversible());
    lines.push_back(from_corpus(7, "geodesic identities", report, CheckKind::GeodesicIdentities));
    lines.push_back(theorem1(report));
    lines.push_back(oracle_equivalence());
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance aborted: %s\n", e.what());
    return 1;
  }
  bool all = true;
  for (const auto& l : lines) {
    std::printf("%s %d %s (%s)\n", l.pass ? "PASS" : "FAIL", l.number, l.title.c_str(), l.detail.c_str());
    all = all && l.pass;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s in %.1f s\n", all ? "all criteria passed" : "some criteria failed", seconds);
  return all ? 0 : 1;
}
