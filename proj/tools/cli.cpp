#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "ribbon/catalog.hpp"
#include "ribbon/corpus.hpp"
#include "ribbon/json_io.hpp"
#include "ribbon/torsor.hpp"

namespace ribbon::cli {

namespace {

using ojson = nlohmann::ordered_json;

/// A graph file path, or "builtin:NAME".
RibbonGraph load_graph(const std::string& source) {
  constexpr std::string_view kPrefix = "builtin:";
  if (source.rfind(kPrefix, 0) == 0) return builtin_graph(source.substr(kPrefix.size()));
  return load_graph_file(source);
}

/// Inline JSON, or "@path" for a file.
std::string inline_or_file(const std::string& text) {
  if (!text.empty() && text[0] == '@') return read_file(text.substr(1));
  return text;
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

ojson group_json(const GroupStructure& group) {
  auto out = ojson::array();
  for (const auto& f : group.invariant_factors) {
    if (f <= BigInt(std::numeric_limits<std::int64_t>::max())) {
      out.push_back(static_cast<std::int64_t>(f));
    } else {
      out.push_back(f.str());
    }
  }
  return out;
}

int cmd_inspect(const std::string& source, std::ostream& out, std::ostream& err) {
  const RibbonGraph g = load_graph(source);
  const auto fs = faces(g);
  ojson report;
  report["vertices"] = g.num_vertices();
  report["edges"] = g.num_edges();
  auto faces_json = ojson::array();
  for (const auto& f : fs) {
    auto face = ojson::array();
    for (DartId d : f) face.push_back(g.dart_name(d));
    faces_json.push_back(std::move(face));
  }
  report["faces"] = std::move(faces_json);
  report["genus"] = genus(g);
  report["planar"] = is_planar(g);
  if (g.num_edges() <= kMaxTreeEnumerationEdges) {
    report["trees"] = spanning_trees(g).size();
  } else {
    report["trees"] = nullptr;
  }
  report["group"] = group_json(group_structure(g));
  emit(out, report);
  err << g.num_vertices() << " vertices, " << g.num_edges() << " edges, " << fs.size()
      << " faces, genus " << genus(g) << "\n";
  return kExitOk;
}

struct ActOptions {
  std::string graph;
  std::string root;
  std::string divisor = "{}";
  std::string tree;
  std::string trace_path;
};

int cmd_act(const ActOptions& opt, std::ostream& out, std::ostream& err) {
  const RibbonGraph g = load_graph(opt.graph);
  const VertexId root = g.vertex(opt.root);
  const Divisor d = parse_divisor_json(g, inline_or_file(opt.divisor));
  if (d.degree() != 0) {
    throw Error(ErrorCode::DegreeMismatch, "divisor has degree " + std::to_string(d.degree()));
  }
  SpanningTree t = parse_tree(g, split_list(opt.tree));

  if (opt.trace_path.empty()) {
    const TorsorAction action(g);
    t = action.act(root, d, t);
  } else {
    // Apply one generator at a time so every routing step can be logged.
    // A negative coefficient k acts as k mod the generator's order.
    const TorsorAction action(g);
    std::ofstream trace_out(opt.trace_path);
    if (!trace_out) throw Error(ErrorCode::InvalidInput, "cannot write " + opt.trace_path);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (v == root || d[v] == 0) continue;
      std::int64_t k = d[v];
      if (k < 0) {
        const std::int64_t order = action.generator(root, v).order();
        k = ((k % order) + order) % order;
      }
      for (std::int64_t i = 0; i < k; ++i) {
        TraceRecord trace;
        t = act_generator(g, root, v, t, &trace);
        trace_out << trace.to_json_lines(g);
      }
    }
  }
  ojson report;
  report["tree"] = tree_to_json(g, t);
  emit(out, report);
  err << "result tree: " << report["tree"].dump() << "\n";
  return kExitOk;
}

int cmd_reversible(const std::string& source, const std::string& cycle_text, std::ostream& out,
                   std::ostream& err) {
  const RibbonGraph g = load_graph(source);
  const DirectedCycle c = parse_cycle(g, split_list(cycle_text));
  const bool reversible = is_reversible(g, c);
  ojson report;
  report["cycle"] = cycle_to_json(g, c);
  report["reversible"] = reversible;
  if (const auto partition = lcrc_partition(g, c)) {
    auto names = [&](const std::vector<VertexId>& vs) {
      auto arr = ojson::array();
      for (VertexId v : vs) arr.push_back(g.vertex_name(v));
      return arr;
    };
    report["left"] = names(partition->left);
    report["right"] = names(partition->right);
  }
  emit(out, report);
  err << "cycle is " << (reversible ? "reversible" : "not reversible") << "\n";
  return kExitOk;
}

int cmd_separating(const std::string& source, const std::string& cycle_text, std::ostream& out,
                   std::ostream& err) {
  const RibbonGraph g = load_graph(source);
  const DirectedCycle c = parse_cycle(g, split_list(cycle_text));
  const Separation s = is_separating(g, c);
  ojson report;
  report["cycle"] = cycle_to_json(g, c);
  report["separating"] = s.separating;
  report["witness"] = s.witness ? path_to_json(g, *s.witness) : ojson(nullptr);
  emit(out, report);
  err << "cycle is " << (s.separating ? "separating" : "nonseparating") << "\n";
  return kExitOk;
}

struct GenOptions {
  std::string graph;
  bool all = false;
  std::optional<std::uint64_t> sample;
  std::optional<std::uint64_t> seed;
};

int cmd_gen_rotations(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  const RibbonGraph g = load_graph(opt.graph);
  RotationMode mode = RotationMode::all();
  if (opt.sample) {
    if (!opt.seed) throw Error(ErrorCode::InvalidInput, "--sample requires --seed");
    mode = RotationMode::sample(*opt.sample, *opt.seed);
  }
  const auto systems = generate_rotation_systems(g, mode);
  auto list = ojson::array();
  for (const auto& s : systems) list.push_back(graph_to_json(s));
  emit(out, list);
  err << systems.size() << " rotation systems\n";
  return kExitOk;
}

struct CheckOptions {
  std::string corpus = "builtin";
  std::uint64_t seed = 1;
  int jobs = 0;
  std::optional<std::string> checks;
};

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  CorpusSpec spec;
  if (opt.corpus == "builtin") {
    spec = builtin_corpus(opt.seed);
  } else {
    const auto dir = std::filesystem::path(opt.corpus).parent_path().string();
    spec = parse_corpus_json(read_file(opt.corpus), dir);
  }
  if (opt.checks) spec.checks = parse_check_list(*opt.checks);
  const CorpusReport report = run_corpus(spec, opt.jobs);
  emit(out, report.to_json());
  err << report.summary_text();
  return report.passed() ? kExitOk : kExitPropertyFailure;
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::PeriodViolation:
    case ErrorCode::NotReached:
    case ErrorCode::InternalError:
      return false;
    default:
      return true;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotor-routing and sandpile torsors on ribbon graphs"};
  app.require_subcommand(1);

  std::string graph;
  const std::string graph_help = "graph JSON file, or builtin:NAME";

  auto* inspect = app.add_subcommand("inspect", "faces, genus, tree count and group structure");
  inspect->add_option("graph", graph, graph_help)->required();

  ActOptions act_opt;
  auto* act = app.add_subcommand("act", "act on a spanning tree by a degree-0 divisor");
  act->add_option("graph", act_opt.graph, graph_help)->required();
  act->add_option("--root", act_opt.root, "root vertex")->required();
  act->add_option("--divisor", act_opt.divisor, "divisor JSON such as {\"a\":1,\"b\":-1}, or @file");
  act->add_option("--tree", act_opt.tree, "comma-separated edge ids")->required();
  act->add_option("--trace", act_opt.trace_path, "write the routing steps as JSON lines");

  std::string cycle;
  auto* reversible = app.add_subcommand("reversible", "decide whether a directed cycle is reversible");
  reversible->add_option("graph", graph, graph_help)->required();
  reversible->add_option("--cycle", cycle, "edges in cycle order, e.g. e1,e2 or e1@a,e2@b")->required();

  auto* separating = app.add_subcommand("separating", "decide whether a directed cycle separates");
  separating->add_option("graph", graph, graph_help)->required();
  separating->add_option("--cycle", cycle, "edges in cycle order")->required();

  GenOptions gen_opt;
  std::uint64_t sample = 0;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen-rotations", "list the rotation systems of a graph");
  gen->add_option("graph", gen_opt.graph, graph_help)->required();
  auto* all_flag = gen->add_flag("--all", gen_opt.all, "every rotation system (default)");
  auto* sample_opt = gen->add_option("--sample", sample, "number of uniform samples");
  auto* seed_opt = gen->add_option("--seed", gen_seed, "sampling seed");
  all_flag->excludes(sample_opt);

  CheckOptions check_opt;
  std::string checks_text;
  auto* check = app.add_subcommand("check", "run the property checks over a corpus");
  check->add_option("--corpus", check_opt.corpus, "builtin, or a corpus JSON file");
  check->add_option("--seed", check_opt.seed, "seed for sampling");
  check->add_option("--jobs", check_opt.jobs, "worker threads (0: all)");
  auto* checks_opt = check->add_option("--checks", checks_text, "comma-separated check names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*inspect) return cmd_inspect(graph, out, err);
    if (*act) return cmd_act(act_opt, out, err);
    if (*reversible) return cmd_reversible(graph, cycle, out, err);
    if (*separating) return cmd_separating(graph, cycle, out, err);
    if (*gen) {
      if (*sample_opt) gen_opt.sample = sample;
      if (*seed_opt) gen_opt.seed = gen_seed;
      return cmd_gen_rotations(gen_opt, out, err);
    }
    if (*check) {
      if (*checks_opt) check_opt.checks = checks_text;
      return cmd_check(check_opt, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitInputError : kExitPropertyFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ribbon::cli
