// dpm: generate instances, reduce them to distance-preserving minors, verify.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dpm/generators.hpp"
#include "dpm/io.hpp"
#include "dpm/minimize.hpp"
#include "dpm/naive_reduce.hpp"
#include "dpm/tree_decomposition.hpp"
#include "dpm/tw_reduce.hpp"
#include "dpm/verify.hpp"

using namespace dpm;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct GenerateOpts {
  std::string family;
  int n = 5;
  int depth = 3;
  int leaves = 3;
  int k = 4;
  int p = 4;
  int max_k = kGridDefaultMaxK;
  int extra = 10;
  int width = 2;
  int keep = 70;
  std::uint64_t seed = 1;
  std::string length = "1";
  std::string out;
  std::string td_out;
};

struct ReduceOpts {
  std::string graph;
  std::string algorithm = "naive";
  std::string td;
  int q = 0;
  std::string out;
  std::string witness;
  std::string stats;
};

struct VerifyOpts {
  std::string graph;
  std::string reduced;
  std::string witness;
  std::string family;
  int q = 0;
  double rel_tol = kDefaultRelTol;
};

struct MinimizeOpts {
  std::string graph;
  std::size_t max_states = SearchBudget{}.max_states;
  std::size_t max_vertices = SearchBudget{}.max_vertices;
  double seconds = 120.0;
  std::string out;
  std::string witness;
};

TerminalSet flagged(const Graph& g) {
  auto t = g.terminals();
  return {t.begin(), t.end()};
}

VertexId max_id(const Graph& g) {
  auto vs = g.vertices();
  return vs.empty() ? 0 : vs.back();
}

void require_distinct(std::initializer_list<const std::string*> paths) {
  std::set<std::string> seen;
  for (const std::string* p : paths)
    if (!p->empty() && !seen.insert(*p).second) throw CLI::ValidationError("paths", "'" + *p + "' given twice");
}

int cmd_generate(const GenerateOpts& o) {
  require_distinct({&o.out, &o.td_out});
  std::optional<TreeDecomposition> td;
  Graph g;
  const std::string& f = o.family;
  if (f == "path") {
    g = gen_path(o.n, Length::parse(o.length, LengthMode::exact)).graph;
  } else if (f == "cbt") {
    g = gen_complete_binary_tree(o.depth).graph;
  } else if (f == "star") {
    g = gen_star(o.leaves).graph;
  } else if (f == "grid") {
    g = gen_grid_lb(o.k, o.max_k).graph;
  } else if (f == "twfamily") {
    auto in = gen_tw_family(o.p, o.k, o.max_k);
    g = std::move(in.graph);
    td = std::move(in.td);
  } else if (f == "arrangement") {
    g = gen_line_arrangement(o.k, o.seed).instance.graph;
  } else if (f == "random") {
    g = gen_random_connected(o.n, o.extra, o.k, o.seed).graph;
  } else if (f == "ktree") {
    auto in = gen_random_partial_ktree(o.n, o.width, o.k, o.keep, o.seed);
    g = std::move(in.graph);
    td = std::move(in.td);
  } else if (f == "tree") {
    g = gen_random_tree(o.n, o.k, o.seed).graph;
  } else {
    throw CLI::ValidationError("family", "unknown family '" + f + "'");
  }
  const std::string text = graph_to_string(g);
  if (o.out.empty())
    std::cout << text;
  else
    write_file_atomic(o.out, text);
  if (!o.td_out.empty()) {
    if (!td) td = heuristic_tree_decomposition(g);
    write_file_atomic(o.td_out, td_to_string(*td, max_id(g)));
  }
  std::cerr << "generated " << f << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
            << g.terminals().size() << " terminals\n";
  return kPass;
}

int cmd_reduce(const ReduceOpts& o) {
  require_distinct({&o.graph, &o.out, &o.witness, &o.stats, &o.td});
  const Graph g = read_graph_file(o.graph);
  const TerminalSet R = flagged(g);
  ReductionResult r;
  std::optional<RecursionStats> stats;
  if (o.algorithm == "naive") {
    if (!o.td.empty() || !o.stats.empty() || o.q != 0)
      throw CLI::ValidationError("algorithm", "--td, --stats and --q need --algorithm tw");
    r = reduce_naive(g, R);
  } else {
    TreeDecomposition td;
    if (o.td.empty()) {
      td = heuristic_tree_decomposition(g);
      std::cerr << "heuristic decomposition: " << td.bags.size() << " bags, width " << td.width() << "\n";
    } else {
      td = read_td_file(o.td);
    }
    TwReduction t = reduce_tw(g, R, td, o.q);
    r = std::move(t.result);
    stats = std::move(t.stats);
    std::cerr << "q = " << stats->q << ", recursion nodes = " << stats->nodes.size() << "\n";
  }
  const std::string text = graph_to_string(r.reduced);
  if (o.out.empty())
    std::cout << text;
  else
    write_file_atomic(o.out, text);
  if (!o.witness.empty()) write_file_atomic(o.witness, witness_to_string(r.witness));
  if (!o.stats.empty()) write_file_atomic(o.stats, stats_to_json(*stats));
  std::cerr << "reduced " << g.vertex_count() << " -> " << r.reduced.vertex_count() << " vertices, "
            << g.edge_count() << " -> " << r.reduced.edge_count() << " edges\n";
  return kPass;
}

int cmd_verify(const VerifyOpts& o) {
  const Graph g = read_graph_file(o.graph);
  const Graph h = read_graph_file(o.reduced);
  const TerminalSet R = flagged(g);
  VerificationReport rep;
  try {
    rep = verify_distance_preserving(g, h, R, o.rel_tol);
  } catch (const GraphError& e) {
    std::cout << "error " << e.what() << "\n--- summary\nstatus=fail\n";
    return kFail;
  }
  std::map<VertexId, VertexId> id;
  for (VertexId v : h.vertices()) id.emplace(v, v);
  try {
    rep.domination = verify_domination(g, h, id, o.rel_tol);
  } catch (const GraphError& e) {
    rep.domination = DominationVerdict{false, std::nullopt, std::nullopt, std::nullopt};
    std::cout << "error " << e.what() << "\n";
  }
  if (!o.witness.empty()) rep.witness = verify_witness_replay(g, read_witness_file(o.witness), h);
  if (!o.family.empty()) {
    GraphFamily fam = o.family == "tree" ? GraphFamily::tree
                      : o.family == "tw" ? GraphFamily::treewidth
                                         : GraphFamily::general;
    rep.size = size_bound_report(g, h, fam, R.size(), o.q);
  }
  std::cout << format_report(rep);
  std::size_t bad = 0;
  for (const auto& p : rep.pairs) bad += !p.ok;
  std::cout << "--- summary\n"
            << "terminals=" << R.size() << "\n"
            << "pairs=" << rep.pairs.size() << "\n"
            << "violated=" << bad << "\n"
            << "domination=" << (rep.domination->ok ? "ok" : "fail") << "\n"
            << "witness=" << (rep.witness ? (rep.witness->ok ? "ok" : "fail") : "none") << "\n"
            << "size=" << (rep.size ? (rep.size->ok ? "ok" : "fail") : "none") << "\n"
            << "vertices=" << h.vertex_count() << "\n"
            << "edges=" << h.edge_count() << "\n"
            << "status=" << (rep.passed() ? "pass" : "fail") << "\n";
  return rep.passed() ? kPass : kFail;
}

int cmd_minimize(const MinimizeOpts& o) {
  require_distinct({&o.graph, &o.out, &o.witness});
  const Graph g = read_graph_file(o.graph);
  const TerminalSet R = flagged(g);
  SearchBudget b;
  b.max_states = o.max_states;
  b.max_vertices = o.max_vertices;
  b.time_limit = std::chrono::milliseconds(static_cast<long long>(o.seconds * 1000));
  MinimizeResult m = minimize_exact(g, R, b);
  const std::size_t naive = reduce_naive(g, R).reduced.vertex_count();
  std::cout << "minimum " << (m.exhaustive ? "= " : "<= ") << m.min_size << "\n"
            << "naive " << naive << "\n"
            << "--- summary\n"
            << "min_size=" << m.min_size << "\n"
            << "exhaustive=" << (m.exhaustive ? "true" : "false") << "\n"
            << "budget_exceeded=" << (m.exhaustive ? "false" : "true") << "\n"
            << "states=" << m.states << "\n"
            << "naive_size=" << naive << "\n";
  if (!o.out.empty()) write_file_atomic(o.out, graph_to_string(*m.best));
  if (!o.witness.empty()) write_file_atomic(o.witness, witness_to_string(*m.witness));
  return kPass;
}

void report_row(std::ostream& os, const std::string& family, const std::string& instance, std::size_t k,
                std::size_t n, std::size_t v, std::size_t e, const std::string& bound, bool exact) {
  os << std::left << std::setw(10) << family << std::setw(22) << instance << std::right << std::setw(4) << k
     << std::setw(8) << n << std::setw(8) << v << std::setw(8) << e << "  " << std::left << std::setw(26) << bound
     << (exact ? "exact" : "MISMATCH") << "\n";
}

int cmd_report(std::uint64_t seed) {
  std::ostream& os = std::cout;
  bool ok = true;
  auto exact = [&](const Graph& g, const Graph& h, const TerminalSet& R) {
    bool pass = verify_distance_preserving(g, h, R).passed();
    ok = ok && pass;
    return pass;
  };
  os << std::left << std::setw(10) << "family" << std::setw(22) << "instance" << std::right << std::setw(4) << "k"
     << std::setw(8) << "|V|" << std::setw(8) << "|V'|" << std::setw(8) << "|E'|" << "  " << std::left << std::setw(26)
     << "bound" << "distances\n";

  for (int d = 1; d <= 4; ++d) {
    Instance t = gen_complete_binary_tree(d);
    auto r = reduce_naive(t.graph, t.terminals);
    const std::size_t k = t.terminals.size();
    auto s = size_bound_report(t.graph, r.reduced, GraphFamily::tree, k);
    ok = ok && s.ok;
    report_row(os, "tree", "cbt depth " + std::to_string(d), k, t.graph.vertex_count(), r.reduced.vertex_count(),
               r.reduced.edge_count(), "2k-2 = " + std::to_string(2 * k - 2) + (s.ok ? "" : " FAIL"),
               exact(t.graph, r.reduced, t.terminals));
  }
  for (int k : {4, 6, 8}) {
    Instance g = gen_grid_lb(k);
    auto r = reduce_naive(g.graph, g.terminals);
    auto s = size_bound_report(g.graph, r.reduced, GraphFamily::general, g.terminals.size());
    ok = ok && s.ok;
    report_row(os, "planar", "grid_lb " + std::to_string(k), g.terminals.size(), g.graph.vertex_count(),
               r.reduced.vertex_count(), r.reduced.edge_count(), "Omega(k^2) lower bound", exact(g.graph, r.reduced, g.terminals));
  }
  std::optional<std::size_t> previous;
  for (int k : {8, 16, 32, 64}) {
    auto in = gen_tw_family(4, k);
    auto t = reduce_tw(in.graph, in.terminals, in.td);
    std::ostringstream b;
    b << "V'/k = " << std::fixed << std::setprecision(2)
      << static_cast<double>(t.result.reduced.vertex_count()) / k;
    if (previous) b << ", x" << std::setprecision(2) << static_cast<double>(t.result.reduced.vertex_count()) / static_cast<double>(*previous);
    previous = t.result.reduced.vertex_count();
    report_row(os, "tw(4)", "tw family k=" + std::to_string(k), static_cast<std::size_t>(k), in.graph.vertex_count(),
               t.result.reduced.vertex_count(), t.result.reduced.edge_count(), b.str(),
               exact(in.graph, t.result.reduced, in.terminals));
  }
  for (int i = 0; i < 4; ++i) {
    const int k = 4 + 2 * i;
    Instance in = gen_random_connected(150, 120, k, seed + static_cast<std::uint64_t>(i));
    auto r = reduce_naive(in.graph, in.terminals);
    auto s = size_bound_report(in.graph, r.reduced, GraphFamily::general, static_cast<std::size_t>(k));
    ok = ok && s.ok;
    report_row(os, "general", "random seed " + std::to_string(seed + static_cast<std::uint64_t>(i)),
               static_cast<std::size_t>(k), in.graph.vertex_count(), r.reduced.vertex_count(), r.reduced.edge_count(),
               "k+k^4 = " + std::to_string(k + k * k * k * k) + (s.ok ? "" : " FAIL"),
               exact(in.graph, r.reduced, in.terminals));
  }
  {
    Arrangement a = gen_line_arrangement(8, seed);
    auto r = reduce_naive(a.instance.graph, a.instance.terminals);
    report_row(os, "planar", "arrangement k=8", a.instance.terminals.size(), a.instance.graph.vertex_count(),
               r.reduced.vertex_count(), r.reduced.edge_count(), "Omega(k^4) domination",
               exact(a.instance.graph, r.reduced, a.instance.terminals));
  }
  os << "\nexact minima (exhaustive search)\n";
  struct Named {
    std::string name;
    Instance in;
  };
  for (const auto& [name, in] : std::vector<Named>{{"cbt depth 2", gen_complete_binary_tree(2)},
                                                    {"star 3", gen_star(3)},
                                                    {"path 5", gen_path(5)}}) {
    auto m = minimize_exact(in.graph, in.terminals);
    os << "  " << std::left << std::setw(14) << name << " min " << m.min_size << (m.exhaustive ? "" : " (bound)")
       << ", naive " << reduce_naive(in.graph, in.terminals).reduced.vertex_count() << "\n";
  }
  os << "\nstatus " << (ok ? "pass" : "fail") << "\n";
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-preserving minors: generate, reduce, verify, minimize, report"};
  app.require_subcommand(1);

  GenerateOpts gen;
  auto* g = app.add_subcommand("generate", "Write a generated instance in graph format");
  g->add_option("family", gen.family, "path | cbt | star | grid | twfamily | arrangement | random | ktree | tree")
      ->required();
  g->add_option("--n", gen.n, "path edges, or vertex count for random / ktree / tree");
  g->add_option("--depth", gen.depth, "cbt depth");
  g->add_option("--leaves", gen.leaves, "star leaves");
  g->add_option("--k", gen.k, "grid side, or number of terminals");
  g->add_option("--p", gen.p, "block size for twfamily");
  g->add_option("--max-k", gen.max_k, "largest grid side allowed");
  g->add_option("--extra", gen.extra, "extra chords for random");
  g->add_option("--width", gen.width, "width for ktree");
  g->add_option("--keep", gen.keep, "percent of k-tree edges kept");
  g->add_option("--seed", gen.seed, "64-bit seed for random families");
  g->add_option("--length", gen.length, "edge length for path");
  g->add_option("-o,--output", gen.out, "graph file (stdout if omitted)");
  g->add_option("--td", gen.td_out, "also write a tree decomposition");

  ReduceOpts red;
  auto* r = app.add_subcommand("reduce", "Reduce a graph; its flagged vertices are the terminals");
  r->add_option("-g,--graph", red.graph, "input graph")->required()->check(CLI::ExistingFile);
  r->add_option("--algorithm", red.algorithm, "naive | tw")->check(CLI::IsMember({"naive", "tw"}));
  r->add_option("--td", red.td, "tree decomposition (tw; heuristic if omitted)")->check(CLI::ExistingFile);
  r->add_option("--q", red.q, "raise q above width + 1 (tw)")->check(CLI::NonNegativeNumber);
  r->add_option("-o,--output", red.out, "reduced graph (stdout if omitted)");
  r->add_option("-w,--witness", red.witness, "witness file");
  r->add_option("--stats", red.stats, "recursion statistics as JSON (tw)");

  VerifyOpts ver;
  auto* v = app.add_subcommand("verify", "Check a reduced graph against its original");
  v->add_option("-g,--graph", ver.graph, "original graph")->required()->check(CLI::ExistingFile);
  v->add_option("-r,--reduced", ver.reduced, "reduced graph")->required()->check(CLI::ExistingFile);
  v->add_option("-w,--witness", ver.witness, "witness to replay")->check(CLI::ExistingFile);
  v->add_option("--family", ver.family, "size bound to check: tree | general | tw")
      ->check(CLI::IsMember({"tree", "general", "tw"}));
  v->add_option("--q", ver.q, "q for the tw ratio");
  v->add_option("--rel-tol", ver.rel_tol, "relative tolerance for approximate lengths");

  MinimizeOpts mini;
  auto* m = app.add_subcommand("minimize", "Exhaustive search for the smallest distance-preserving minor");
  m->add_option("-g,--graph", mini.graph, "input graph (exact lengths)")->required()->check(CLI::ExistingFile);
  m->add_option("--max-states", mini.max_states, "state budget")->check(CLI::PositiveNumber);
  m->add_option("--max-vertices", mini.max_vertices, "largest input accepted")->check(CLI::PositiveNumber);
  m->add_option("--time-limit", mini.seconds, "seconds")->check(CLI::PositiveNumber);
  m->add_option("-o,--output", mini.out, "smallest minor found");
  m->add_option("-w,--witness", mini.witness, "its witness");

  std::uint64_t report_seed = 1;
  auto* rep = app.add_subcommand("report", "Measured sizes next to the known bounds");
  rep->add_option("--seed", report_seed, "seed for the random rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*r) return cmd_reduce(red);
    if (*v) return cmd_verify(ver);
    if (*m) return cmd_minimize(mini);
    if (*rep) return cmd_report(report_seed);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
