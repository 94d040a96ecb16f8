#include "dpm/minimize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "dpm/shortest_paths.hpp"

namespace dpm {

namespace {

// Beyond this many candidate orderings we keep the labelled order inside
// colour classes: still sound for deduplication, merely less merging.
constexpr std::size_t kMaxOrderings = 40320;

using Colouring = std::map<VertexId, int>;

Colouring refine(const Graph& g, const TerminalSet& R, const std::vector<VertexId>& free) {
  Colouring colour;
  for (VertexId v : free) colour[v] = 0;
  std::size_t classes = free.empty() ? 0 : 1;
  for (;;) {
    std::map<VertexId, std::string> sig;
    for (VertexId v : free) {
      std::vector<std::string> parts;
      for (VertexId w : g.neighbors(v)) {
        std::string who = R.count(w) ? "r" + std::to_string(w) : "c" + std::to_string(colour[w]);
        parts.push_back(who + ":" + g.edge(v, w)->length.str());
      }
      std::sort(parts.begin(), parts.end());
      std::string s = std::to_string(colour[v]) + "|";
      for (const auto& p : parts) s += p + ",";
      sig[v] = std::move(s);
    }
    std::vector<std::string> distinct;
    for (const auto& [v, s] : sig) distinct.push_back(s);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (VertexId v : free)
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    if (distinct.size() == classes) return colour;
    classes = distinct.size();
  }
}

std::string encode(const Graph& g, const TerminalSet& R, const std::map<VertexId, int>& slot) {
  auto label = [&](VertexId v) { return R.count(v) ? "r" + std::to_string(v) : "n" + std::to_string(slot.at(v)); };
  std::vector<std::string> edges;
  for (const Edge& e : g.edges()) {
    std::string a = label(e.u), b = label(e.v);
    if (b < a) std::swap(a, b);
    edges.push_back(a + "-" + b + "=" + e.length.str());
  }
  std::sort(edges.begin(), edges.end());
  std::ostringstream os;
  os << to_string(g.mode()) << ";";
  for (VertexId v : g.vertices())
    if (R.count(v)) os << "r" << v << (g.is_terminal(v) ? "*" : "") << ",";
  os << ";" << slot.size() << ";";
  for (const auto& e : edges) os << e << ",";
  return os.str();
}

bool exact_valid(const Graph& h, const std::vector<VertexId>& terms, const DistanceMatrix& target) {
  return apsp_serial(h, terms) == target;
}

}  // namespace

std::string canonical_encoding(const Graph& g, const TerminalSet& R) {
  std::vector<VertexId> free;
  for (VertexId v : g.vertices())
    if (!R.count(v)) free.push_back(v);
  const Colouring colour = refine(g, R, free);

  std::map<int, std::vector<VertexId>> by_class;
  for (VertexId v : free) by_class[colour.at(v)].push_back(v);
  std::vector<std::vector<VertexId>> classes;
  std::size_t orderings = 1;
  for (auto& [c, members] : by_class) {
    for (std::size_t i = 2; i <= members.size() && orderings <= kMaxOrderings; ++i) orderings *= i;
    classes.push_back(members);
  }

  auto build = [&]() {
    std::map<VertexId, int> slot;
    int next = 0;
    for (const auto& cls : classes)
      for (VertexId v : cls) slot[v] = next++;
    return encode(g, R, slot);
  };
  if (orderings > kMaxOrderings) return build();

  std::string best;
  bool have = false;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == classes.size()) {
      std::string e = build();
      if (!have || e < best) best = std::move(e), have = true;
      return;
    }
    auto& cls = classes[i];
    std::sort(cls.begin(), cls.end());
    do walk(i + 1);
    while (std::next_permutation(cls.begin(), cls.end()));
  };
  walk(0);
  return best;
}

MinimizeResult minimize_exact(const Graph& g, const TerminalSet& R, const SearchBudget& budget) {
  if (g.mode() != LengthMode::exact) throw GraphError("minimize_exact needs exact lengths");
  if (g.vertex_count() > budget.max_vertices)
    throw GraphError("graph has " + std::to_string(g.vertex_count()) + " vertices, budget allows " +
                     std::to_string(budget.max_vertices));
  for (VertexId r : R)
    if (!g.has_vertex(r)) throw GraphError("terminal " + std::to_string(r) + " is not a vertex");
  for (VertexId t : g.terminals())
    if (!R.count(t)) throw GraphError("flagged terminal " + std::to_string(t) + " missing from terminal set");

  const auto start = std::chrono::steady_clock::now();
  const std::vector<VertexId> terms(R.begin(), R.end());
  const DistanceMatrix target = apsp_serial(g, terms);

  struct State {
    Graph graph;
    std::vector<MinorOp> path;
  };
  std::vector<State> frontier{{g, {}}};
  std::unordered_set<std::string> seen{canonical_encoding(g, R)};

  MinimizeResult out;
  out.min_size = g.vertex_count();
  out.best = g;
  out.witness = Witness{g.fingerprint(), {}};
  bool exceeded = false;

  while (!frontier.empty() && !exceeded) {
    std::vector<State> next;
    for (const State& s : frontier) {
      std::vector<MinorOp> moves;
      for (VertexId v : s.graph.vertices())
        if (!R.count(v)) moves.push_back(MinorOp::delete_vertex(v));
      for (const Edge& e : s.graph.edges()) {
        const bool ru = R.count(e.u) != 0, rv = R.count(e.v) != 0;
        if (ru && rv) continue;
        if (!rv) moves.push_back(MinorOp::contract_edge(e.u, e.v, e.u));
        if (!ru) moves.push_back(MinorOp::contract_edge(e.u, e.v, e.v));
      }
      for (const MinorOp& op : moves) {
        Graph h = apply_minor_op(s.graph, op);
        if (!seen.insert(canonical_encoding(h, R)).second) continue;
        if (seen.size() > budget.max_states || std::chrono::steady_clock::now() - start > budget.time_limit) {
          exceeded = true;
          break;
        }
        if (!exact_valid(h, terms, target)) continue;  // distances never shrink again
        std::vector<MinorOp> path = s.path;
        path.push_back(op);
        next.push_back({std::move(h), std::move(path)});
      }
      if (exceeded) break;
    }
    if (!next.empty()) {
      out.min_size = next.front().graph.vertex_count();
      out.best = next.front().graph;
      out.witness = Witness{g.fingerprint(), next.front().path};
    }
    frontier = std::move(next);
  }
  out.exhaustive = !exceeded;
  out.states = seen.size();
  return out;
}

}  // namespace dpm
