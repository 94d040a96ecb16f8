#include "dpm/naive_reduce.hpp"

#include <vector>

#include "dpm/shortest_paths.hpp"

namespace dpm {

namespace {

void check_terminals(const Graph& g, const TerminalSet& R) {
  for (VertexId r : R)
    if (!g.has_vertex(r)) throw GraphError("terminal " + std::to_string(r) + " is not a vertex");
  for (VertexId t : g.terminals())
    if (!R.count(t)) throw GraphError("flagged terminal " + std::to_string(t) + " missing from terminal set");
}

std::map<VertexId, VertexId> identity_map(const Graph& g) {
  std::map<VertexId, VertexId> m;
  for (VertexId v : g.vertices()) m.emplace(v, v);
  return m;
}

}  // namespace

ReductionResult restrict_to_shortest_paths(const Graph& g, const TerminalSet& R) {
  check_terminals(g, R);
  IndexedGraph ig(g);
  std::vector<int> sources;
  for (VertexId r : R) sources.push_back(ig.position(r));
  const auto trees = canonical_trees(ig, sources);

  std::vector<char> keep_vertex(static_cast<std::size_t>(ig.size()), 0);
  std::vector<char> keep_edge(static_cast<std::size_t>(ig.edge_count()), 0);
  for (int s : sources) keep_vertex[static_cast<std::size_t>(s)] = 1;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const CanonicalTree& t = trees[i];
    for (std::size_t j = i + 1; j < sources.size(); ++j) {
      for (int x = sources[j]; t.parent[static_cast<std::size_t>(x)] != -1; x = t.parent[static_cast<std::size_t>(x)]) {
        keep_vertex[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(x)])] = 1;
        keep_edge[static_cast<std::size_t>(t.parent_edge[static_cast<std::size_t>(x)])] = 1;
      }
    }
  }

  ReductionResult out{g, {g.fingerprint(), {}}, {}};
  for (int e = 0; e < ig.edge_count(); ++e) {
    const Edge& edge = ig.edge(e);
    if (keep_edge[static_cast<std::size_t>(e)]) continue;
    if (keep_vertex[static_cast<std::size_t>(ig.position(edge.u))] &&
        keep_vertex[static_cast<std::size_t>(ig.position(edge.v))])
      out.witness.ops.push_back(MinorOp::delete_edge(edge.u, edge.v));
  }
  for (int v = 0; v < ig.size(); ++v)
    if (!keep_vertex[static_cast<std::size_t>(v)]) out.witness.ops.push_back(MinorOp::delete_vertex(ig.id(v)));
  for (const MinorOp& op : out.witness.ops) out.reduced.apply(op);
  out.retained = identity_map(out.reduced);
  return out;
}

ReductionResult contract_degree2(const Graph& g, const TerminalSet& R) {
  check_terminals(g, R);
  ReductionResult out{g, {g.fingerprint(), {}}, {}};
  Graph& h = out.reduced;
  for (;;) {
    bool contracted = false;
    for (VertexId v : h.vertices()) {
      if (R.count(v) || h.degree(v) != 2) continue;
      const VertexId u = *h.neighbors(v).begin();
      MinorOp op = MinorOp::contract_edge(u, v, u);
      h.apply(op);
      out.witness.ops.push_back(op);
      contracted = true;
      break;
    }
    if (!contracted) break;
  }
  out.retained = identity_map(h);
  return out;
}

ReductionResult reduce_naive(const Graph& g, const TerminalSet& R) {
  ReductionResult first = restrict_to_shortest_paths(g, R);
  ReductionResult second = contract_degree2(first.reduced, R);
  second.witness.fingerprint = first.witness.fingerprint;
  second.witness.ops.insert(second.witness.ops.begin(), first.witness.ops.begin(), first.witness.ops.end());
  return second;
}

}  // namespace dpm
