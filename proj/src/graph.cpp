#include "dpm/graph.hpp"

#include <algorithm>

namespace dpm {

std::string MinorOp::str() const {
  switch (kind) {
    case Kind::delete_vertex:
      return "dv " + std::to_string(u);
    case Kind::delete_edge:
      return "de " + std::to_string(u) + " " + std::to_string(v);
    case Kind::contract_edge:
      return "ce " + std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(survivor);
  }
  return {};
}

void Graph::check_vertex(VertexId v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
}

bool Graph::is_terminal(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw GraphError("unknown vertex " + std::to_string(v));
  return it->second;
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw GraphError("unknown vertex " + std::to_string(v));
  return it->second;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (const auto& [v, t] : vertices_) out.push_back(v);
  return out;
}

std::vector<VertexId> Graph::terminals() const {
  std::vector<VertexId> out;
  for (const auto& [v, t] : vertices_)
    if (t) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [k, e] : edges_) out.push_back({k.first, k.second, e.length, e.index});
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return a.index != b.index ? a.index < b.index : std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  return out;
}

const Graph::EdgeData* Graph::find_edge(VertexId a, VertexId b) const {
  auto it = edges_.find(key(a, b));
  return it == edges_.end() ? nullptr : &it->second;
}

std::optional<Edge> Graph::edge(VertexId a, VertexId b) const {
  const EdgeData* e = find_edge(a, b);
  if (!e) return std::nullopt;
  auto k = key(a, b);
  return Edge{k.first, k.second, e->length, e->index};
}

EdgeIndex Graph::max_edge_index() const {
  EdgeIndex m = 0;
  for (const auto& [k, e] : edges_) m = std::max(m, e.index);
  return m;
}

void Graph::add_vertex(VertexId v, bool terminal) {
  auto [it, inserted] = vertices_.emplace(v, terminal);
  if (!inserted) {
    it->second = it->second || terminal;
    return;
  }
  adjacency_[v];
}

void Graph::set_terminal(VertexId v, bool terminal) {
  check_vertex(v);
  vertices_[v] = terminal;
}

void Graph::add_edge(VertexId a, VertexId b, const Length& length, EdgeIndex index) {
  if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
  check_vertex(a);
  check_vertex(b);
  if (length.mode() != mode_) throw GraphError("edge length mode differs from graph mode");
  auto [it, inserted] = edges_.try_emplace(key(a, b), EdgeData{length, index});
  if (inserted) {
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
    return;
  }
  if (length < it->second.length) it->second.length = length;
  it->second.index = std::min(it->second.index, index);
}

void Graph::remove_edge(VertexId a, VertexId b) {
  if (edges_.erase(key(a, b)) == 0)
    throw GraphError("no edge {" + std::to_string(a) + ", " + std::to_string(b) + "}");
  adjacency_[a].erase(b);
  adjacency_[b].erase(a);
}

void Graph::apply(const MinorOp& op) {
  switch (op.kind) {
    case MinorOp::Kind::delete_vertex: {
      check_vertex(op.u);
      if (vertices_[op.u]) throw GraphError("cannot delete terminal " + std::to_string(op.u));
      for (VertexId w : std::vector<VertexId>(adjacency_[op.u].begin(), adjacency_[op.u].end()))
        remove_edge(op.u, w);
      adjacency_.erase(op.u);
      vertices_.erase(op.u);
      return;
    }
    case MinorOp::Kind::delete_edge:
      check_vertex(op.u);
      check_vertex(op.v);
      remove_edge(op.u, op.v);
      return;
    case MinorOp::Kind::contract_edge: {
      check_vertex(op.u);
      check_vertex(op.v);
      const EdgeData* e = find_edge(op.u, op.v);
      if (!e)
        throw GraphError("cannot contract missing edge {" + std::to_string(op.u) + ", " + std::to_string(op.v) + "}");
      if (op.survivor != op.u && op.survivor != op.v)
        throw GraphError("survivor " + std::to_string(op.survivor) + " is not an endpoint");
      const VertexId keep = op.survivor;
      const VertexId gone = keep == op.u ? op.v : op.u;
      if (vertices_[keep] && vertices_[gone])
        throw GraphError("cannot contract terminal-terminal edge {" + std::to_string(op.u) + ", " +
                         std::to_string(op.v) + "}");
      if (vertices_[gone]) throw GraphError("survivor of a contraction must be the terminal endpoint");
      const Length through = e->length;
      remove_edge(keep, gone);
      std::vector<std::pair<VertexId, EdgeData>> moved;
      for (VertexId w : adjacency_[gone]) moved.emplace_back(w, *find_edge(gone, w));
      for (const auto& [w, d] : moved) remove_edge(gone, w);
      adjacency_.erase(gone);
      vertices_.erase(gone);
      for (const auto& [w, d] : moved) add_edge(keep, w, d.length + through, d.index);
      return;
    }
  }
}

Graph Graph::induced_subgraph(const std::set<VertexId>& keep) const {
  Graph h(mode_);
  for (VertexId v : keep) {
    check_vertex(v);
    h.add_vertex(v, vertices_.at(v));
  }
  for (const auto& [k, e] : edges_)
    if (keep.count(k.first) && keep.count(k.second)) h.add_edge(k.first, k.second, e.length, e.index);
  return h;
}

std::uint64_t Graph::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  mix(to_string(mode_));
  for (const auto& [v, t] : vertices_) mix(std::to_string(v) + (t ? "t" : "n"));
  for (const Edge& e : edges())
    mix(std::to_string(e.u) + " " + std::to_string(e.v) + " " + e.length.str() + " " + std::to_string(e.index));
  return h;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.mode_ == b.mode_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
}

Graph build_graph(VertexId n, const std::vector<VertexId>& terminals, const std::vector<EdgeSpec>& edges,
                  LengthMode mode) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g(mode);
  for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
  for (VertexId t : terminals) {
    if (t < 1 || t > n) throw GraphError("terminal " + std::to_string(t) + " is not a vertex");
    g.set_terminal(t, true);
  }
  EdgeIndex next = 1;
  for (const EdgeSpec& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.length.mode() != mode) throw GraphError("edge length mode differs from graph mode");
    if (e.length < Length::zero(mode)) throw GraphError("negative length");
    g.add_edge(e.u, e.v, e.length, next++);
  }
  return g;
}

Graph apply_minor_op(const Graph& g, const MinorOp& op) {
  Graph h = g;
  h.apply(op);
  return h;
}

Graph replay_witness(const Graph& g, const Witness& w) {
  if (w.fingerprint != g.fingerprint()) throw GraphError("witness fingerprint does not match graph");
  Graph h = g;
  for (std::size_t i = 0; i < w.ops.size(); ++i) {
    try {
      h.apply(w.ops[i]);
    } catch (const GraphError& e) {
      throw ReplayError(i, w.ops[i].str() + ": " + e.what());
    }
  }
  return h;
}

Graph union_graphs(const Graph& a, const Graph& b) {
  if (a.mode() != b.mode()) throw GraphError("union of graphs with different length modes");
  Graph h = a;
  for (VertexId v : b.vertices()) {
    if (h.has_vertex(v) && h.is_terminal(v) != b.is_terminal(v))
      throw GraphError("terminal flag conflict on vertex " + std::to_string(v));
    h.add_vertex(v, b.is_terminal(v));
  }
  for (const Edge& e : b.edges()) h.add_edge(e.u, e.v, e.length, e.index);
  return h;
}

}  // namespace dpm
