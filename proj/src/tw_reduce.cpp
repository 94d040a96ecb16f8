#include "dpm/tw_reduce.hpp"

#include <algorithm>
#include <iterator>

namespace dpm {

namespace {

struct LeafWitness {
  std::vector<MinorOp> ops;
  std::set<VertexId> boundary;
};

struct Context {
  int q = 0;
  RecursionStats stats;
  std::vector<LeafWitness> leaves;
};

std::set<VertexId> set_union(const std::set<VertexId>& a, const std::set<VertexId>& b) {
  std::set<VertexId> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::set<VertexId> set_intersection(const std::set<VertexId>& a, const std::set<VertexId>& b) {
  std::set<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<VertexId> set_difference(const std::set<VertexId>& a, const std::set<VertexId>& b) {
  std::set<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

SplitRecord measure(const Graph& h, const SeparatorTriple& t, const std::set<VertexId>& U) {
  SplitRecord r;
  r.weight_set = U.size();
  r.separator = t.s.size();
  r.side1_weight = set_intersection(t.a1, U).size();
  r.side2_weight = set_intersection(t.a2, U).size();
  for (VertexId v : t.a1)
    for (VertexId w : h.neighbors(v))
      if (t.a2.count(w)) r.no_cross_edges = false;
  return r;
}

Graph solve(const Graph& h, const TerminalSet& R, const std::set<VertexId>& B, const TreeDecomposition& td, int depth,
            Context& ctx) {
  const int id = static_cast<int>(ctx.stats.nodes.size());
  ctx.stats.nodes.emplace_back();
  {
    RecursionNode& node = ctx.stats.nodes.back();
    node.terminals = R.size();
    node.boundary = B.size();
    node.required = set_union(R, B).size();
    node.vertices = h.vertex_count();
    node.disjoint = set_intersection(R, B).empty();
    node.depth = depth;
  }
  const auto q = static_cast<std::size_t>(ctx.q);
  if (ctx.stats.nodes[static_cast<std::size_t>(id)].required <= 18 * q) {
    ctx.stats.nodes[static_cast<std::size_t>(id)].leaf = true;
    ReductionResult leaf = reduce_naive(h, set_union(R, B));
    ctx.leaves.push_back({std::move(leaf.witness.ops), B});
    return std::move(leaf.reduced);
  }
  // |R| shrinks by a factor 2/3 per level, so this only trips on a broken separator.
  if (depth > 256) throw std::logic_error("tw recursion does not terminate");

  const SeparatorTriple top = balanced_separator(h, td, R);
  ctx.stats.nodes[static_cast<std::size_t>(id)].splits.push_back(measure(h, top, R));

  Graph combined(h.mode());
  for (const auto* side : {&top.a1, &top.a2}) {
    const std::set<VertexId> part = set_union(*side, top.s);
    const Graph hp = h.induced_subgraph(part);
    const TreeDecomposition tdp = restrict_td(td, part);
    const std::set<VertexId> weights = set_union(set_intersection(B, *side), top.s);
    const SeparatorTriple inner = balanced_separator(hp, tdp, weights);
    ctx.stats.nodes[static_cast<std::size_t>(id)].splits.push_back(measure(hp, inner, weights));

    const std::set<VertexId> cut = set_union(top.s, inner.s);
    const TerminalSet r_side = set_difference(R, cut);
    const std::set<VertexId> b_side = set_union(B, cut);
    for (const auto* piece : {&inner.a1, &inner.a2}) {
      const std::set<VertexId> child = set_union(*piece, inner.s);
      ctx.stats.nodes[static_cast<std::size_t>(id)].children.push_back(static_cast<int>(ctx.stats.nodes.size()));
      Graph sub = solve(hp.induced_subgraph(child), set_intersection(r_side, *piece), set_intersection(b_side, child),
                        restrict_td(tdp, child), depth + 1, ctx);
      combined = union_graphs(combined, sub);
    }
  }
  return combined;
}

}  // namespace

TwReduction reduce_tw(const Graph& g, const TerminalSet& R, const TreeDecomposition& td, int q_override) {
  if (auto verdict = validate_td(g, td); !verdict.ok) throw GraphError("invalid tree decomposition: " + verdict.reason);
  for (VertexId r : R)
    if (!g.has_vertex(r)) throw GraphError("terminal " + std::to_string(r) + " is not a vertex");
  for (VertexId t : g.terminals())
    if (!R.count(t)) throw GraphError("flagged terminal " + std::to_string(t) + " missing from terminal set");

  Context ctx;
  ctx.q = std::max(td.width() + 1, std::max(q_override, 1));
  ctx.stats.q = ctx.q;
  TwReduction out{ReductionResult{Graph(g.mode()), {}, {}}, {}, Graph(g.mode())};
  if (g.vertex_count() == 0) {
    ctx.stats.nodes.push_back({0, 0, 0, 0, true, 0, true, {}, {}});
    out.result = {g, {g.fingerprint(), {}}, {}};
    out.stats = std::move(ctx.stats);
    out.combined = g;
    return out;
  }
  out.combined = solve(g, R, {}, td, 0, ctx);

  // Leaves touch disjoint private regions; only edges between two boundary
  // vertices can be shared. Deletions of such edges are deferred and
  // re-derived against the combined graph.
  Witness w{g.fingerprint(), {}};
  for (const LeafWitness& leaf : ctx.leaves)
    for (const MinorOp& op : leaf.ops) {
      if (op.kind == MinorOp::Kind::delete_edge && leaf.boundary.count(op.u) && leaf.boundary.count(op.v)) continue;
      w.ops.push_back(op);
    }
  Graph replayed = replay_witness(g, w);
  for (const Edge& e : replayed.edges())
    if (!out.combined.has_edge(e.u, e.v)) {
      MinorOp op = MinorOp::delete_edge(e.u, e.v);
      replayed.apply(op);
      w.ops.push_back(op);
    }

  bool same = replayed.vertices() == out.combined.vertices() && replayed.terminals() == out.combined.terminals() &&
              replayed.edge_count() == out.combined.edge_count();
  if (same)
    for (const Edge& e : replayed.edges()) {
      auto c = out.combined.edge(e.u, e.v);
      if (!c || c->length != e.length) {
        same = false;
        break;
      }
    }
  if (!same) throw std::logic_error("composed witness does not reproduce the combined minor");

  out.result.reduced = std::move(replayed);
  out.result.witness = std::move(w);
  for (VertexId v : out.result.reduced.vertices()) out.result.retained.emplace(v, v);
  out.stats = std::move(ctx.stats);
  return out;
}

}  // namespace dpm
