#include "dpm/tree_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace dpm {

int TreeDecomposition::width() const {
  std::size_t m = 0;
  for (const auto& b : bags) m = std::max(m, b.size());
  return static_cast<int>(m) - 1;
}

namespace {

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<int>> adj(td.bags.size());
  for (auto [a, b] : td.tree_edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

}  // namespace

TreeDecomposition heuristic_tree_decomposition(const Graph& g) {
  std::map<VertexId, std::set<VertexId>> adj;
  for (VertexId v : g.vertices()) adj[v] = g.neighbors(v);

  auto fill_in = [&adj](VertexId v) {
    const auto& nb = adj[v];
    std::size_t missing = 0;
    for (auto a = nb.begin(); a != nb.end(); ++a)
      for (auto b = std::next(a); b != nb.end(); ++b)
        if (!adj[*a].count(*b)) ++missing;
    return missing;
  };

  std::vector<VertexId> order;
  std::map<VertexId, std::set<VertexId>> later;  // neighbours at elimination time
  while (!adj.empty()) {
    VertexId best = 0;
    std::size_t best_fill = std::numeric_limits<std::size_t>::max(), best_deg = 0;
    for (const auto& [v, nb] : adj) {
      std::size_t f = fill_in(v);
      if (f < best_fill || (f == best_fill && nb.size() < best_deg)) {
        best = v;
        best_fill = f;
        best_deg = nb.size();
      }
    }
    const std::set<VertexId> nb = adj[best];
    for (VertexId a : nb) {
      adj[a].erase(best);
      for (VertexId b : nb)
        if (a != b) adj[a].insert(b);
    }
    adj.erase(best);
    later[best] = nb;
    order.push_back(best);
  }

  std::map<VertexId, int> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

  // bag i belongs to order[i]; its parent is the bag of the earliest-eliminated later neighbour.
  const std::size_t n = order.size();
  std::vector<std::set<VertexId>> bags(n);
  std::vector<int> parent(n, -1);
  int previous_root = -1;
  for (std::size_t i = 0; i < n; ++i) {
    bags[i] = later[order[i]];
    bags[i].insert(order[i]);
    int p = -1;
    for (VertexId w : later[order[i]])
      if (p == -1 || rank[w] < p) p = rank[w];
    parent[i] = p;
  }
  // Chain the roots of separate components, last to first.
  for (std::size_t i = n; i-- > 0;) {
    if (parent[i] != -1) continue;
    if (previous_root != -1) parent[static_cast<std::size_t>(previous_root)] = static_cast<int>(i);
    previous_root = static_cast<int>(i);
  }

  std::vector<std::set<int>> tadj(n);
  for (std::size_t i = 0; i < n; ++i)
    if (parent[i] != -1) {
      tadj[i].insert(parent[i]);
      tadj[static_cast<std::size_t>(parent[i])].insert(static_cast<int>(i));
    }
  std::vector<char> alive(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (int j : tadj[i]) {
        const auto& big = bags[static_cast<std::size_t>(j)];
        if (!std::includes(big.begin(), big.end(), bags[i].begin(), bags[i].end())) continue;
        for (int o : tadj[i]) {
          tadj[static_cast<std::size_t>(o)].erase(static_cast<int>(i));
          if (o != j) {
            tadj[static_cast<std::size_t>(o)].insert(j);
            tadj[static_cast<std::size_t>(j)].insert(o);
          }
        }
        tadj[i].clear();
        alive[i] = 0;
        changed = true;
        break;
      }
    }
  }

  TreeDecomposition td;
  std::vector<int> new_id(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) {
      new_id[i] = static_cast<int>(td.bags.size());
      td.bags.emplace_back(bags[i].begin(), bags[i].end());
    }
  for (std::size_t i = 0; i < n; ++i)
    for (int j : tadj[i])
      if (alive[i] && static_cast<int>(i) < j) td.tree_edges.emplace_back(new_id[i], new_id[static_cast<std::size_t>(j)]);
  std::sort(td.tree_edges.begin(), td.tree_edges.end());
  return td;
}

TdVerdict validate_td(const Graph& g, const TreeDecomposition& td) {
  const std::size_t nb = td.bags.size();
  if (nb == 0) {
    if (g.vertex_count() == 0) return {};
    return {false, "no bags", g.vertices().front(), std::nullopt};
  }
  if (td.tree_edges.size() != nb - 1) return {false, "tree has wrong number of edges", std::nullopt, std::nullopt};
  for (auto [a, b] : td.tree_edges)
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= nb || static_cast<std::size_t>(b) >= nb || a == b)
      return {false, "tree edge references an invalid bag", std::nullopt, std::nullopt};
  const auto tadj = tree_adjacency(td);
  {
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tadj[static_cast<std::size_t>(x)])
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++count;
          stack.push_back(y);
        }
    }
    if (count != nb) return {false, "bag tree is disconnected", std::nullopt, std::nullopt};
  }

  std::map<VertexId, std::vector<int>> occurrences;
  for (std::size_t i = 0; i < nb; ++i)
    for (VertexId v : td.bags[i]) {
      if (!g.has_vertex(v)) return {false, "bag contains a non-vertex", v, std::nullopt};
      occurrences[v].push_back(static_cast<int>(i));
    }
  for (VertexId v : g.vertices())
    if (!occurrences.count(v)) return {false, "vertex in no bag", v, std::nullopt};
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (const auto& b : td.bags)
      if (std::binary_search(b.begin(), b.end(), e.u) && std::binary_search(b.begin(), b.end(), e.v)) {
        covered = true;
        break;
      }
    if (!covered) return {false, "edge not covered by any bag", std::nullopt, std::pair{e.u, e.v}};
  }
  for (const auto& [v, occ] : occurrences) {
    std::set<int> member(occ.begin(), occ.end());
    std::set<int> reached{occ.front()};
    std::vector<int> stack{occ.front()};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tadj[static_cast<std::size_t>(x)])
        if (member.count(y) && reached.insert(y).second) stack.push_back(y);
    }
    if (reached.size() != member.size()) return {false, "bags containing the vertex are not connected", v, std::nullopt};
  }
  return {};
}

TreeDecomposition restrict_td(const TreeDecomposition& td, const std::set<VertexId>& keep) {
  TreeDecomposition out;
  out.tree_edges = td.tree_edges;
  out.bags.reserve(td.bags.size());
  for (const auto& b : td.bags) {
    std::vector<VertexId> r;
    for (VertexId v : b)
      if (keep.count(v)) r.push_back(v);
    out.bags.push_back(std::move(r));
  }
  return out;
}

SeparatorTriple balanced_separator(const Graph& h, const TreeDecomposition& td, const std::set<VertexId>& U) {
  if (h.vertex_count() == 0) throw GraphError("balanced separator of an empty graph");
  if (td.bags.empty()) throw GraphError("balanced separator needs a non-empty decomposition");
  for (VertexId u : U)
    if (!h.has_vertex(u)) throw GraphError("weighted vertex " + std::to_string(u) + " not in graph");

  const std::size_t nb = td.bags.size();
  const auto tadj = tree_adjacency(td);
  std::map<VertexId, int> first_bag;
  for (std::size_t i = 0; i < nb; ++i)
    for (VertexId v : td.bags[i]) first_bag.emplace(v, static_cast<int>(i));

  int chosen = 0;
  if (U.size() == 1) {
    chosen = first_bag.at(*U.begin());
  } else if (U.size() > 1) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<int> branch(nb);
    for (std::size_t t = 0; t < nb; ++t) {
      // Label every other bag with the branch of T - t it falls into.
      std::fill(branch.begin(), branch.end(), -1);
      int branches = 0;
      for (int start : tadj[t]) {
        std::vector<int> stack{start};
        branch[static_cast<std::size_t>(start)] = branches;
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (int y : tadj[static_cast<std::size_t>(x)])
            if (static_cast<std::size_t>(y) != t && branch[static_cast<std::size_t>(y)] == -1) {
              branch[static_cast<std::size_t>(y)] = branches;
              stack.push_back(y);
            }
        }
        ++branches;
      }
      std::vector<std::size_t> weight(static_cast<std::size_t>(branches), 0);
      const auto& bag = td.bags[t];
      for (VertexId u : U) {
        if (std::binary_search(bag.begin(), bag.end(), u)) continue;
        ++weight[static_cast<std::size_t>(branch[static_cast<std::size_t>(first_bag.at(u))])];
      }
      std::size_t heaviest = weight.empty() ? 0 : *std::max_element(weight.begin(), weight.end());
      if (heaviest < best) {
        best = heaviest;
        chosen = static_cast<int>(t);
      }
    }
  }

  SeparatorTriple out;
  for (VertexId v : td.bags[static_cast<std::size_t>(chosen)])
    if (h.has_vertex(v)) out.s.insert(v);

  struct Component {
    std::vector<VertexId> vertices;
    std::size_t weight = 0;
  };
  std::vector<Component> comps;
  std::set<VertexId> seen(out.s.begin(), out.s.end());
  for (VertexId start : h.vertices()) {
    if (seen.count(start)) continue;
    Component c;
    std::vector<VertexId> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      c.vertices.push_back(x);
      if (U.count(x)) ++c.weight;
      for (VertexId y : h.neighbors(x))
        if (seen.insert(y).second) stack.push_back(y);
    }
    comps.push_back(std::move(c));
  }
  // Components are discovered in ascending order of their smallest vertex, so
  // a stable sort keeps ties deterministic.
  std::stable_sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) { return a.weight > b.weight; });
  std::size_t w1 = 0, w2 = 0;
  for (const Component& c : comps) {
    bool first = w1 < w2 || (w1 == w2 && out.a1.size() <= out.a2.size());
    (first ? out.a1 : out.a2).insert(c.vertices.begin(), c.vertices.end());
    (first ? w1 : w2) += c.weight;
  }
  return out;
}

}  // namespace dpm
