#include "dpm/shortest_paths.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

namespace dpm {

std::vector<EdgeIndex> PerturbationKey::indices() const {
  std::vector<EdgeIndex> out;
  for (std::size_t w = 0; w < words_.size(); ++w)
    for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
      out.push_back(static_cast<EdgeIndex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
  return out;
}

std::strong_ordering operator<=>(const PerturbationKey& a, const PerturbationKey& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    std::uint64_t x = w < a.words_.size() ? a.words_[w] : 0;
    std::uint64_t y = w < b.words_.size() ? b.words_[w] : 0;
    if (x == y) continue;
    // The lowest differing index carries the largest weight 2^-i.
    std::uint64_t low = (x ^ y) & (~(x ^ y) + 1);
    return (x & low) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

IndexedGraph::IndexedGraph(const Graph& g) : mode_(g.mode()) {
  ids_ = g.vertices();
  edges_ = g.edges();
  std::vector<std::size_t> degree(ids_.size() + 1, 0);
  for (const Edge& e : edges_) {
    ++degree[static_cast<std::size_t>(position(e.u))];
    ++degree[static_cast<std::size_t>(position(e.v))];
    max_index_ = std::max(max_index_, e.index);
  }
  offsets_.assign(ids_.size() + 1, 0);
  for (std::size_t i = 0; i < ids_.size(); ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  arcs_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    int a = position(edges_[static_cast<std::size_t>(i)].u);
    int b = position(edges_[static_cast<std::size_t>(i)].v);
    arcs_[fill[static_cast<std::size_t>(a)]++] = {b, i};
    arcs_[fill[static_cast<std::size_t>(b)]++] = {a, i};
  }
}

int IndexedGraph::position(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  return (it != ids_.end() && *it == v) ? static_cast<int>(it - ids_.begin()) : -1;
}

CanonicalTree canonical_tree(const IndexedGraph& g, int source) {
  const auto n = static_cast<std::size_t>(g.size());
  CanonicalTree t;
  t.source = source;
  t.dist.assign(n, std::nullopt);
  t.key.assign(n, PerturbationKey(g.max_edge_index()));
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  std::vector<char> done(n, 0);

  auto less = [&t](int a, int b) {
    const auto& da = *t.dist[static_cast<std::size_t>(a)];
    const auto& db = *t.dist[static_cast<std::size_t>(b)];
    if (auto c = da <=> db; c != 0) return c < 0;
    if (auto c = t.key[static_cast<std::size_t>(a)] <=> t.key[static_cast<std::size_t>(b)]; c != 0) return c < 0;
    return a < b;
  };
  std::set<int, decltype(less)> frontier(less);

  t.dist[static_cast<std::size_t>(source)] = Length::zero(g.mode());
  frontier.insert(source);
  while (!frontier.empty()) {
    int u = *frontier.begin();
    frontier.erase(frontier.begin());
    done[static_cast<std::size_t>(u)] = 1;
    const Length& du = *t.dist[static_cast<std::size_t>(u)];
    for (const auto& arc : g.arcs(u)) {
      const auto w = static_cast<std::size_t>(arc.to);
      if (done[w]) continue;
      const Edge& e = g.edge(arc.edge);
      Length cand = du + e.length;
      PerturbationKey cand_key = t.key[static_cast<std::size_t>(u)];
      cand_key.insert(e.index);
      if (t.dist[w]) {
        auto c = cand <=> *t.dist[w];
        if (c > 0 || (c == 0 && cand_key >= t.key[w])) continue;
        frontier.erase(arc.to);
      }
      t.dist[w] = std::move(cand);
      t.key[w] = std::move(cand_key);
      t.parent[w] = u;
      t.parent_edge[w] = arc.edge;
      frontier.insert(arc.to);
    }
  }
  return t;
}

std::vector<CanonicalTree> canonical_trees_serial(const IndexedGraph& g, std::span<const int> sources) {
  std::vector<CanonicalTree> out;
  out.reserve(sources.size());
  for (int s : sources) out.push_back(canonical_tree(g, s));
  return out;
}

std::vector<CanonicalTree> canonical_trees(const IndexedGraph& g, std::span<const int> sources) {
  std::vector<CanonicalTree> out(sources.size());
  const auto count = static_cast<long>(sources.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = canonical_tree(g, sources[static_cast<std::size_t>(i)]);
  return out;
}

std::optional<PathResult> canonical_shortest_path(const Graph& g, VertexId u, VertexId v) {
  IndexedGraph ig(g);
  int pu = ig.position(u), pv = ig.position(v);
  if (pu < 0) throw GraphError("unknown vertex " + std::to_string(u));
  if (pv < 0) throw GraphError("unknown vertex " + std::to_string(v));
  CanonicalTree t = canonical_tree(ig, pu);
  if (!t.dist[static_cast<std::size_t>(pv)]) return std::nullopt;
  PathResult r;
  r.total = *t.dist[static_cast<std::size_t>(pv)];
  r.key = t.key[static_cast<std::size_t>(pv)];
  r.edges = r.key.indices();
  for (int x = pv; x != -1; x = t.parent[static_cast<std::size_t>(x)]) r.vertices.push_back(ig.id(x));
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

DistanceMatrix::DistanceMatrix(std::vector<VertexId> vertices, std::vector<std::optional<Length>> entries)
    : vertices_(std::move(vertices)), entries_(std::move(entries)) {
  if (entries_.size() != vertices_.size() * vertices_.size()) throw std::invalid_argument("distance matrix shape");
}

std::size_t DistanceMatrix::index_of(VertexId v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw GraphError("vertex " + std::to_string(v) + " not in distance matrix");
  return static_cast<std::size_t>(it - vertices_.begin());
}

const std::optional<Length>& DistanceMatrix::operator()(VertexId a, VertexId b) const {
  return at(index_of(a), index_of(b));
}

std::vector<std::optional<Length>> single_source_distances(const IndexedGraph& g, int source) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<std::optional<Length>> dist(n);
  std::vector<char> done(n, 0);
  using Item = std::pair<Length, int>;
  auto greater = [](const Item& a, const Item& b) {
    if (auto c = a.first <=> b.first; c != 0) return c > 0;
    return a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(greater)> pq(greater);
  dist[static_cast<std::size_t>(source)] = Length::zero(g.mode());
  pq.emplace(*dist[static_cast<std::size_t>(source)], source);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[static_cast<std::size_t>(u)]) continue;
    done[static_cast<std::size_t>(u)] = 1;
    for (const auto& arc : g.arcs(u)) {
      const auto w = static_cast<std::size_t>(arc.to);
      if (done[w]) continue;
      Length cand = d + g.edge(arc.edge).length;
      if (!dist[w] || cand < *dist[w]) {
        dist[w] = cand;
        pq.emplace(std::move(cand), arc.to);
      }
    }
  }
  return dist;
}

namespace {

std::vector<int> source_positions(const IndexedGraph& ig, const std::vector<VertexId>& sources) {
  std::vector<int> pos;
  pos.reserve(sources.size());
  for (VertexId s : sources) {
    int p = ig.position(s);
    if (p < 0) throw GraphError("unknown vertex " + std::to_string(s));
    pos.push_back(p);
  }
  return pos;
}

void fill_row(const IndexedGraph& ig, const std::vector<int>& pos, std::size_t i,
              std::vector<std::optional<Length>>& entries) {
  auto dist = single_source_distances(ig, pos[i]);
  const std::size_t k = pos.size();
  for (std::size_t j = 0; j < k; ++j) entries[i * k + j] = dist[static_cast<std::size_t>(pos[j])];
}

// Approximate-mode sums depend on summation order; mirror the upper triangle
// so the matrix is symmetric in both modes.
void symmetrize(std::size_t k, std::vector<std::optional<Length>>& entries) {
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j) entries[i * k + j] = entries[j * k + i];
}

}  // namespace

DistanceMatrix apsp_serial(const Graph& g, const std::vector<VertexId>& sources) {
  IndexedGraph ig(g);
  auto pos = source_positions(ig, sources);
  std::vector<std::optional<Length>> entries(pos.size() * pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) fill_row(ig, pos, i, entries);
  symmetrize(pos.size(), entries);
  return DistanceMatrix(sources, std::move(entries));
}

DistanceMatrix apsp(const Graph& g, const std::vector<VertexId>& sources) {
  IndexedGraph ig(g);
  auto pos = source_positions(ig, sources);
  std::vector<std::optional<Length>> entries(pos.size() * pos.size());
  const auto count = static_cast<long>(pos.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) fill_row(ig, pos, static_cast<std::size_t>(i), entries);
  symmetrize(pos.size(), entries);
  return DistanceMatrix(sources, std::move(entries));
}

}  // namespace dpm
