#include "dpm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace dpm {

namespace {

// Portable bounded draw; std distributions are implementation-defined.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Length random_length(std::mt19937_64& rng) {
  return Length::exact(static_cast<long>(draw(rng, 1, 20)), static_cast<unsigned long>(draw(rng, 1, 4)));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

TerminalSet pick_terminals(std::mt19937_64& rng, std::vector<VertexId> pool, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > pool.size()) throw std::invalid_argument("not enough vertices for terminals");
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
    std::swap(pool[i], pool[i + static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(pool.size() - i - 1)))]);
  return TerminalSet(pool.begin(), pool.begin() + k);
}

Instance finish(VertexId n, const TerminalSet& R, const std::vector<EdgeSpec>& edges, LengthMode mode) {
  return {build_graph(n, std::vector<VertexId>(R.begin(), R.end()), edges, mode), R};
}

}  // namespace

Instance gen_path(int n, const Length& len) {
  if (n < 1) throw std::invalid_argument("path needs at least one edge");
  std::vector<EdgeSpec> edges;
  for (VertexId v = 1; v <= n; ++v) edges.push_back({v, v + 1, len});
  return finish(n + 1, {1, static_cast<VertexId>(n) + 1}, edges, len.mode());
}

Instance gen_complete_binary_tree(int depth) {
  if (depth < 1) throw std::invalid_argument("tree depth must be at least 1");
  if (depth > 20) throw std::invalid_argument("tree depth too large");
  const VertexId n = (VertexId{1} << (depth + 1)) - 1;
  std::vector<EdgeSpec> edges;
  for (VertexId v = 1; 2 * v + 1 <= n; ++v) {
    edges.push_back({v, 2 * v, Length::exact(1)});
    edges.push_back({v, 2 * v + 1, Length::exact(1)});
  }
  TerminalSet R;
  for (VertexId v = VertexId{1} << depth; v <= n; ++v) R.insert(v);
  return finish(n, R, edges, LengthMode::exact);
}

Instance gen_star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  std::vector<EdgeSpec> edges;
  TerminalSet R;
  for (VertexId v = 2; v <= leaves + 1; ++v) {
    edges.push_back({1, v, Length::exact(1)});
    R.insert(v);
  }
  return finish(leaves + 1, R, edges, LengthMode::exact);
}

Instance gen_grid_lb(int k, int max_k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("grid terminal count k must be even and at least 4");
  if (k > max_k) throw std::invalid_argument("grid k=" + std::to_string(k) + " exceeds the cap " + std::to_string(max_k));
  std::vector<Length> vertical(static_cast<std::size_t>(k));
  for (int x = 0; x < k; ++x) {
    mpz_class den = k;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(x) * static_cast<mp_bitcnt_t>(x));
    vertical[static_cast<std::size_t>(x)] = Length::exact(mpq_class(1) + mpq_class(mpz_class(1), den));
  }
  std::vector<EdgeSpec> edges;
  for (int y = 0; y < k; ++y)
    for (int x = 0; x < k; ++x) {
      if (x + 1 < k) edges.push_back({grid_vertex(k, x, y), grid_vertex(k, x + 1, y), Length::exact(1)});
      if (y + 1 < k) edges.push_back({grid_vertex(k, x, y), grid_vertex(k, x, y + 1), vertical[static_cast<std::size_t>(x)]});
    }
  TerminalSet R;
  for (int y = 0; y < k / 2; ++y) R.insert(grid_vertex(k, 0, y));
  for (int x = k / 2; x < k; ++x) R.insert(grid_vertex(k, x, x));
  return finish(static_cast<VertexId>(k) * k, R, edges, LengthMode::exact);
}

mpq_class grid_lb_distance(int k, int x, int y) {
  mpz_class den = k;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(x) * static_cast<mp_bitcnt_t>(x));
  mpq_class d = mpq_class(2 * x - y) + mpq_class(mpz_class(x - y), den);
  d.canonicalize();
  return d;
}

InstanceWithTd gen_tw_family(int p, int k, int max_p) {
  if (p < 4 || p % 2 != 0) throw std::invalid_argument("block size p must be even and at least 4");
  if (k < p || k % p != 0) throw std::invalid_argument("k must be a positive multiple of p");
  const Instance block = gen_grid_lb(p, max_p);
  const int blocks = k / p;
  const VertexId per = static_cast<VertexId>(p) * p;

  std::vector<EdgeSpec> edges;
  TerminalSet R;
  InstanceWithTd out{Graph(), {}, {}};
  for (int b = 0; b < blocks; ++b) {
    const VertexId off = b * per;
    for (const Edge& e : block.graph.edges()) edges.push_back({e.u + off, e.v + off, e.length});
    for (VertexId t : block.terminals) R.insert(t + off);
    for (VertexId i = 0; i + p < per; ++i) {
      std::vector<VertexId> bag;
      for (VertexId j = i; j <= i + p; ++j) bag.push_back(off + 1 + j);
      if (!out.td.bags.empty()) out.td.tree_edges.emplace_back(static_cast<int>(out.td.bags.size()) - 1, static_cast<int>(out.td.bags.size()));
      out.td.bags.push_back(std::move(bag));
    }
  }
  Instance inst = finish(blocks * per, R, edges, LengthMode::exact);
  out.graph = std::move(inst.graph);
  out.terminals = std::move(inst.terminals);
  return out;
}

namespace {

struct Point {
  mpq_class x, y;
};

bool point_less(const Point& a, const Point& b) {
  int c = cmp(a.x, b.x);
  return c != 0 ? c < 0 : cmp(a.y, b.y) < 0;
}

mpq_class cross(const mpq_class& ax, const mpq_class& ay, const mpq_class& bx, const mpq_class& by) {
  return ax * by - ay * bx;
}

struct Segment {
  VertexId from, to;  // terminal ids
  Point p, q;
};

std::optional<Arrangement> try_arrangement(int k, std::uint64_t seed) {
  const int m = k / 4;
  const long scale = 1L << 20;
  std::mt19937_64 rng(seed);
  auto side = [&]() {
    std::set<long> picks;
    while (static_cast<int>(picks.size()) < m) picks.insert(static_cast<long>(draw(rng, 1, scale - 1)));
    std::vector<mpq_class> out;
    for (long v : picks) out.emplace_back(v, scale);
    return out;
  };
  const auto top = side(), bottom = side(), left = side(), right = side();

  std::vector<Point> coords;
  for (const auto& a : top) coords.push_back({a, 1});
  for (const auto& b : bottom) coords.push_back({b, 0});
  for (const auto& c : left) coords.push_back({0, c});
  for (const auto& d : right) coords.push_back({1, d});
  auto terminal = [m](int group, int i) { return static_cast<VertexId>(group * m + i + 1); };

  std::vector<Segment> segs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      segs.push_back({terminal(0, i), terminal(1, j), coords[static_cast<std::size_t>(terminal(0, i) - 1)],
                      coords[static_cast<std::size_t>(terminal(1, j) - 1)]});
  const std::size_t tb = segs.size();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      segs.push_back({terminal(2, i), terminal(3, j), coords[static_cast<std::size_t>(terminal(2, i) - 1)],
                      coords[static_cast<std::size_t>(terminal(3, j) - 1)]});

  // Interior crossings, each with the parameter along both segments.
  struct Crossing {
    std::size_t a, b;
    mpq_class ta, tb;
    Point at;
  };
  std::vector<Crossing> crossings;
  for (std::size_t a = 0; a < segs.size(); ++a)
    for (std::size_t b = a + 1; b < segs.size(); ++b) {
      const Segment& s = segs[a];
      const Segment& t = segs[b];
      mpq_class d1x = s.q.x - s.p.x, d1y = s.q.y - s.p.y;
      mpq_class d2x = t.q.x - t.p.x, d2y = t.q.y - t.p.y;
      mpq_class den = cross(d1x, d1y, d2x, d2y);
      if (sgn(den) == 0) continue;
      mpq_class ox = t.p.x - s.p.x, oy = t.p.y - s.p.y;
      mpq_class ta = cross(ox, oy, d2x, d2y) / den;
      mpq_class tb2 = cross(ox, oy, d1x, d1y) / den;
      if (sgn(ta) <= 0 || ta >= 1 || sgn(tb2) <= 0 || tb2 >= 1) continue;
      crossings.push_back({a, b, ta, tb2, {s.p.x + ta * d1x, s.p.y + ta * d1y}});
    }

  std::vector<Point> interior;
  for (const auto& c : crossings) interior.push_back(c.at);
  std::sort(interior.begin(), interior.end(), point_less);
  for (std::size_t i = 1; i < interior.size(); ++i)
    if (!point_less(interior[i - 1], interior[i])) return std::nullopt;  // three segments through one point

  auto interior_id = [&](const Point& p) {
    auto it = std::lower_bound(interior.begin(), interior.end(), p, point_less);
    return static_cast<VertexId>(4 * m) + static_cast<VertexId>(it - interior.begin()) + 1;
  };

  Arrangement out;
  out.per_side = m;
  out.seed_used = seed;
  std::vector<std::vector<std::pair<mpq_class, VertexId>>> along(segs.size());
  for (const auto& c : crossings) {
    VertexId id = interior_id(c.at);
    along[c.a].emplace_back(c.ta, id);
    along[c.b].emplace_back(c.tb, id);
  }
  for (const auto& c : crossings)
    if (c.a < tb && c.b >= tb) out.cross_vertices.push_back(interior_id(c.at));

  for (const Point& p : interior) coords.push_back(p);
  for (const Point& p : coords) out.coordinates.emplace_back(p.x.get_d(), p.y.get_d());

  std::vector<EdgeSpec> edges;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    auto& pts = along[s];
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return cmp(a.first, b.first) < 0; });
    std::vector<VertexId> seq{segs[s].from};
    for (const auto& [t, id] : pts) seq.push_back(id);
    seq.push_back(segs[s].to);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const Point& a = coords[static_cast<std::size_t>(seq[i] - 1)];
      const Point& b = coords[static_cast<std::size_t>(seq[i + 1] - 1)];
      mpq_class dx = b.x - a.x, dy = b.y - a.y;
      edges.push_back({seq[i], seq[i + 1], Length::approximate(std::hypot(dx.get_d(), dy.get_d()))});
    }
    out.segments.push_back(std::move(seq));
  }
  TerminalSet R;
  for (VertexId v = 1; v <= 4 * m; ++v) R.insert(v);
  out.instance = finish(static_cast<VertexId>(coords.size()), R, edges, LengthMode::approximate);
  return out;
}

}  // namespace

Arrangement gen_line_arrangement(int k, std::uint64_t seed) {
  if (k < 8) throw std::invalid_argument("line arrangement needs k >= 8");
  std::uint64_t s = seed;
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (auto a = try_arrangement(k, s)) return std::move(*a);
    s = splitmix64(s ^ static_cast<std::uint64_t>(attempt + 1));
  }
  throw std::runtime_error("could not draw a generic line arrangement");
}

Instance gen_random_connected(int n, int extra_edges, int k, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random graph needs at least two vertices");
  std::mt19937_64 rng(seed);
  std::vector<EdgeSpec> edges;
  std::set<std::pair<VertexId, VertexId>> used;
  for (VertexId v = 2; v <= n; ++v) {
    VertexId u = draw(rng, 1, v - 1);
    edges.push_back({u, v, random_length(rng)});
    used.insert({u, v});
  }
  const long long max_extra = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
  for (int added = 0; added < extra_edges && added < max_extra;) {
    VertexId a = draw(rng, 1, n), b = draw(rng, 1, n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!used.insert({a, b}).second) continue;
    edges.push_back({a, b, random_length(rng)});
    ++added;
  }
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), VertexId{1});
  TerminalSet R = pick_terminals(rng, pool, k);
  return finish(n, R, edges, LengthMode::exact);
}

InstanceWithTd gen_random_partial_ktree(int n, int width, int k, int keep_percent, std::uint64_t seed) {
  if (width < 1 || n < width + 1) throw std::invalid_argument("partial k-tree needs n >= width + 1 >= 2");
  std::mt19937_64 rng(seed);
  InstanceWithTd out{Graph(), {}, {}};
  std::vector<EdgeSpec> edges;
  std::vector<VertexId> base;
  for (VertexId v = 1; v <= width + 1; ++v) base.push_back(v);
  for (VertexId a = 1; a <= width + 1; ++a)
    for (VertexId b = a + 1; b <= width + 1; ++b)
      if (b == a + 1 || draw(rng, 1, 100) <= keep_percent) edges.push_back({a, b, random_length(rng)});
  out.td.bags.push_back(base);
  for (VertexId v = width + 2; v <= n; ++v) {
    const auto host = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(out.td.bags.size()) - 1));
    std::vector<VertexId> clique = out.td.bags[host];
    clique.erase(clique.begin() + draw(rng, 0, static_cast<std::int64_t>(clique.size()) - 1));
    const auto anchor = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(clique.size()) - 1));
    for (std::size_t i = 0; i < clique.size(); ++i)
      if (i == anchor || draw(rng, 1, 100) <= keep_percent) edges.push_back({clique[i], v, random_length(rng)});
    clique.push_back(v);
    std::sort(clique.begin(), clique.end());
    out.td.tree_edges.emplace_back(static_cast<int>(host), static_cast<int>(out.td.bags.size()));
    out.td.bags.push_back(std::move(clique));
  }
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), VertexId{1});
  out.terminals = pick_terminals(rng, pool, k);
  out.graph = build_graph(n, std::vector<VertexId>(out.terminals.begin(), out.terminals.end()), edges);
  return out;
}

Instance gen_random_tree(int n, int k, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random tree needs at least two vertices");
  std::mt19937_64 rng(seed);
  std::vector<EdgeSpec> edges;
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 2; v <= n; ++v) {
    VertexId u = draw(rng, 1, v - 1);
    edges.push_back({u, v, random_length(rng)});
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  std::vector<VertexId> leaves;
  for (VertexId v = 1; v <= n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push_back(v);
  if (static_cast<int>(leaves.size()) < k) throw std::invalid_argument("random tree has fewer leaves than k");
  return finish(n, pick_terminals(rng, leaves, k), edges, LengthMode::exact);
}

}  // namespace dpm
