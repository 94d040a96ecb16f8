// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "dpm/generators.hpp"
#include "dpm/minimize.hpp"
#include "dpm/naive_reduce.hpp"
#include "dpm/shortest_paths.hpp"
#include "dpm/tw_reduce.hpp"
#include "dpm/verify.hpp"
#include "oracles.hpp"

using namespace dpm;

namespace {

constexpr double kRelTol = 1e-9;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "first failure: " << what << "; ";
      ok = false;
    }
  }
};

// Every reduction made by criteria 1-6 is logged here for criterion 7.
struct Replayed {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first;
} g_witnesses;

void record_witness(const std::string& name, const Graph& g, const Witness& w, const Graph& out) {
  ++g_witnesses.total;
  auto v = verify_witness_replay(g, w, out);
  Graph replayed = v.ok ? replay_witness(g, w) : Graph();
  // Field-for-field: ids, flags, lengths and indices.
  bool same = v.ok && replayed.vertices() == out.vertices() && replayed.terminals() == out.terminals() &&
              replayed.edges() == out.edges() && replayed.fingerprint() == out.fingerprint();
  if (!same) {
    ++g_witnesses.failed;
    if (g_witnesses.first.empty()) g_witnesses.first = name + (v.ok ? "" : ": " + v.message);
  }
}

// Bit-exact comparison of terminal distances against the Floyd-Warshall oracle.
bool oracle_exact(const Graph& g, const Graph& h, const TerminalSet& R) {
  auto a = oracle::floyd_warshall(g), b = oracle::floyd_warshall(h);
  for (VertexId x : R)
    for (VertexId y : R) {
      const auto& p = a.at({x, y});
      const auto& q = b.at({x, y});
      if (p.has_value() != q.has_value()) return false;
      if (p && p->rational() != q->rational()) return false;
    }
  return true;
}

mpq_class grid_formula(int k, int x, int y) {
  mpz_class pow2(1);
  mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<mp_bitcnt_t>(x * x));
  return mpq_class(2 * x - y) + mpq_class(x - y) / mpq_class(pow2 * k);
}

bool check_stats(const RecursionStats& st, Outcome& out, const std::string& name, std::size_t& internal) {
  const auto q = static_cast<std::size_t>(st.q);
  bool good = true;
  for (std::size_t i = 0; i < st.nodes.size(); ++i) {
    const RecursionNode& n = st.nodes[i];
    const std::string at = name + " node " + std::to_string(i);
    good &= n.boundary < 6 * q;
    out.require(n.boundary < 6 * q, at + " has |B| >= 6q");
    out.require(n.disjoint, at + " has R and B overlapping");
    if (n.terminals < q) {
      good &= n.leaf;
      out.require(n.leaf, at + " has |R| < q but is not a leaf");
    }
    if (!n.leaf) {
      ++internal;
      std::size_t big = 0;
      for (int c : n.children) big += st.nodes[static_cast<std::size_t>(c)].terminals >= q;
      good &= big >= 2;
      out.require(big >= 2, at + " has fewer than two children with |R| >= q");
    }
  }
  return good;
}

using Criterion = std::function<void(Outcome&)>;

void c1_tree_tightness(Outcome& out) {
  for (int d = 1; d <= 4; ++d) {
    Instance t = gen_complete_binary_tree(d);
    auto r = reduce_naive(t.graph, t.terminals);
    const std::size_t k = t.terminals.size();
    record_witness("cbt " + std::to_string(d), t.graph, r.witness, r.reduced);
    out.require(r.reduced.vertex_count() == 2 * k - 2, "cbt depth " + std::to_string(d) + " has " +
                                                           std::to_string(r.reduced.vertex_count()) + " vertices");
    out.require(verify_distance_preserving(t.graph, r.reduced, t.terminals).passed(), "apsp mismatch");
    out.require(oracle_exact(t.graph, r.reduced, t.terminals), "oracle mismatch");
    out.note << "k=" << k << ":" << r.reduced.vertex_count() << " ";
  }
}

void c2_exact_minima(Outcome& out) {
  struct Case {
    std::string name;
    Instance in;
    std::size_t want;
  };
  for (auto& c : std::vector<Case>{{"cbt2", gen_complete_binary_tree(2), 6}, {"star3", gen_star(3), 4}, {"path5", gen_path(5), 2}}) {
    auto m = minimize_exact(c.in.graph, c.in.terminals);
    auto naive = reduce_naive(c.in.graph, c.in.terminals);
    record_witness(c.name + " naive", c.in.graph, naive.witness, naive.reduced);
    out.require(m.exhaustive, c.name + " search not exhaustive");
    out.require(m.min_size == c.want, c.name + " minimum " + std::to_string(m.min_size));
    out.require(m.min_size <= naive.reduced.vertex_count(), c.name + " worse than naive");
    out.require(m.witness && verify_witness_replay(c.in.graph, *m.witness, *m.best).ok, c.name + " witness");
    out.note << c.name << "=" << m.min_size << " (naive " << naive.reduced.vertex_count() << ", " << m.states
             << " states) ";
  }
}

void c3_grid_formula(Outcome& out) {
  for (int k : {4, 6, 8}) {
    Instance g = gen_grid_lb(k);
    std::vector<VertexId> terms(g.terminals.begin(), g.terminals.end());
    auto d = apsp(g.graph, terms);
    std::size_t pairs = 0;
    for (int y = 0; y < k / 2; ++y)
      for (int x = k / 2; x < k; ++x) {
        const auto& got = d(grid_vertex(k, 0, y), grid_vertex(k, x, x));
        out.require(got && got->rational() == grid_formula(k, x, y),
                    "k=" + std::to_string(k) + " pair (0," + std::to_string(y) + ")-(" + std::to_string(x) + "," +
                        std::to_string(x) + ")");
        ++pairs;
      }
    auto r = reduce_naive(g.graph, g.terminals);
    record_witness("grid " + std::to_string(k), g.graph, r.witness, r.reduced);
    out.require(verify_distance_preserving(g.graph, r.reduced, g.terminals).passed(), "naive output on grid");
    out.require(oracle_exact(g.graph, r.reduced, g.terminals), "oracle on grid");
    out.note << "k=" << k << ": " << pairs << " pairs, |V'|=" << r.reduced.vertex_count() << " ";
  }
}

void c4_general_bound(Outcome& out) {
  std::size_t worst_v = 0, worst_e = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 20 + static_cast<int>((seed * 37) % 181);  // 20..200
    const int k = 2 + static_cast<int>(seed % 9);            // 2..10
    const int extra = static_cast<int>((seed * 13) % (2 * n));
    Instance in = gen_random_connected(n, extra, k, seed);
    auto r = reduce_naive(in.graph, in.terminals);
    record_witness("random " + std::to_string(seed), in.graph, r.witness, r.reduced);
    auto s = size_bound_report(in.graph, r.reduced, GraphFamily::general, in.terminals.size());
    const std::string at = "seed " + std::to_string(seed);
    out.require(s.ok, at + " " + s.detail);
    out.require(verify_distance_preserving(in.graph, r.reduced, in.terminals).passed(), at + " distances");
    out.require(verify_domination(in.graph, r.reduced, r.retained).ok, at + " domination");
    worst_v = std::max(worst_v, r.reduced.vertex_count());
    worst_e = std::max(worst_e, r.reduced.edge_count());
  }
  out.note << "50 graphs, largest |V'|=" << worst_v << " |E'|=" << worst_e << " ";
}

// Shared by criteria 5 and 6.
std::size_t tw_family_size(int k, Outcome& out, std::size_t& internal) {
  auto in = gen_tw_family(4, k);
  auto t = reduce_tw(in.graph, in.terminals, in.td);
  const std::string name = "tw family k=" + std::to_string(k);
  record_witness(name, in.graph, t.result.witness, t.result.reduced);
  check_stats(t.stats, out, name, internal);
  out.require(verify_distance_preserving(in.graph, t.result.reduced, in.terminals).passed(), name + " distances");
  out.require(verify_domination(in.graph, t.result.reduced, t.result.retained).ok, name + " domination");
  return t.result.reduced.vertex_count();
}

void c5_lemmas(Outcome& out) {
  std::size_t internal = 0, nodes = 0;
  for (int k : {32, 64}) tw_family_size(k, out, internal);
  for (int width = 1; width <= 3; ++width)
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto in = gen_random_partial_ktree(400, width, 64, 70, seed * 10 + static_cast<std::uint64_t>(width));
      auto t = reduce_tw(in.graph, in.terminals, in.td);
      const std::string name = "width " + std::to_string(width) + " seed " + std::to_string(seed);
      record_witness(name, in.graph, t.result.witness, t.result.reduced);
      check_stats(t.stats, out, name, internal);
      nodes += t.stats.nodes.size();
      out.require(verify_distance_preserving(in.graph, t.result.reduced, in.terminals).passed(), name + " distances");
      out.require(verify_domination(in.graph, t.result.reduced, t.result.retained).ok, name + " domination");
    }
  out.note << "random instances: " << nodes << " recursion nodes, " << internal << " internal; "
           << "tw family (q=5, 18q=90 > 64) stops at the root ";
  out.require(internal > 0, "no instance exercised the recursion");
}

void c6_scaling(Outcome& out) {
  std::size_t internal = 0;
  const std::size_t v32 = tw_family_size(32, out, internal);
  const std::size_t v64 = tw_family_size(64, out, internal);
  const double factor = static_cast<double>(v64) / static_cast<double>(v32);
  out.require(v64 <= 3 * v32, "growth factor above 3");
  char buf[160];
  std::snprintf(buf, sizeof buf, "|V'|(32)=%zu |V'|/k=%.3f, |V'|(64)=%zu |V'|/k=%.3f, factor %.3f ", v32, v32 / 32.0,
                v64, v64 / 64.0, factor);
  out.note << buf;
}

void c7_witness(Outcome& out) {
  out.require(g_witnesses.total > 0, "no reductions recorded");
  out.require(g_witnesses.failed == 0, g_witnesses.first);
  out.note << g_witnesses.total << " reductions replayed, " << g_witnesses.failed << " mismatches ";
}

void c8_arrangement(Outcome& out) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Arrangement a = gen_line_arrangement(8, seed);
    auto r = reduce_naive(a.instance.graph, a.instance.terminals);
    const std::string at = "seed " + std::to_string(seed);
    out.require(a.cross_vertices.size() == 16, at + " has " + std::to_string(a.cross_vertices.size()) + " crossings");
    std::size_t alive = 0;
    for (VertexId v : a.cross_vertices) alive += r.reduced.has_vertex(v);
    out.require(alive == 16, at + " keeps " + std::to_string(alive) + " crossings");
    out.require(verify_distance_preserving(a.instance.graph, r.reduced, a.instance.terminals, kRelTol).passed(),
                at + " distances");
    out.note << alive << " ";
  }
}

void c9_oracle_agreement(Outcome& out) {
  std::size_t strictly_better = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int n = 5 + static_cast<int>(seed % 5);  // 5..9
    const int k = 2 + static_cast<int>(seed % 3);
    Instance in = gen_random_connected(n, static_cast<int>(seed % 4) + 1, k, seed + 100);
    auto naive = reduce_naive(in.graph, in.terminals);
    auto m = minimize_exact(in.graph, in.terminals);
    const std::string at = "seed " + std::to_string(seed);
    out.require(m.exhaustive, at + " search not exhaustive");
    out.require(m.min_size <= naive.reduced.vertex_count(), at + " minimum above naive");
    out.require(m.witness.has_value(), at + " no witness");
    if (!m.witness) continue;
    Graph replayed = replay_witness(in.graph, *m.witness);
    out.require(replayed.vertex_count() == m.min_size, at + " witness size");
    out.require(verify_distance_preserving(in.graph, replayed, in.terminals).passed(), at + " witness distances");
    strictly_better += m.min_size < naive.reduced.vertex_count();
  }
  out.note << "25 graphs, minimum below naive on " << strictly_better << " ";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"1 tree tightness", c1_tree_tightness},
      {"2 exact minima", c2_exact_minima},
      {"3 grid distance formula", c3_grid_formula},
      {"4 general size bound", c4_general_bound},
      {"5 recursion invariants", c5_lemmas},
      {"6 linear scaling in k", c6_scaling},
      {"7 witness soundness", c7_witness},
      {"8 line arrangement", c8_arrangement},
      {"9 oracle agreement", c9_oracle_agreement},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char tbuf[32];
    std::snprintf(tbuf, sizeof tbuf, "%.2fs", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << name << " [" << tbuf << "] " << out.note.str() << "\n"
              << std::flush;
    failed += !out.ok;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
