#pragma once

#include <cstdint>
#include <vector>

#include "dpm/graph.hpp"
#include "dpm/naive_reduce.hpp"
#include "dpm/tree_decomposition.hpp"

namespace dpm {

struct Instance {
  Graph graph;
  TerminalSet terminals;
};

struct InstanceWithTd {
  Graph graph;
  TerminalSet terminals;
  TreeDecomposition td;
};

/// Path 1 - 2 - ... - (n+1) with every edge of length `len`; endpoints are terminals.
Instance gen_path(int n, const Length& len = Length::exact(1));

/// Heap-numbered complete binary tree (children of i are 2i, 2i+1) with unit
/// lengths; the 2^depth leaves are terminals.
Instance gen_complete_binary_tree(int depth);

/// Star K_{1,leaves} with unit lengths; centre is vertex 1, leaves are terminals.
Instance gen_star(int leaves);

inline constexpr int kGridDefaultMaxK = 16;

/// Vertex id of grid point (x, y) in gen_grid_lb(k).
inline VertexId grid_vertex(int k, int x, int y) { return 1 + static_cast<VertexId>(y) * k + x; }

/// k x k grid: horizontal edges have length 1, the vertical edges in column x
/// have length 1 + 1/(2^(x^2) k). Terminals are (0, y) for y < k/2 and (x, x)
/// for x >= k/2. k must be even, at least 4, and at most `max_k`.
Instance gen_grid_lb(int k, int max_k = kGridDefaultMaxK);

/// Exact distance d((0,y), (x,x)) in gen_grid_lb(k): 2x - y + (x - y)/(2^(x^2) k).
mpq_class grid_lb_distance(int k, int x, int y);

/// k/p disjoint copies of gen_grid_lb(p) plus a width-p decomposition made of
/// sliding windows of p+1 consecutive vertices per block, blocks chained.
InstanceWithTd gen_tw_family(int p, int k, int max_p = kGridDefaultMaxK);

struct Arrangement {
  Instance instance;
  int per_side = 0;
  std::vector<VertexId> cross_vertices;  // one per top-bottom x left-right segment pair
  /// Vertex sequence of every segment, endpoint terminals first and last.
  std::vector<std::vector<VertexId>> segments;
  std::vector<std::pair<double, double>> coordinates;  // indexed by vertex id - 1
  std::uint64_t seed_used = 0;
};

/// Unit square with floor(k/4) random terminals per side (rational
/// coordinates with denominator 2^20), every top-bottom and left-right
/// terminal pair joined by a straight segment, and every segment crossing
/// made a vertex. Lengths are Euclidean (approximate mode). Draws whose
/// segments meet three at a point are redrawn from a derived seed.
Arrangement gen_line_arrangement(int k, std::uint64_t seed);

/// Random connected graph: a random spanning tree plus `extra_edges` random
/// chords, lengths a/b with a in [1, 20], b in [1, 4], `k` random terminals.
Instance gen_random_connected(int n, int extra_edges, int k, std::uint64_t seed);

/// Random partial `width`-tree on n vertices (edges of the underlying k-tree
/// kept with probability keep_percent/100, connectivity preserved), random
/// rational lengths, `k` random terminals, and the construction's
/// decomposition of width `width`.
InstanceWithTd gen_random_partial_ktree(int n, int width, int k, int keep_percent, std::uint64_t seed);

/// Random recursive tree on n vertices with random rational lengths; `k`
/// randomly chosen leaves are terminals (throws if the tree has fewer).
Instance gen_random_tree(int n, int k, std::uint64_t seed);

}  // namespace dpm
