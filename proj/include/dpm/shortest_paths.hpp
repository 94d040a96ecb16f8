#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dpm/graph.hpp"

namespace dpm {

/// Tie-breaking key of a path: the exact binary fraction sum_{e in P} 2^-index(e),
/// stored as a bitset over edge indices. Because a simple path uses each edge
/// once, adding an edge never carries, and the order on keys is the order on
/// bitsets read as binary expansions (the lowest differing index decides).
class PerturbationKey {
 public:
  PerturbationKey() = default;
  explicit PerturbationKey(EdgeIndex max_index) : words_(static_cast<std::size_t>(max_index / 64 + 1), 0) {}

  void insert(EdgeIndex i) { words_[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64); }
  bool contains(EdgeIndex i) const {
    auto w = static_cast<std::size_t>(i / 64);
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1u);
  }
  std::vector<EdgeIndex> indices() const;

  friend std::strong_ordering operator<=>(const PerturbationKey& a, const PerturbationKey& b);
  friend bool operator==(const PerturbationKey& a, const PerturbationKey& b) { return a.words_ == b.words_; }

 private:
  std::vector<std::uint64_t> words_;
};

/// Dense, read-only adjacency snapshot of a Graph used by the kernels.
class IndexedGraph {
 public:
  explicit IndexedGraph(const Graph& g);

  struct Arc {
    int to;
    int edge;
  };

  int size() const { return static_cast<int>(ids_.size()); }
  VertexId id(int pos) const { return ids_[static_cast<std::size_t>(pos)]; }
  /// -1 when absent.
  int position(VertexId v) const;
  std::span<const Arc> arcs(int pos) const {
    return {arcs_.data() + offsets_[static_cast<std::size_t>(pos)],
            arcs_.data() + offsets_[static_cast<std::size_t>(pos) + 1]};
  }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  LengthMode mode() const { return mode_; }
  EdgeIndex max_edge_index() const { return max_index_; }

 private:
  LengthMode mode_;
  std::vector<VertexId> ids_;
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
  std::vector<Edge> edges_;
  EdgeIndex max_index_ = 0;
};

/// Canonical shortest-path tree from one source: for every reachable vertex
/// the unique path minimising (length, perturbation key).
struct CanonicalTree {
  int source = -1;
  std::vector<std::optional<Length>> dist;
  std::vector<PerturbationKey> key;
  std::vector<int> parent;       // -1 for the source and unreachable vertices
  std::vector<int> parent_edge;  // slot in IndexedGraph
};

CanonicalTree canonical_tree(const IndexedGraph& g, int source);
std::vector<CanonicalTree> canonical_trees(const IndexedGraph& g, std::span<const int> sources);
std::vector<CanonicalTree> canonical_trees_serial(const IndexedGraph& g, std::span<const int> sources);

struct PathResult {
  Length total;
  std::vector<VertexId> vertices;  // from u to v
  std::vector<EdgeIndex> edges;    // ascending index
  PerturbationKey key;
};

/// Absent when u and v are disconnected; throws GraphError on unknown vertices.
std::optional<PathResult> canonical_shortest_path(const Graph& g, VertexId u, VertexId v);

/// Symmetric matrix over an ordered vertex list; absent entries mark
/// disconnected pairs.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::vector<VertexId> vertices, std::vector<std::optional<Length>> entries);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const std::optional<Length>& at(std::size_t i, std::size_t j) const { return entries_[i * vertices_.size() + j]; }
  /// Lookup by vertex id; throws GraphError if either id is not in the list.
  const std::optional<Length>& operator()(VertexId a, VertexId b) const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index_of(VertexId v) const;
  std::vector<VertexId> vertices_;
  std::vector<std::optional<Length>> entries_;
};

/// Single-source distances (no tie-breaking), indexed by IndexedGraph position.
std::vector<std::optional<Length>> single_source_distances(const IndexedGraph& g, int source);

/// Distances between every pair of `sources`, in the order given.
/// The OpenMP kernel fans out over sources; results are written by source
/// position, so the output is independent of scheduling.
DistanceMatrix apsp(const Graph& g, const std::vector<VertexId>& sources);
DistanceMatrix apsp_serial(const Graph& g, const std::vector<VertexId>& sources);

}  // namespace dpm
