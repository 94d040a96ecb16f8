#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpm/length.hpp"

namespace dpm {

using VertexId = std::int64_t;
using EdgeIndex = std::int64_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  Length length;
  EdgeIndex index = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeSpec {
  VertexId u = 0;
  VertexId v = 0;
  Length length;
};

struct MinorOp {
  enum class Kind { delete_vertex, delete_edge, contract_edge };

  Kind kind = Kind::delete_vertex;
  VertexId u = 0;
  VertexId v = 0;
  VertexId survivor = 0;

  static MinorOp delete_vertex(VertexId v) { return {Kind::delete_vertex, v, 0, 0}; }
  static MinorOp delete_edge(VertexId a, VertexId b) { return {Kind::delete_edge, a, b, 0}; }
  static MinorOp contract_edge(VertexId a, VertexId b, VertexId keep) { return {Kind::contract_edge, a, b, keep}; }

  /// One witness line: "dv v", "de u v" or "ce u v survivor".
  std::string str() const;

  friend bool operator==(const MinorOp&, const MinorOp&) = default;
};

struct Witness {
  std::uint64_t fingerprint = 0;
  std::vector<MinorOp> ops;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Simple undirected graph with terminal flags and stable edge indices.
///
/// Parallel edges are collapsed on insertion: the merged edge takes the
/// minimum length and the smaller index. Self-loops are rejected.
class Graph {
 public:
  explicit Graph(LengthMode mode = LengthMode::exact) : mode_(mode) {}

  LengthMode mode() const { return mode_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool is_terminal(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  const std::set<VertexId>& neighbors(VertexId v) const;

  /// Sorted ascending.
  std::vector<VertexId> vertices() const;
  std::vector<VertexId> terminals() const;
  /// Sorted by edge index.
  std::vector<Edge> edges() const;

  bool has_edge(VertexId a, VertexId b) const { return find_edge(a, b) != nullptr; }
  std::optional<Edge> edge(VertexId a, VertexId b) const;
  EdgeIndex max_edge_index() const;

  void add_vertex(VertexId v, bool terminal = false);
  void set_terminal(VertexId v, bool terminal);
  /// Inserts or min-merges the edge {a, b}.
  void add_edge(VertexId a, VertexId b, const Length& length, EdgeIndex index);
  void remove_edge(VertexId a, VertexId b);

  /// Applies a minor operation in place. Throws GraphError if a precondition
  /// fails; the graph is unchanged in that case.
  ///
  /// Contraction of {u, v} into the survivor s re-attaches every other edge
  /// (o, w) of the absorbed endpoint o as (s, w) with length
  /// l(o, w) + l(u, v), so each new edge is realised by a walk of the same
  /// length in the graph before the operation.
  void apply(const MinorOp& op);

  Graph induced_subgraph(const std::set<VertexId>& keep) const;

  /// FNV-1a hash of the canonical text form (mode, vertices, flags, edges).
  std::uint64_t fingerprint() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct EdgeData {
    Length length;
    EdgeIndex index = 0;
    friend bool operator==(const EdgeData&, const EdgeData&) = default;
  };
  using Key = std::pair<VertexId, VertexId>;
  static Key key(VertexId a, VertexId b) { return a < b ? Key{a, b} : Key{b, a}; }
  const EdgeData* find_edge(VertexId a, VertexId b) const;
  void check_vertex(VertexId v) const;

  LengthMode mode_;
  std::map<VertexId, bool> vertices_;
  std::map<VertexId, std::set<VertexId>> adjacency_;
  std::map<Key, EdgeData> edges_;
};

/// Vertices are 1..n; edge indices are assigned 1, 2, ... in input order.
/// The length mode is taken from `mode`; every edge length must match it.
Graph build_graph(VertexId n, const std::vector<VertexId>& terminals, const std::vector<EdgeSpec>& edges,
                  LengthMode mode = LengthMode::exact);

Graph apply_minor_op(const Graph& g, const MinorOp& op);

class ReplayError : public GraphError {
 public:
  ReplayError(std::size_t op_index, const std::string& what)
      : GraphError("witness op " + std::to_string(op_index) + ": " + what), op_index_(op_index) {}
  std::size_t op_index() const { return op_index_; }

 private:
  std::size_t op_index_;
};

Graph replay_witness(const Graph& g, const Witness& w);

/// Vertex and edge union; shared edges take the minimum length (and the
/// smaller index). Throws GraphError on terminal-flag or mode conflicts.
Graph union_graphs(const Graph& a, const Graph& b);

}  // namespace dpm
