#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dpm/graph.hpp"

namespace dpm {

struct TreeDecomposition {
  std::vector<std::vector<VertexId>> bags;  // each sorted ascending
  std::vector<std::pair<int, int>> tree_edges;

  /// Max bag size - 1 (-1 without bags).
  int width() const;
  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Min-fill elimination ordering (ties: min degree, then smallest id).
/// Bags contained in a neighbouring bag are merged away.
TreeDecomposition heuristic_tree_decomposition(const Graph& g);

struct TdVerdict {
  bool ok = true;
  std::string reason;
  std::optional<VertexId> vertex;
  std::optional<std::pair<VertexId, VertexId>> edge;
};

/// Checks the tree shape and the three decomposition axioms; reports the
/// first violation found.
TdVerdict validate_td(const Graph& g, const TreeDecomposition& td);

/// Intersects every bag with `keep`. The tree is unchanged, so the result is a
/// valid decomposition of the induced subgraph with no larger width.
TreeDecomposition restrict_td(const TreeDecomposition& td, const std::set<VertexId>& keep);

struct SeparatorTriple {
  std::set<VertexId> a1;
  std::set<VertexId> s;
  std::set<VertexId> a2;
};

/// Picks the bag minimising the heaviest U-weight left in any branch of the
/// decomposition tree (each branch then holds at most |U|/2), removes it, and
/// packs the components of the remainder into two sides by descending
/// U-weight, each component going to the currently lighter side. Every side
/// then carries at most 2|U|/3 of U, and no edge joins a1 to a2.
SeparatorTriple balanced_separator(const Graph& h, const TreeDecomposition& td, const std::set<VertexId>& U);

}  // namespace dpm
