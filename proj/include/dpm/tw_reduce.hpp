#pragma once

#include <cstddef>
#include <vector>

#include "dpm/naive_reduce.hpp"
#include "dpm/tree_decomposition.hpp"

namespace dpm {

/// Measurements of one balanced split inside a recursion node.
struct SplitRecord {
  std::size_t weight_set = 0;  // |U|
  std::size_t separator = 0;   // |S|
  std::size_t side1_weight = 0;
  std::size_t side2_weight = 0;
  bool no_cross_edges = true;
};

struct RecursionNode {
  std::size_t terminals = 0;  // |R_a|
  std::size_t boundary = 0;   // |B_a|
  std::size_t required = 0;   // |R_a u B_a|
  std::size_t vertices = 0;   // |V(H_a)|
  bool disjoint = true;       // R_a and B_a do not meet
  int depth = 0;
  bool leaf = false;
  std::vector<int> children;
  std::vector<SplitRecord> splits;  // first split, then one per side
};

/// Recursion tree in pre-order; node 0 is the root.
struct RecursionStats {
  int q = 0;
  std::vector<RecursionNode> nodes;
};

struct TwReduction {
  ReductionResult result;
  RecursionStats stats;
  /// The union of the leaf minors as combined by the recursion. `result.reduced`
  /// is the replay of the composed witness and agrees with it on vertices,
  /// flags, edges and lengths.
  Graph combined;
};

/// Separator-driven divide and conquer over `td`. With q = width + 1 (or
/// `q_override` when larger), a node stops and runs reduce_naive on
/// R u B once |R u B| <= 18q.
TwReduction reduce_tw(const Graph& g, const TerminalSet& R, const TreeDecomposition& td, int q_override = 0);

}  // namespace dpm
