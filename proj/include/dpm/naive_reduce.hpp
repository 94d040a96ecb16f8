#pragma once

#include <map>
#include <set>

#include "dpm/graph.hpp"

namespace dpm {

using TerminalSet = std::set<VertexId>;

struct ReductionResult {
  Graph reduced;
  Witness witness;  // replays the input into `reduced`
  /// Reduced vertex id -> originating vertex id. Minor operations keep the
  /// survivor's id, so this is the identity on the surviving vertices.
  std::map<VertexId, VertexId> retained;
};

/// Keeps R and exactly the vertices and edges on canonical shortest paths
/// between pairs of R. Vertices flagged terminal in `g` must belong to R.
ReductionResult restrict_to_shortest_paths(const Graph& g, const TerminalSet& R);

/// Repeatedly contracts the smallest-id vertex outside R of degree exactly 2
/// into its smaller-id neighbour. The re-attached edge carries the length of
/// the 2-path and is min-merged with any existing parallel edge.
ReductionResult contract_degree2(const Graph& g, const TerminalSet& R);

/// restrict_to_shortest_paths followed by contract_degree2.
ReductionResult reduce_naive(const Graph& g, const TerminalSet& R);
inline ReductionResult reduce_naive(const Graph& g) {
  auto t = g.terminals();
  return reduce_naive(g, TerminalSet(t.begin(), t.end()));
}

}  // namespace dpm
