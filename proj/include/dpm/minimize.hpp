#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

#include "dpm/graph.hpp"
#include "dpm/naive_reduce.hpp"

namespace dpm {

struct SearchBudget {
  std::size_t max_states = 2'000'000;
  std::size_t max_vertices = 10;
  std::chrono::milliseconds time_limit{120'000};
};

struct MinimizeResult {
  std::size_t min_size = 0;  // smallest |V| found
  std::optional<Witness> witness;
  std::optional<Graph> best;
  bool exhaustive = false;  // false: min_size is only an upper bound
  std::size_t states = 0;
};

/// Breadth-first search over vertex deletions and edge contractions, keeping
/// only graphs that preserve every terminal distance. Each operation removes
/// one vertex, so the deepest non-empty level gives the minimum.
///
/// Throws GraphError for approximate lengths, more than `max_vertices`
/// vertices, or flagged terminals outside R.
MinimizeResult minimize_exact(const Graph& g, const TerminalSet& R, const SearchBudget& budget = {});

/// Isomorphism-invariant text encoding with the vertices of R pinned to their
/// ids. Equal encodings imply the graphs agree up to renaming vertices
/// outside R.
std::string canonical_encoding(const Graph& g, const TerminalSet& R);

}  // namespace dpm
