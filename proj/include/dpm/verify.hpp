#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpm/graph.hpp"
#include "dpm/naive_reduce.hpp"

namespace dpm {

inline constexpr double kDefaultRelTol = 1e-9;

struct PairVerdict {
  VertexId a = 0;
  VertexId b = 0;
  std::optional<Length> original;  // absent = disconnected
  std::optional<Length> reduced;
  bool ok = true;
};

struct DominationVerdict {
  bool ok = true;
  std::optional<std::pair<VertexId, VertexId>> violation;
  std::optional<Length> original;
  std::optional<Length> reduced;
};

struct WitnessVerdict {
  bool ok = true;
  std::string message;
  std::optional<std::size_t> failed_op;
};

enum class GraphFamily { tree, treewidth, general };

struct SizeReport {
  GraphFamily family = GraphFamily::general;
  std::size_t k = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::optional<std::size_t> vertex_bound;
  std::optional<std::size_t> edge_bound;
  double ratio = 0.0;  // |V'| / (q^3 k) for the treewidth family
  bool ok = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<PairVerdict> pairs;
  std::optional<DominationVerdict> domination;
  std::optional<WitnessVerdict> witness;
  std::optional<SizeReport> size;

  bool distances_ok() const;
  bool passed() const;
};

/// Compares every terminal pair: exact equality in exact mode, relative
/// tolerance `rel_tol` otherwise. Throws GraphError if a terminal is missing
/// from the reduced graph.
VerificationReport verify_distance_preserving(const Graph& g, const Graph& reduced, const TerminalSet& R,
                                              double rel_tol = kDefaultRelTol);

/// d_reduced(x, y) >= d_g(map[x], map[y]) for every pair of reduced vertices.
/// Throws GraphError if the map is not injective or leaves a vertex unmapped.
DominationVerdict verify_domination(const Graph& g, const Graph& reduced, const std::map<VertexId, VertexId>& vertex_map,
                                    double rel_tol = kDefaultRelTol);

WitnessVerdict verify_witness_replay(const Graph& g, const Witness& w, const Graph& reduced);

/// Trees: |V'| <= 2k - 2 and every surviving non-terminal has degree >= 3.
/// General: |V'| <= k + k^4 and |E'| <= k^4 + k^2. Treewidth: records
/// |V'| / (q^3 k) only.
SizeReport size_bound_report(const Graph& g, const Graph& reduced, GraphFamily family, std::size_t k, int q = 0);

const char* to_string(GraphFamily family);

/// Multi-line human readable rendering, ending with a one-line summary.
std::string format_report(const VerificationReport& report);

}  // namespace dpm
