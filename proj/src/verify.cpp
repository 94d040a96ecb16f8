#include "dpm/verify.hpp"

#include <set>
#include <sstream>

#include "dpm/shortest_paths.hpp"

namespace dpm {

namespace {

bool same_distance(const std::optional<Length>& a, const std::optional<Length>& b, double rel_tol) {
  if (!a || !b) return !a && !b;
  return approximately_equal(*a, *b, rel_tol);
}

std::string show(const std::optional<Length>& d) { return d ? d->str() : std::string("inf"); }

}  // namespace

bool VerificationReport::distances_ok() const {
  for (const auto& p : pairs)
    if (!p.ok) return false;
  return true;
}

bool VerificationReport::passed() const {
  return distances_ok() && (!domination || domination->ok) && (!witness || witness->ok) && (!size || size->ok);
}

VerificationReport verify_distance_preserving(const Graph& g, const Graph& reduced, const TerminalSet& R,
                                              double rel_tol) {
  std::vector<VertexId> terms(R.begin(), R.end());
  for (VertexId r : terms) {
    if (!g.has_vertex(r)) throw GraphError("terminal " + std::to_string(r) + " missing from the original graph");
    if (!reduced.has_vertex(r)) throw GraphError("terminal " + std::to_string(r) + " missing from the reduced graph");
  }
  const DistanceMatrix d0 = apsp(g, terms);
  const DistanceMatrix d1 = apsp(reduced, terms);
  VerificationReport report;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      PairVerdict p{terms[i], terms[j], d0.at(i, j), d1.at(i, j), true};
      p.ok = same_distance(p.original, p.reduced, rel_tol);
      report.pairs.push_back(std::move(p));
    }
  return report;
}

DominationVerdict verify_domination(const Graph& g, const Graph& reduced, const std::map<VertexId, VertexId>& vertex_map,
                                    double rel_tol) {
  std::vector<VertexId> mine = reduced.vertices();
  std::vector<VertexId> theirs;
  std::set<VertexId> images;
  for (VertexId v : mine) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) throw GraphError("vertex " + std::to_string(v) + " has no original");
    if (!g.has_vertex(it->second)) throw GraphError("vertex map target " + std::to_string(it->second) + " not in graph");
    if (!images.insert(it->second).second) throw GraphError("vertex map is not injective");
    theirs.push_back(it->second);
  }
  const DistanceMatrix d0 = apsp(g, theirs);
  const DistanceMatrix d1 = apsp(reduced, mine);
  for (std::size_t i = 0; i < mine.size(); ++i)
    for (std::size_t j = i + 1; j < mine.size(); ++j) {
      const auto& a = d0.at(i, j);
      const auto& b = d1.at(i, j);
      bool ok;
      if (!b)
        ok = true;
      else if (!a)
        ok = false;  // a minor cannot connect what was disconnected
      else if (a->is_exact())
        ok = *b >= *a;
      else
        ok = *b >= *a || approximately_equal(*a, *b, rel_tol);
      if (!ok) return {false, std::pair{mine[i], mine[j]}, a, b};
    }
  return {};
}

WitnessVerdict verify_witness_replay(const Graph& g, const Witness& w, const Graph& reduced) {
  try {
    Graph replayed = replay_witness(g, w);
    if (replayed == reduced) return {};
    std::string why = "replayed graph differs from the reduced graph";
    if (replayed.vertices() != reduced.vertices())
      why += " (vertex sets differ)";
    else if (replayed.edge_count() != reduced.edge_count())
      why += " (edge counts " + std::to_string(replayed.edge_count()) + " vs " + std::to_string(reduced.edge_count()) + ")";
    return {false, why, std::nullopt};
  } catch (const ReplayError& e) {
    return {false, e.what(), e.op_index()};
  } catch (const GraphError& e) {
    return {false, e.what(), std::nullopt};
  }
}

const char* to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::tree:
      return "tree";
    case GraphFamily::treewidth:
      return "treewidth";
    case GraphFamily::general:
      return "general";
  }
  return "?";
}

SizeReport size_bound_report(const Graph& g, const Graph& reduced, GraphFamily family, std::size_t k, int q) {
  (void)g;
  SizeReport r;
  r.family = family;
  r.k = k;
  r.vertices = reduced.vertex_count();
  r.edges = reduced.edge_count();
  std::ostringstream detail;
  switch (family) {
    case GraphFamily::tree: {
      r.vertex_bound = k <= 1 ? k : 2 * k - 2;
      r.ok = r.vertices <= *r.vertex_bound;
      for (VertexId v : reduced.vertices())
        if (!reduced.is_terminal(v) && reduced.degree(v) < 3) {
          r.ok = false;
          detail << "non-terminal " << v << " has degree " << reduced.degree(v) << "; ";
        }
      detail << "|V'|=" << r.vertices << " <= 2k-2=" << *r.vertex_bound;
      break;
    }
    case GraphFamily::general: {
      const std::size_t k4 = k * k * k * k;
      r.vertex_bound = k + k4;
      r.edge_bound = k4 + k * k;
      r.ok = r.vertices <= *r.vertex_bound && r.edges <= *r.edge_bound;
      detail << "|V'|=" << r.vertices << " <= k+k^4=" << *r.vertex_bound << ", |E'|=" << r.edges
             << " <= k^4+k^2=" << *r.edge_bound;
      break;
    }
    case GraphFamily::treewidth: {
      const double qq = static_cast<double>(q);
      r.ratio = (k == 0 || q <= 0) ? 0.0 : static_cast<double>(r.vertices) / (qq * qq * qq * static_cast<double>(k));
      detail << "|V'|=" << r.vertices << ", |V'|/(q^3 k)=" << r.ratio << " (q=" << q << ")";
      break;
    }
  }
  r.detail = detail.str();
  return r;
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream os;
  std::size_t bad = 0;
  for (const auto& p : report.pairs)
    if (!p.ok) {
      ++bad;
      os << "violated " << p.a << " " << p.b << " original=" << show(p.original) << " reduced=" << show(p.reduced)
         << "\n";
    }
  os << "pairs " << report.pairs.size() << " violated " << bad << "\n";
  if (report.domination) {
    if (report.domination->ok)
      os << "domination ok\n";
    else if (report.domination->violation)
      os << "domination violated " << report.domination->violation->first << " " << report.domination->violation->second
         << " original=" << show(report.domination->original) << " reduced=" << show(report.domination->reduced) << "\n";
    else
      os << "domination failed\n";
  }
  if (report.witness) os << "witness " << (report.witness->ok ? "ok" : "failed: " + report.witness->message) << "\n";
  if (report.size) os << "size " << to_string(report.size->family) << " " << (report.size->ok ? "ok " : "failed ") << report.size->detail << "\n";
  os << "result " << (report.passed() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace dpm
