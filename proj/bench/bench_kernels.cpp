// Serial vs OpenMP timings for the all-pairs distance and canonical-tree kernels.
//
// usage: bench_kernels [n] [reps]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <omp.h>

#include "dpm/generators.hpp"
#include "dpm/shortest_paths.hpp"

using namespace dpm;
using Clock = std::chrono::steady_clock;

template <typename F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  return best;
}

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 800;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  const int k = std::min(n, 64);

  Instance in = gen_random_connected(n, 2 * n, k, 2024);
  std::vector<VertexId> terms(in.terminals.begin(), in.terminals.end());
  IndexedGraph ig(in.graph);
  std::vector<int> sources;
  for (VertexId r : terms) sources.push_back(ig.position(r));

  std::cout << "graph: " << in.graph.vertex_count() << " vertices, " << in.graph.edge_count() << " edges, " << k
            << " sources, " << omp_get_max_threads() << " threads\n";

  DistanceMatrix a, b;
  double apsp_ser = best_ms(reps, [&] { a = apsp_serial(in.graph, terms); });
  double apsp_par = best_ms(reps, [&] { b = apsp(in.graph, terms); });
  std::vector<CanonicalTree> ts, tp;
  double tree_ser = best_ms(reps, [&] { ts = canonical_trees_serial(ig, sources); });
  double tree_par = best_ms(reps, [&] { tp = canonical_trees(ig, sources); });

  bool same = a == b && ts.size() == tp.size();
  for (std::size_t i = 0; same && i < ts.size(); ++i) same = ts[i].parent == tp[i].parent && ts[i].dist == tp[i].dist;

  std::cout << std::fixed << std::setprecision(2);
  std::cout << "kernel            serial ms   parallel ms   speedup\n";
  std::cout << "apsp            " << std::setw(11) << apsp_ser << std::setw(14) << apsp_par << std::setw(10)
            << apsp_ser / apsp_par << "\n";
  std::cout << "canonical_trees " << std::setw(11) << tree_ser << std::setw(14) << tree_par << std::setw(10)
            << tree_ser / tree_par << "\n";
  std::cout << "results " << (same ? "identical" : "DIFFER") << "\n";
  return same ? 0 : 1;
}
