#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsprep/planner.hpp"

namespace gsprep {

/// Batch benchmark over seeded random graphs. Sample i uses seed
/// base_seed + i; strategies run on the same sample.
struct BenchConfig {
  enum class Generator { DistanceHereditary, ErdosRenyi };
  Generator generator = Generator::DistanceHereditary;
  int n = 10;
  double p = 0.5;  // Erdos-Renyi only
  int samples = 1;
  std::vector<Strategy> strategies;
  uint64_t base_seed = 1;
};

/// CSV with header seed,n,strategy,cz,depth,qubits,aux; one row per
/// (sample, strategy), sorted by (seed, strategy). Samples run in a worker
/// pool; the sort keeps the bytes independent of thread count.
std::string run_bench(const BenchConfig& cfg);

/// CSV of the complete-bipartite reference table: one row per (n, m) with
/// n >= m >= 2 and n + m <= max_vertices, giving the closed-form orbit size
/// and minima.
std::string table_report_bipartite(int max_vertices);

/// CSV of the multipartite / clique-star reference table: one row per part
/// list with k >= 3 parts, all >= 2, summing to at most max_vertices, in
/// lexicographically descending order. Minimum-edge cells come from the
/// validated case selection and are "?" when the applicable case is not
/// known at that size.
std::string table_report_families(int max_vertices);

std::string compare_csv(const Graph& g);

}  // namespace gsprep
