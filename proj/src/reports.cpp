#include "gsprep/reports.hpp"

#include <algorithm>
#include <sstream>

#include "gsprep/errors.hpp"
#include "gsprep/families.hpp"
#include "gsprep/orbit.hpp"

namespace gsprep {

std::string run_bench(const BenchConfig& cfg) {
  if (cfg.samples < 1) throw InputError("bench: need at least one sample");
  if (cfg.strategies.empty()) throw InputError("bench: need at least one strategy");
  struct Row {
    uint64_t seed;
    int n;
    std::string strategy;
    ResourceSummary s;
  };
  std::vector<Row> rows(static_cast<size_t>(cfg.samples) * cfg.strategies.size());
  std::string first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < cfg.samples; ++i) {
    uint64_t seed = cfg.base_seed + static_cast<uint64_t>(i);
    try {
      Graph g = cfg.generator == BenchConfig::Generator::DistanceHereditary
                    ? random_dh(cfg.n, seed)
                    : random_er_connected(cfg.n, cfg.p, seed);
      for (size_t s = 0; s < cfg.strategies.size(); ++s) {
        PreparationPlan plan = make_plan(g, cfg.strategies[s]);
        rows[i * cfg.strategies.size() + s] = {seed, cfg.n, strategy_name(cfg.strategies[s]),
                                               plan.summary};
      }
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (first_error.empty()) {
        first_error = "bench: sample " + std::to_string(i) + ": " + e.what();
      }
    }
  }
  if (!first_error.empty()) throw InputError(first_error);
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.seed, a.strategy) < std::tie(b.seed, b.strategy);
  });
  std::ostringstream os;
  os << "seed,n,strategy,cz,depth,qubits,aux\n";
  for (const auto& r : rows) {
    os << r.seed << "," << r.n << "," << r.strategy << "," << r.s.cz_total << ","
       << r.s.time_steps << "," << r.s.qubits_total << "," << r.s.qubits_aux << "\n";
  }
  return os.str();
}

std::string table_report_bipartite(int max_vertices) {
  std::ostringstream os;
  os << "vertices,n,m,orbit_size,min_edges,min_max_degree\n";
  for (int total = 4; total <= max_vertices; ++total) {
    for (int n = total - 2; n >= 2; --n) {
      int m = total - n;
      if (m > n) break;
      os << total << "," << n << "," << m << "," << orbit_size_bipartite(n, m) << ","
         << (n + m - 1) << "," << std::max(n, m) << "\n";
    }
  }
  return os.str();
}

namespace {
// Part lists with k >= 3 entries >= 2 summing to n, lexicographically
// descending (largest first within each list and across lists).
void partitions_desc(int n, int max_part, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (acc.size() >= 3) out.push_back(acc);
    return;
  }
  for (int p = std::min(n, max_part); p >= 2; --p) {
    if (n - p == 1) continue;  // cannot finish with a part of size 1
    acc.push_back(p);
    partitions_desc(n - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::string table_report_families(int max_vertices) {
  std::ostringstream os;
  os << "vertices,k,parts,cm_orbit,cm_min_edges,cm_min_maxdeg_plus1,"
        "cs_orbit,cs_min_edges,cs_min_maxdeg_plus1,sf_cz,sf_depth,sf_qubits,sf_aux\n";
  for (int total = 6; total <= max_vertices; ++total) {
    std::vector<std::vector<int>> lists;
    std::vector<int> acc;
    partitions_desc(total, total, acc, lists);
    std::sort(lists.begin(), lists.end(), std::greater<>());
    for (const auto& parts : lists) {
      int k = static_cast<int>(parts.size());
      std::ostringstream ps;
      for (size_t i = 0; i < parts.size(); ++i) ps << (i ? " " : "") << parts[i];
      auto cm = select_min_edges(OrbitFamily::Multipartite, parts);
      auto cs = select_min_edges(OrbitFamily::CliqueStar, parts);
      // split-fuse on the family QASST: k+1 quotients, largest star has
      // max(parts)+1 qubits, the hub quotient has k split nodes.
      int quotients = k + 1;
      int sf_cz = total + 2 * quotients - 3;
      int sf_depth = 1 + std::max(k, *std::max_element(parts.begin(), parts.end()) + 1);
      int sf_qubits = total + 2 * quotients - 2;
      os << total << "," << k << "," << ps.str() << "," << orbit_size_multipartite(parts) << ",";
      if (cm.known)
        os << cm.value;
      else
        os << "?";
      os << "," << (min_degree_formula(OrbitFamily::Multipartite, parts) + 1) << ","
         << orbit_size_cliquestar(parts) << ",";
      if (cs.known)
        os << cs.value;
      else
        os << "?";
      os << "," << (min_degree_formula(OrbitFamily::CliqueStar, parts) + 1) << "," << sf_cz << ","
         << sf_depth << "," << sf_qubits << "," << (2 * quotients - 2) << "\n";
    }
  }
  return os.str();
}

std::string compare_csv(const Graph& g) {
  std::ostringstream os;
  os << "strategy,cz,depth,qubits,aux\n";
  for (const auto& row : compare_strategies(g)) {
    os << row.strategy << "," << row.summary.cz_total << "," << row.summary.time_steps << ","
       << row.summary.qubits_total << "," << row.summary.qubits_aux << "\n";
  }
  return os.str();
}

}  // namespace gsprep
