// Timing comparison between the serial reference orbit enumeration and the
// OpenMP frontier expansion; both must agree on every orbit they visit.

#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gsprep/families.hpp"
#include "gsprep/orbit.hpp"

using namespace gsprep;

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

void run_case(const std::string& label, const Graph& g, size_t limit) {
  double t0 = now();
  OrbitEnumeration serial = enumerate_orbit_serial(g, limit);
  double t1 = now();
  OrbitEnumeration parallel = enumerate_orbit(g, limit);
  double t2 = now();
  bool same = serial.size() == parallel.size();
  for (size_t i = 0; same && i < serial.size(); ++i) {
    same = serial.members[i].g == parallel.members[i].g;
  }
  std::printf("%-28s orbit=%8zu  serial=%8.3fs  parallel=%8.3fs  speedup=%5.2fx  %s\n",
              label.c_str(), serial.size(), t1 - t0, t2 - t1,
              (t2 - t1) > 0 ? (t1 - t0) / (t2 - t1) : 0.0, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  size_t limit = 2000000;
  if (argc > 1) limit = std::stoull(argv[1]);
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  run_case("K_{4,4}", build(FamilySpec::bipartite(4, 4)), limit);
  run_case("K_{2,2,2,2}", build(FamilySpec::multipartite({2, 2, 2, 2})), limit);
  run_case("random connected n=10", random_er_connected(10, 0.5, 42), limit);
  run_case("random connected n=11", random_er_connected(11, 0.5, 7), limit);
  run_case("random connected n=12", random_er_connected(12, 0.45, 19), limit);
  return 0;
}
