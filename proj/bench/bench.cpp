// Benchmark: serial vs parallel conjugacy-orbit enumeration. The parallel
// worker count follows KGT_THREADS (0 = hardware default).
#include <chrono>
#include <cstdio>
#include <string>

#include "kgt/classify.hpp"

using namespace kgt;

namespace {

double time_of(const char* label, OrbitCatalog (*fn)(GridShape, CatalogScope, int),
               GridShape sh, int threads, size_t* classes) {
  auto t0 = std::chrono::steady_clock::now();
  OrbitCatalog cat = fn(sh, CatalogScope::All, threads);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  *classes = cat.entries.size();
  std::printf("  %-10s %8.3fs  (%zu classes)\n", label, secs, cat.entries.size());
  return secs;
}

OrbitCatalog serial_adapter(GridShape sh, CatalogScope scope, int) {
  return conjugacy_orbits_serial(sh, scope);
}

}  // namespace

int main(int argc, char** argv) {
  GridShape sh{2, 4};
  if (argc == 3) {
    sh.n = std::stoi(argv[1]);
    sh.m = std::stoi(argv[2]);
  }
  std::printf("orbit enumeration on the %dx%d grid (%d cells, %d threads)\n", sh.n, sh.m,
              sh.cells(), worker_count());
  size_t cs = 0, cp = 0;
  double ts = time_of("serial", serial_adapter, sh, 0, &cs);
  double tp = time_of("parallel", conjugacy_orbits, sh, 0, &cp);
  if (cs != cp) {
    std::printf("MISMATCH: class counts differ\n");
    return 1;
  }
  std::printf("speedup: %.2fx\n", tp > 0 ? ts / tp : 0.0);
  return 0;
}
