// Serial vs OpenMP Betti tables on a few heavy symbolic and ordinary powers.
// usage: bench_betti [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "edgeal/betti.hpp"
#include "edgeal/graph_io.hpp"
#include "edgeal/symbolic.hpp"

using namespace edgeal;

namespace {

struct Case {
  std::string name;
  MonomialIdeal ideal;
};

template <typename F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  const std::vector<Case> cases = {
      {"C5 sym^3", symbolic_power(cycle_graph(5), 3)},
      {"C7 sym^2", symbolic_power(cycle_graph(7), 2)},
      {"K4 sym^4", symbolic_power(complete_graph(4), 4)},
      {"P6 pow^3", power(edge_ideal(path_graph(6)), 3)},
      {"ex42 sym^2", symbolic_power(example42_graph(), 2)},
  };
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-12s %6s %8s %10s %10s %8s %s\n", "ideal", "gens", "lattice", "serial_s", "omp_s", "speedup", "same");
  for (const auto& c : cases) {
    const std::size_t lattice = lcm_lattice(c.ideal).size();
    BettiTable serial, parallel;
    const double ts = best_of(repeats, [&] { serial = betti_table_serial(c.ideal); });
    const double tp = best_of(repeats, [&] { parallel = betti_table(c.ideal); });
    std::printf("%-12s %6zu %8zu %10.4f %10.4f %8.2f %s\n", c.name.c_str(), c.ideal.size(), lattice, ts, tp,
                tp > 0 ? ts / tp : 0.0, serial == parallel ? "yes" : "NO");
  }
  return 0;
}
