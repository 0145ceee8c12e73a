// Serial reference kernels against their OpenMP counterparts.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "critcol/critical.hpp"
#include "critcol/enumerate.hpp"

#ifdef CRITCOL_HAVE_OPENMP
#include <omp.h>
#endif

using namespace critcol;

namespace {

double seconds(const std::function<std::size_t()>& f, std::size_t& result) {
  const auto t0 = std::chrono::steady_clock::now();
  result = f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void compare(const char* name, const std::function<std::size_t(Execution)>& kernel) {
  std::size_t serial_out = 0, parallel_out = 0;
  const double ts = seconds([&] { return kernel(Execution::serial); }, serial_out);
  const double tp = seconds([&] { return kernel(Execution::parallel); }, parallel_out);
  std::printf("%-34s %10.3f %10.3f %8.2fx  %s\n", name, ts, tp, tp > 0 ? ts / tp : 0.0,
              serial_out == parallel_out ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 8;
#ifdef CRITCOL_HAVE_OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  compare(("enumerate all, n=" + std::to_string(n)).c_str(), [&](Execution ex) {
    EnumerateOptions o;
    o.execution = ex;
    return enumerate_graphs(n, o).size();
  });
  compare(("enumerate K4-free, n=" + std::to_string(n + 1)).c_str(), [&](Execution ex) {
    EnumerateOptions o;
    o.filters = {PatternSpec::clique(4)};
    o.execution = ex;
    return enumerate_graphs(n + 1, o).size();
  });
  compare(("4-critical, n<=" + std::to_string(n)).c_str(),
          [&](Execution ex) { return enumerate_critical(4, n, {}, ex).members.size(); });
  compare("3-critical, n<=9", [&](Execution ex) { return enumerate_critical(3, 9, {}, ex).members.size(); });

  std::vector<Graph> dense;
  for (const Graph& g : enumerate_graphs(7)) {
    if (g.edge_count() >= 14) dense.push_back(g);
  }
  compare("criticality reports, 7-vertex dense", [&](Execution ex) {
    std::size_t critical = 0;
    for (const Graph& g : dense) critical += criticality_report(g, chromatic_number(g).chi, ex).verdict;
    return critical;
  });
  return 0;
}
