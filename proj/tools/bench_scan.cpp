// Benchmark of the OpenMP scan kernel against the serial reference.  The two
// must produce identical rows; the benchmark reports times and speedup.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "critbase/critical.hpp"

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scan benchmark: serial reference vs OpenMP kernel"};
  double from = 1.05, to = 1.99, step = 0.002;
  int repeat = 3;
  app.add_option("--from", from);
  app.add_option("--to", to);
  app.add_option("--step", step);
  app.add_option("--repeat", repeat);
  CLI11_PARSE(app, argc, argv);

  using critbase::ScanRow;
  critbase::DescentParams p;

  double t_serial = 1e300, t_parallel = 1e300;
  std::vector<ScanRow> serial_rows, parallel_rows;
  for (int r = 0; r < repeat; ++r) {
    auto a = std::chrono::steady_clock::now();
    serial_rows = critbase::scan_serial(from, to, step, p);
    auto b = std::chrono::steady_clock::now();
    parallel_rows = critbase::scan(from, to, step, p, true);
    auto c = std::chrono::steady_clock::now();
    t_serial = std::min(t_serial, seconds(a, b));
    t_parallel = std::min(t_parallel, seconds(b, c));
  }

  bool same = serial_rows.size() == parallel_rows.size();
  for (size_t i = 0; same && i < serial_rows.size(); ++i) {
    same = serial_rows[i].m == parallel_rows[i].m &&
           serial_rows[i].G == parallel_rows[i].G &&
           serial_rows[i].L == parallel_rows[i].L &&
           serial_rows[i].caseG == parallel_rows[i].caseG &&
           serial_rows[i].caseL == parallel_rows[i].caseL;
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("grid points : %zu\n", serial_rows.size());
  std::printf("threads     : %d\n", threads);
  std::printf("serial      : %.3f s\n", t_serial);
  std::printf("parallel    : %.3f s\n", t_parallel);
  std::printf("speedup     : %.2fx\n", t_serial / t_parallel);
  std::printf("rows match  : %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
