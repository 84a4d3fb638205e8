// Serial-vs-OpenMP comparison for the data-parallel kernels.  Every pair is
// checksummed against its twin so a speedup can never hide a wrong answer.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "absarith/nimber.hpp"
#include "absarith/scan.hpp"

using namespace absarith;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<u64()>& fn, u64& checksum) {
  const auto start = Clock::now();
  checksum = fn();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, const std::function<u64()>& serial,
            const std::function<u64()>& parallel) {
  u64 cs_serial = 0, cs_parallel = 0;
  const double ms_serial = time_ms(serial, cs_serial);
  const double ms_parallel = time_ms(parallel, cs_parallel);
  std::printf("%-28s %10.1f ms %10.1f ms %7.2fx  %s\n", name, ms_serial, ms_parallel,
              ms_serial / ms_parallel, cs_serial == cs_parallel ? "match" : "MISMATCH");
}

u64 scan_checksum(const std::vector<std::pair<u64, P1Point>>& points) {
  u64 h = 1469598103934665603ull;
  for (const auto& [p, pt] : points) {
    h = (h ^ p) * 1099511628211ull;
    h = (h ^ (pt.is_finite() ? pt.n : 0)) * 1099511628211ull;
  }
  return h;
}

u64 order_checksum(const std::vector<std::pair<u64, u64>>& orders) {
  u64 h = 1469598103934665603ull;
  for (const auto& [p, n] : orders) h = (h ^ (p + n)) * 1099511628211ull;
  return h;
}

u64 table_checksum(const std::vector<u32>& cells) {
  u64 h = 1469598103934665603ull;
  for (u32 v : cells) h = (h ^ v) * 1099511628211ull;
  return h;
}

u64 wheel_checksum(const std::vector<WheelEdge>& edges) {
  u64 h = 1469598103934665603ull;
  for (const auto& e : edges) h = (h ^ (e.a.g + e.b.g * 131 + e.prime)) * 1099511628211ull;
  return h;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel kernels run serially\n");
#endif
  std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

  const RationalMap q2 = RationalMap::parse("2");
  report(
      "graph_scan q=2, p<2e5", [&] { return scan_checksum(graph_scan_serial(q2, 200000)); },
      [&] { return scan_checksum(graph_scan(q2, 200000)); });

  report(
      "order_scan 3/2, p<2e5",
      [&] { return order_checksum(order_scan_serial(3, 2, 200000)); },
      [&] { return order_checksum(order_scan(3, 2, 200000)); });

  report(
      "mex_table bound 257", [&] { return table_checksum(mex_table_serial(257)); },
      [&] { return table_checksum(mex_table_parallel(257)); });

  report(
      "adjacency_wheel N=420",
      [&] { return wheel_checksum(adjacency_wheel_serial(420)); },
      [&] { return wheel_checksum(adjacency_wheel(420)); });

  return 0;
}
