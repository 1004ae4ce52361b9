// Compares the OpenMP brute-force scans against their serial references and
// reports recognition throughput on generated spiders.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "spiderkit/gen.hpp"
#include "spiderkit/p4sparse.hpp"
#include "spiderkit/spider.hpp"

using namespace spiderkit;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0)
      .count();
}

void bench_p4_scan() {
  std::printf("%-28s %10s %10s %8s\n", "p4sparse brute scan", "serial ms",
              "omp ms", "agree");
  for (std::size_t n : {20, 30, 40}) {
    Graph g = random_graph(n, 0.3, 1234 + n);
    auto t0 = clock_type::now();
    auto serial = is_p4_sparse_bruteforce_serial(g);
    double ts = ms_since(t0);
    t0 = clock_type::now();
    auto parallel = is_p4_sparse_bruteforce(g);
    double tp = ms_since(t0);
    bool agree = serial.sparse == parallel.sparse &&
                 serial.violating == parallel.violating;
    std::printf("  G(%2zu, 0.3)               %10.2f %10.2f %8s\n", n, ts, tp,
                agree ? "yes" : "NO");
  }
}

void bench_spider_oracle() {
  std::printf("%-28s %10s %10s %8s\n", "spider oracle (n=12)", "serial ms",
              "omp ms", "agree");
  for (std::uint64_t seed : {7, 8, 9}) {
    Graph g = random_graph(12, 0.4, seed);
    auto t0 = clock_type::now();
    auto serial = brute_force_recognize_serial(g, SpiderKind::thin);
    double ts = ms_since(t0);
    t0 = clock_type::now();
    auto parallel = brute_force_recognize(g, SpiderKind::thin);
    double tp = ms_since(t0);
    std::printf("  G(12, 0.4) seed=%-2llu        %10.2f %10.2f %8s\n",
                static_cast<unsigned long long>(seed), ts, tp,
                serial == parallel ? "yes" : "NO");
  }
}

void bench_recognition(bool large) {
  std::printf("%-28s %12s %14s %12s\n", "recognize_thin", "n", "edges",
              "ms");
  std::vector<std::size_t> sizes = {10'000, 100'000};
  if (large) sizes.push_back(1'000'000);
  for (std::size_t n : sizes) {
    std::size_t s = 1000;
    Graph head = random_graph(n - 2 * s, 4.0 / static_cast<double>(n), 99);
    GeneratedSpider sp = random_thin_spider(s, head, 42);
    auto t0 = clock_type::now();
    auto p = recognize_thin(sp.graph);
    double t = ms_since(t0);
    std::printf("  s=1000 sparse head         %12zu %14zu %12.3f%s\n", n,
                sp.graph.edge_count(), t, p ? "" : "  (NOT RECOGNIZED)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool large = argc > 1 && std::strcmp(argv[1], "--large") == 0;
  bench_p4_scan();
  std::printf("\n");
  bench_spider_oracle();
  std::printf("\n");
  bench_recognition(large);
  return 0;
}
