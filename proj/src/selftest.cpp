#include "spiderkit/selftest.hpp"

#include "spiderkit/enumerate.hpp"
#include "spiderkit/p4sparse.hpp"
#include "spiderkit/spider.hpp"

namespace spiderkit {

bool run_selftest(std::size_t max_n, std::ostream& log) {
  bool ok = true;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::uint64_t total = labeled_graph_count(n);
    std::uint64_t spider_mismatch = 0, verify_fail = 0, p4_mismatch = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      Graph g = graph_from_code(n, code);

      auto thin = recognize_thin(g);
      auto thick = recognize_thick(g);
      if (thin && !verify_thin(g, *thin).ok) ++verify_fail;
      if (thick && !verify_thick(g, *thick).ok) ++verify_fail;
      if (thin.has_value() !=
          brute_force_recognize(g, SpiderKind::thin).has_value())
        ++spider_mismatch;
      if (thick.has_value() !=
          brute_force_recognize(g, SpiderKind::thick).has_value())
        ++spider_mismatch;

      if (is_p4_sparse_bruteforce(g).sparse != is_p4_sparse_recursive(g))
        ++p4_mismatch;
    }
    bool level_ok = spider_mismatch == 0 && verify_fail == 0 && p4_mismatch == 0;
    ok = ok && level_ok;
    log << "n=" << n << ": " << total << " graphs, "
        << (level_ok ? "ok" : "MISMATCH") << " (spider=" << spider_mismatch
        << " verify=" << verify_fail << " p4=" << p4_mismatch << ")\n";
  }
  return ok;
}

}  // namespace spiderkit
