#pragma once

#include <cstddef>
#include <ostream>

namespace spiderkit {

// Exhaustive oracle suites over all labeled graphs on up to max_n vertices:
// fast recognizers vs the brute-force partition search, and the two
// P4-sparseness checks against each other. Returns false on any mismatch.
bool run_selftest(std::size_t max_n, std::ostream& log);

}  // namespace spiderkit
