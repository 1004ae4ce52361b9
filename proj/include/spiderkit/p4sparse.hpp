#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "spiderkit/graph.hpp"

namespace spiderkit {

// Ordered vertices of an induced chordless path a-b-c-d.
struct P4Witness {
  std::array<Vertex, 4> path;

  friend bool operator==(const P4Witness&, const P4Witness&) = default;
};

// Deterministic witness: lexicographically smallest valid (a,b,c,d) with
// a < d. Throws std::invalid_argument unless |four| == 4.
std::optional<P4Witness> induces_p4(const Graph& g, const VertexSet& four);

struct P4SparseResult {
  bool sparse = false;
  VertexSet violating;  // first 5-set (lexicographic) inducing two P4s
};

inline constexpr std::size_t kP4BruteForceMaxVertices = 40;

// Definition check: no 5-subset induces two distinct P4s. Throws
// std::invalid_argument when g.n > max_n.
P4SparseResult is_p4_sparse_bruteforce(
    const Graph& g, std::size_t max_n = kP4BruteForceMaxVertices);

// Serial reference for the OpenMP subset scan; identical results.
P4SparseResult is_p4_sparse_bruteforce_serial(
    const Graph& g, std::size_t max_n = kP4BruteForceMaxVertices);

// Recursive decomposition: accept if every step is disconnected,
// co-disconnected, or a spider whose head recursively qualifies.
bool is_p4_sparse_recursive(const Graph& g);

}  // namespace spiderkit
