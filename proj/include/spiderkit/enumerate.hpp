#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spiderkit/graph.hpp"

namespace spiderkit {

// Unordered pairs of 0..n-1 in lexicographic (u,v) order with u < v.
inline std::vector<std::pair<Vertex, Vertex>> vertex_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = static_cast<Vertex>(u + 1); v < n; ++v)
      pairs.push_back({u, v});
  return pairs;
}

// The code-th labeled graph on n vertices: bit i of code selects the i-th
// pair of vertex_pairs(n). Codes range over 0 .. 2^(n choose 2) - 1.
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  auto pairs = vertex_pairs(n);
  GraphBuilder b(n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (code >> i & 1) b.add_edge(pairs[i].first, pairs[i].second);
  return b.finish();
}

inline std::uint64_t labeled_graph_count(std::size_t n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

}  // namespace spiderkit
