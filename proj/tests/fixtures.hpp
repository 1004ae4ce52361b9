#pragma once

#include <cstdint>
#include <vector>

#include "spiderkit/degseq.hpp"
#include "spiderkit/enumerate.hpp"
#include "spiderkit/graph.hpp"

namespace spiderkit::test {

// The running example: thin spider with body {0,1,2}, legs {3,4,5} matched
// in order, and head {6,7,8,9} inducing the path 6-7-8-9.
inline Graph example_spider() {
  std::vector<std::pair<Vertex, Vertex>> edges = {
      {0, 1}, {0, 2}, {1, 2},                          // body clique
      {0, 3}, {1, 4}, {2, 5},                          // body-leg matching
      {6, 7}, {7, 8}, {8, 9},                          // head path
  };
  for (Vertex k = 0; k < 3; ++k)
    for (Vertex r = 6; r < 10; ++r) edges.push_back({k, r});
  return Graph::from_edges(10, edges);
}

inline DegreeSequence example_spider_sequence() {
  return DegreeSequence::from_counts({0, 3, 0, 0, 2, 2, 0, 3});
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, static_cast<Vertex>(i + 1)});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i)
    edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = static_cast<Vertex>(u + 1); v < n; ++v)
      edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

// Star K_{1,t}: center 0 with t leaves.
inline Graph star_graph(std::size_t t) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 1; i <= t; ++i) edges.push_back({0, i});
  return Graph::from_edges(t + 1, edges);
}

// Enumeration oracle: does any labeled graph realize this degree multiset?
inline bool exists_realization(const DegreeList& degrees) {
  std::size_t v = degrees.size();
  DegreeSequence want = DegreeSequence::from_degrees(degrees);
  for (std::uint64_t code = 0; code < labeled_graph_count(v); ++code)
    if (degree_sequence(graph_from_code(v, code)) == want) return true;
  return v == 0;
}

}  // namespace spiderkit::test
