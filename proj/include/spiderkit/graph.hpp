#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spiderkit {

using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertex ids of some ambient graph.
using VertexSet = std::vector<Vertex>;

// Simple undirected graph over dense vertex ids 0..n-1.
// Immutable after construction; adjacency rows are sorted ascending,
// loop-free and symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  // Validates range, loop-freeness and edge uniqueness; throws
  // std::invalid_argument on violation.
  static Graph from_edges(std::size_t n,
                          const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return adj_[v].size();
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  void check_vertex(Vertex v) const {
    if (v >= adj_.size()) throw std::out_of_range("vertex id out of range");
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

// Accumulates edges and validates the simple-graph invariants in finish().
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}

  void reserve(Vertex v, std::size_t deg) { g_.adj_[v].reserve(deg); }

  void add_edge(Vertex u, Vertex v) {
    if (u >= g_.adj_.size() || v >= g_.adj_.size())
      throw std::out_of_range("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    g_.adj_[u].push_back(v);
    g_.adj_[v].push_back(u);
    ++g_.edges_;
  }

  // Sorts adjacency rows and rejects duplicate edges.
  Graph finish();

 private:
  Graph g_;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original_id;  // new id i held original id original_id[i]
};

// s must be sorted ascending and duplicate-free; ids are validated.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Partition of 0..n-1 into maximal connected sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Graph plus the optional vertex labels carried by the edge-list format.
struct GraphDocument {
  Graph graph;
  std::map<Vertex, std::string> labels;
};

// Edge-list text format: '#' comment lines, header "n m", then m lines "u v".
// "# label <id> <name>" comments are preserved as vertex labels.
GraphDocument parse_graph(std::string_view text);
std::string serialize_graph(const GraphDocument& doc);

inline std::string serialize_graph(const Graph& g) {
  return serialize_graph(GraphDocument{g, {}});
}

}  // namespace spiderkit
