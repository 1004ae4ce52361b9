#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spiderkit/graph.hpp"

namespace spiderkit {

enum class SpiderKind { thin, thick };

// (K, S, R) partition with the body-leg matching. For kind == thick the
// matching pairs each body vertex with its unique non-neighbor in S.
struct SpiderPartition {
  SpiderKind kind = SpiderKind::thin;
  VertexSet body;   // K, sorted
  VertexSet legs;   // S, sorted
  VertexSet head;   // R, sorted
  std::vector<std::pair<Vertex, Vertex>> matching;  // (body, leg), by body id

  friend bool operator==(const SpiderPartition&,
                         const SpiderPartition&) = default;
};

enum class SpiderClass { ThinOnly, ThickOnly, Both, NotSpider };

std::string to_string(SpiderClass c);

// Linear-time recognition from the degree census. S = degree-1 vertices,
// K = degree-(n-s) vertices; requires s >= 2 and n-s >= 2 so the two degree
// classes are distinct (stars K_{1,t} meet the raw counts but are rejected).
std::optional<SpiderPartition> recognize_thin(const Graph& g);

// Dual recognition directly on g's degrees: s vertices of degree n-2 (body)
// and s of degree s-1 (legs), s <= n-2.
std::optional<SpiderPartition> recognize_thick(const Graph& g);

// First violated condition label: "partition", "iii", "i", "ii", "v", "iv"
// in that check order. ok == true means the partition is a valid spider.
struct VerifyResult {
  bool ok = false;
  std::string violated;  // empty when ok
};

VerifyResult verify_thin(const Graph& g, const SpiderPartition& p);
VerifyResult verify_thick(const Graph& g, const SpiderPartition& p);

SpiderClass classify(const Graph& g);

inline constexpr std::size_t kBruteForceMaxVertices = 12;

// Testing oracle: enumerates s ascending, then K and S subsets in
// lexicographic order, returning the first partition passing the verifier.
// Throws std::invalid_argument when g.n > max_n.
std::optional<SpiderPartition> brute_force_recognize(
    const Graph& g, SpiderKind kind,
    std::size_t max_n = kBruteForceMaxVertices);

// Serial reference for the OpenMP scan above; identical results.
std::optional<SpiderPartition> brute_force_recognize_serial(
    const Graph& g, SpiderKind kind,
    std::size_t max_n = kBruteForceMaxVertices);

}  // namespace spiderkit
