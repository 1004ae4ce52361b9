#pragma once

#include <cstdint>

#include "spiderkit/graph.hpp"
#include "spiderkit/spider.hpp"

namespace spiderkit {

struct GeneratedSpider {
  Graph graph;
  SpiderPartition partition;
};

// Thin spider around a copy of `head`: clique K at ids 0..s-1, legs S at
// s..2s-1 with a seeded random body-leg bijection, head at 2s onward joined
// completely to K. Requires s >= 2.
GeneratedSpider random_thin_spider(std::size_t s, const Graph& head,
                                   std::uint64_t seed);

// Complement of a generated thin spider, with the partition flipped.
GeneratedSpider random_thick_spider(std::size_t s, const Graph& head,
                                    std::uint64_t seed);

// G(n, p): each unordered pair included independently with probability p.
// Identical (n, p, seed) yields an identical graph.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// Random P4-sparse graph built by inverting the decomposition: disjoint
// union, join, or spider-with-recursive-head steps. n_target is a size
// target, not an exact count.
Graph random_p4_sparse(std::size_t n_target, unsigned depth,
                       std::uint64_t seed);

}  // namespace spiderkit
