#include "spiderkit/p4sparse.hpp"

#include <algorithm>

#include "spiderkit/detail/combinations.hpp"
#include "spiderkit/spider.hpp"

namespace spiderkit {

std::optional<P4Witness> induces_p4(const Graph& g, const VertexSet& four) {
  if (four.size() != 4) throw std::invalid_argument("need exactly 4 vertices");
  std::array<Vertex, 4> p{four[0], four[1], four[2], four[3]};
  for (Vertex v : p)
    if (v >= g.vertex_count())
      throw std::out_of_range("vertex id out of range");
  std::sort(p.begin(), p.end());
  if (std::adjacent_find(p.begin(), p.end()) != p.end())
    throw std::invalid_argument("duplicate vertex in 4-set");
  do {
    auto [a, b, c, d] = p;
    if (a >= d) continue;  // identify a path with its reversal
    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
        !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, d))
      return P4Witness{p};
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

namespace {

// Number of 4-subsets of the 5-set inducing a P4 (a 4-vertex graph holds at
// most one induced P4, so this counts distinct P4s).
int count_p4s_in_5set(const Graph& g, const std::array<Vertex, 5>& five) {
  int count = 0;
  for (int skip = 0; skip < 5; ++skip) {
    VertexSet four;
    for (int i = 0; i < 5; ++i)
      if (i != skip) four.push_back(five[i]);
    std::sort(four.begin(), four.end());
    if (induces_p4(g, four)) ++count;
  }
  return count;
}

void check_guard(const Graph& g, std::size_t max_n) {
  max_n = std::min<std::size_t>(max_n, kP4BruteForceMaxVertices);
  if (g.vertex_count() > max_n)
    throw std::invalid_argument("P4-sparse brute-force guard exceeded");
}

std::array<Vertex, 5> to_five(const std::vector<std::uint32_t>& idx) {
  return {idx[0], idx[1], idx[2], idx[3], idx[4]};
}

}  // namespace

P4SparseResult is_p4_sparse_bruteforce_serial(const Graph& g,
                                              std::size_t max_n) {
  check_guard(g, max_n);
  std::uint32_t n = static_cast<std::uint32_t>(g.vertex_count());
  if (n < 5) return {true, {}};
  auto idx = detail::first_combination(5);
  do {
    auto five = to_five(idx);
    if (count_p4s_in_5set(g, five) >= 2)
      return {false, VertexSet(five.begin(), five.end())};
  } while (detail::next_combination(idx, n));
  return {true, {}};
}

P4SparseResult is_p4_sparse_bruteforce(const Graph& g, std::size_t max_n) {
  check_guard(g, max_n);
  std::uint32_t n = static_cast<std::uint32_t>(g.vertex_count());
  if (n < 5) return {true, {}};
  std::uint64_t total = detail::binomial(n, 5);
  std::int64_t best_rank = -1;
#pragma omp parallel
  {
    std::int64_t local_rank = -1;
#pragma omp for schedule(dynamic, 1024)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(total); ++r) {
      if (local_rank >= 0 && r > local_rank) continue;
      auto idx = detail::unrank_combination(n, 5, static_cast<std::uint64_t>(r));
      if (count_p4s_in_5set(g, to_five(idx)) >= 2) local_rank = r;
    }
#pragma omp critical
    {
      if (local_rank >= 0 && (best_rank < 0 || local_rank < best_rank))
        best_rank = local_rank;
    }
  }
  if (best_rank < 0) return {true, {}};
  auto idx = detail::unrank_combination(n, 5, static_cast<std::uint64_t>(best_rank));
  return {false, VertexSet(idx.begin(), idx.end())};
}

bool is_p4_sparse_recursive(const Graph& g) {
  if (g.vertex_count() <= 3) return true;

  auto comps = connected_components(g);
  if (comps.size() > 1) {
    for (const auto& c : comps)
      if (!is_p4_sparse_recursive(induced_subgraph(g, c).graph)) return false;
    return true;
  }

  auto co_comps = connected_components(complement(g));
  if (co_comps.size() > 1) {
    // recurse on g's induced subgraphs over the co-components
    for (const auto& c : co_comps)
      if (!is_p4_sparse_recursive(induced_subgraph(g, c).graph)) return false;
    return true;
  }

  auto p = recognize_thin(g);
  if (!p) p = recognize_thick(g);
  if (!p) return false;
  if (p->head.empty()) return true;
  return is_p4_sparse_recursive(induced_subgraph(g, p->head).graph);
}

}  // namespace spiderkit
