#include "spiderkit/degseq.hpp"

#include <algorithm>
#include <numeric>

namespace spiderkit {

DegreeSequence DegreeSequence::from_degrees(
    const std::vector<std::uint64_t>& degrees) {
  std::uint64_t maxd = 0;
  for (auto d : degrees) maxd = std::max(maxd, d);
  std::vector<std::uint64_t> counts(degrees.empty() ? 0 : maxd + 1, 0);
  for (auto d : degrees) ++counts[d];
  return from_counts(std::move(counts));
}

DegreeList counts_to_list(const DegreeSequence& seq) {
  DegreeList lst;
  lst.reserve(seq.vertex_count());
  const auto& c = seq.counts();
  for (std::size_t k = c.size(); k-- > 0;)
    lst.insert(lst.end(), c[k], static_cast<std::uint64_t>(k));
  return lst;
}

DegreeSequence list_to_counts(const DegreeList& lst) {
  return DegreeSequence::from_degrees(lst);
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<std::uint64_t> degrees(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
  return DegreeSequence::from_degrees(degrees);
}

bool is_graphical(const DegreeSequence& seq) {
  DegreeList d = counts_to_list(seq);
  std::uint64_t v = d.size();
  if (v == 0) return true;
  if (d.front() >= v) return false;  // unrealizable in a simple graph
  std::uint64_t sum = std::accumulate(d.begin(), d.end(), std::uint64_t{0});
  if (sum % 2 != 0) return false;

  // prefix[k] = d_1 + ... + d_k with 1-based k
  std::vector<std::uint64_t> prefix(v + 1, 0);
  for (std::uint64_t i = 0; i < v; ++i) prefix[i + 1] = prefix[i] + d[i];

  for (std::uint64_t k = 1; k <= v; ++k) {
    // split the tail i > k at the first d_i <= k (d is non-increasing)
    auto first_small = std::lower_bound(d.begin() + k, d.end(), k,
                                        [](std::uint64_t di, std::uint64_t kk) {
                                          return di > kk;
                                        });
    std::uint64_t big = static_cast<std::uint64_t>(first_small - d.begin()) - k;
    std::uint64_t tail_small = prefix[v] - prefix[k + big];
    std::uint64_t rhs = k * (k - 1) + big * k + tail_small;
    if (prefix[k] > rhs) return false;
  }
  return true;
}

std::optional<Graph> havel_hakimi_realize(const DegreeSequence& seq) {
  DegreeList res = counts_to_list(seq);
  std::size_t v = res.size();
  if (!res.empty() && res.front() >= v) return std::nullopt;

  GraphBuilder b(v);
  std::vector<std::uint32_t> order(v);
  for (;;) {
    std::size_t pick = v;
    for (std::size_t i = 0; i < v; ++i)
      if (res[i] > 0 && (pick == v || res[i] > res[pick])) pick = i;
    if (pick == v) break;  // all residuals satisfied

    std::uint64_t d = res[pick];
    res[pick] = 0;

    std::size_t cnt = 0;
    for (std::uint32_t i = 0; i < v; ++i)
      if (i != pick && res[i] > 0) order[cnt++] = i;
    if (cnt < d) return std::nullopt;
    std::partial_sort(order.begin(), order.begin() + d, order.begin() + cnt,
                      [&](std::uint32_t a, std::uint32_t c) {
                        return res[a] != res[c] ? res[a] > res[c] : a < c;
                      });
    for (std::uint64_t j = 0; j < d; ++j) {
      --res[order[j]];
      b.add_edge(static_cast<Vertex>(pick), order[j]);
    }
  }
  Graph g = b.finish();
  if (degree_sequence(g) != seq) return std::nullopt;  // cannot happen
  return g;
}

DegreeSequence reverse_counts(const DegreeSequence& seq, std::uint64_t v) {
  if (seq.vertex_count() != v)
    throw std::invalid_argument("counts do not sum to vertex count");
  const auto& c = seq.counts();
  if (c.size() > v)
    throw std::invalid_argument("degree >= v has no complement degree");
  std::vector<std::uint64_t> out(v, 0);
  for (std::size_t k = 0; k < c.size(); ++k) out[v - 1 - k] = c[k];
  return DegreeSequence::from_counts(std::move(out));
}

}  // namespace spiderkit
