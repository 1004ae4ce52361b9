#include "spiderkit/spider_seq.hpp"

#include <algorithm>
#include <cassert>

namespace spiderkit {

std::optional<ThinRealizabilityWitness> thin_spider_realizable(
    const DegreeSequence& seq) {
  const auto& n = seq.counts();
  std::uint64_t v = seq.vertex_count();
  if (v < 4) return std::nullopt;

  auto count_at = [&](std::uint64_t k) -> std::uint64_t {
    return k < n.size() ? n[k] : 0;
  };

  std::uint64_t s = count_at(1);
  if (s < 2 || 2 * s > v) return std::nullopt;
  // v - s >= s >= 2, so the degree-1 and degree-(v-s) classes are distinct
  if (count_at(v - s) != s) return std::nullopt;
  if (count_at(0) != 0) return std::nullopt;
  for (std::uint64_t k = 2; k < s; ++k)
    if (count_at(k) != 0) return std::nullopt;
  for (std::uint64_t k = v - s + 1; k < n.size(); ++k)
    if (n[k] != 0) return std::nullopt;

  // head counts, degrees shifted down by s (head vertices lose their s body
  // neighbors); covers degrees s..v-s-1 of the original, minus the body class
  std::vector<std::uint64_t> head(v >= 2 * s ? v - 2 * s : 0, 0);
  std::uint64_t head_sum = 0;
  for (std::uint64_t j = 0; 2 * s + j < v; ++j) {
    head[j] = count_at(j + s);
    head_sum += head[j];
  }
  if (head_sum != v - 2 * s) return std::nullopt;

  ThinRealizabilityWitness w;
  w.s = s;
  w.v = v;
  w.head_sequence = DegreeSequence::from_counts(std::move(head));
  if (!is_graphical(w.head_sequence)) return std::nullopt;
  return w;
}

SpiderRealization construct_thin_spider(const ThinRealizabilityWitness& w) {
  std::size_t s = static_cast<std::size_t>(w.s);
  std::size_t v = static_cast<std::size_t>(w.v);
  assert(s >= 2 && v >= 2 * s);

  auto head = havel_hakimi_realize(w.head_sequence);
  assert(head && head->vertex_count() == v - 2 * s);

  GraphBuilder b(v);
  for (Vertex i = 0; i < s; ++i)
    for (Vertex j = i + 1; j < s; ++j) b.add_edge(i, j);
  for (Vertex i = 0; i < s; ++i) b.add_edge(i, static_cast<Vertex>(s + i));
  for (Vertex i = 0; i < s; ++i)
    for (Vertex r = static_cast<Vertex>(2 * s); r < v; ++r) b.add_edge(i, r);
  for (Vertex u = 0; u < head->vertex_count(); ++u)
    for (Vertex x : head->neighbors(u))
      if (u < x)
        b.add_edge(static_cast<Vertex>(2 * s + u),
                   static_cast<Vertex>(2 * s + x));

  SpiderRealization out;
  out.graph = b.finish();
  out.partition.kind = SpiderKind::thin;
  for (Vertex i = 0; i < s; ++i) {
    out.partition.body.push_back(i);
    out.partition.legs.push_back(static_cast<Vertex>(s + i));
    out.partition.matching.push_back({i, static_cast<Vertex>(s + i)});
  }
  for (Vertex r = static_cast<Vertex>(2 * s); r < v; ++r)
    out.partition.head.push_back(r);
  return out;
}

std::optional<ThinRealizabilityWitness> thick_spider_realizable(
    const DegreeSequence& seq, std::uint64_t v) {
  return thin_spider_realizable(reverse_counts(seq, v));
}

SpiderRealization construct_thick_spider(const ThinRealizabilityWitness& w) {
  SpiderRealization thin = construct_thin_spider(w);
  SpiderRealization out;
  out.graph = complement(thin.graph);
  out.partition.kind = SpiderKind::thick;
  out.partition.body = thin.partition.legs;
  out.partition.legs = thin.partition.body;
  out.partition.head = thin.partition.head;
  for (auto [k, s] : thin.partition.matching)
    out.partition.matching.push_back({s, k});
  std::sort(out.partition.matching.begin(), out.partition.matching.end());
  return out;
}

}  // namespace spiderkit
