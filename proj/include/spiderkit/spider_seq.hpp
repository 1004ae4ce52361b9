#pragma once

#include <cstdint>
#include <optional>

#include "spiderkit/degseq.hpp"
#include "spiderkit/graph.hpp"
#include "spiderkit/spider.hpp"

namespace spiderkit {

// Extracted from a sequence realizable by a thin spider: leg count s, vertex
// count v, and the head sequence obtained by shifting head degrees down by s.
struct ThinRealizabilityWitness {
  std::uint64_t s = 0;
  std::uint64_t v = 0;
  DegreeSequence head_sequence;  // on v - 2s vertices, graphical

  friend bool operator==(const ThinRealizabilityWitness&,
                         const ThinRealizabilityWitness&) = default;
};

// Degree-sequence characterization of thin spiders: s := n_1 >= 2, v >= 4,
// v >= 2s, n_{v-s} = s, all other counts confined to the head band
// s..v-s-1, and the shifted head sequence m_j = n_{j+s} graphical.
std::optional<ThinRealizabilityWitness> thin_spider_realizable(
    const DegreeSequence& seq);

struct SpiderRealization {
  Graph graph;
  SpiderPartition partition;
};

// Deterministic construction: K = 0..s-1, S = s..2s-1 matched i -> s+i,
// R = 2s..v-1 with the head realized by Havel-Hakimi.
SpiderRealization construct_thin_spider(const ThinRealizabilityWitness& w);

// Thick realizability via the complement transform on counts. Throws
// std::invalid_argument when the counts do not sum to v.
std::optional<ThinRealizabilityWitness> thick_spider_realizable(
    const DegreeSequence& seq, std::uint64_t v);

SpiderRealization construct_thick_spider(const ThinRealizabilityWitness& w);

}  // namespace spiderkit
