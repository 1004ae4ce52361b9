#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spiderkit/graph.hpp"

namespace spiderkit {

// Degree multiset, sorted non-increasing.
using DegreeList = std::vector<std::uint64_t>;

// Degree sequence in counts form: counts()[k] is the number of vertices of
// degree k. Canonical: trailing zero counts trimmed, empty for v = 0.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  static DegreeSequence from_counts(std::vector<std::uint64_t> counts) {
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    DegreeSequence s;
    s.counts_ = std::move(counts);
    return s;
  }

  // Accepts degrees in any order.
  static DegreeSequence from_degrees(const std::vector<std::uint64_t>& degrees);

  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

  std::uint64_t vertex_count() const noexcept {
    std::uint64_t v = 0;
    for (auto c : counts_) v += c;
    return v;
  }

  std::uint64_t degree_sum() const noexcept {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < counts_.size(); ++k) s += k * counts_[k];
    return s;
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

DegreeList counts_to_list(const DegreeSequence& seq);
DegreeSequence list_to_counts(const DegreeList& lst);

DegreeSequence degree_sequence(const Graph& g);

// Erdos-Gallai test: even degree sum and the k-th partial-sum inequalities.
bool is_graphical(const DegreeSequence& seq);

// Deterministic Havel-Hakimi: vertex ids follow the non-increasing degree
// list, each step picks the max-residual vertex of smallest id and connects
// it to the next-highest residuals, ties broken by smallest id.
std::optional<Graph> havel_hakimi_realize(const DegreeSequence& seq);

// Complement transform on counts: m_k = n_{v-1-k}. Throws
// std::invalid_argument when the counts do not sum to v.
DegreeSequence reverse_counts(const DegreeSequence& seq, std::uint64_t v);

}  // namespace spiderkit
