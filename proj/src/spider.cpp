#include "spiderkit/spider.hpp"

#include <algorithm>
#include <cassert>

#include "spiderkit/detail/combinations.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spiderkit {

namespace {

// Builds the body->leg matching for a thin candidate: every body vertex must
// have exactly one neighbor in S, forming a bijection.
std::optional<std::vector<std::pair<Vertex, Vertex>>> thin_matching(
    const Graph& g, const VertexSet& body, const VertexSet& legs) {
  std::vector<std::pair<Vertex, Vertex>> matching;
  std::vector<bool> used(legs.size(), false);
  for (Vertex k : body) {
    Vertex match = 0;
    int found = 0;
    for (std::size_t i = 0; i < legs.size(); ++i) {
      if (g.has_edge(k, legs[i])) {
        if (++found > 1) return std::nullopt;
        if (used[i]) return std::nullopt;
        used[i] = true;
        match = legs[i];
      }
    }
    if (found != 1) return std::nullopt;
    matching.push_back({k, match});
  }
  return matching;
}

// Thick counterpart: every body vertex has exactly one non-neighbor in S.
std::optional<std::vector<std::pair<Vertex, Vertex>>> thick_matching(
    const Graph& g, const VertexSet& body, const VertexSet& legs) {
  std::vector<std::pair<Vertex, Vertex>> matching;
  std::vector<bool> used(legs.size(), false);
  for (Vertex k : body) {
    Vertex match = 0;
    int found = 0;
    for (std::size_t i = 0; i < legs.size(); ++i) {
      if (!g.has_edge(k, legs[i])) {
        if (++found > 1) return std::nullopt;
        if (used[i]) return std::nullopt;
        used[i] = true;
        match = legs[i];
      }
    }
    if (found != 1) return std::nullopt;
    matching.push_back({k, match});
  }
  return matching;
}

VertexSet rest_of(std::size_t n, const VertexSet& a, const VertexSet& b) {
  std::vector<bool> taken(n, false);
  for (Vertex v : a) taken[v] = true;
  for (Vertex v : b) taken[v] = true;
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v)
    if (!taken[v]) rest.push_back(v);
  return rest;
}

}  // namespace

std::string to_string(SpiderClass c) {
  switch (c) {
    case SpiderClass::ThinOnly: return "thin";
    case SpiderClass::ThickOnly: return "thick";
    case SpiderClass::Both: return "both";
    default: return "neither";
  }
}

std::optional<SpiderPartition> recognize_thin(const Graph& g) {
  std::size_t n = g.vertex_count();
  if (n < 4) return std::nullopt;

  std::size_t s = 0;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 1) ++s;
  if (s < 2) return std::nullopt;
  std::size_t body_deg = n - s;
  // body_deg == 1 would collapse the two degree classes (stars); not a spider
  if (body_deg < 2) return std::nullopt;

  SpiderPartition p;
  p.kind = SpiderKind::thin;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t d = g.degree(v);
    if (d == 1)
      p.legs.push_back(v);
    else if (d == body_deg)
      p.body.push_back(v);
    else
      p.head.push_back(v);
  }
  if (p.body.size() != s) return std::nullopt;

  // Each leg's single neighbor is its body vertex; the map must be a
  // bijection onto K. Guaranteed once the census matches, but checked.
  std::vector<bool> body_used(n, false);
  for (Vertex k : p.body) body_used[k] = false;
  std::vector<bool> is_body(n, false);
  for (Vertex k : p.body) is_body[k] = true;
  for (Vertex leg : p.legs) {
    Vertex k = g.neighbors(leg)[0];
    if (!is_body[k] || body_used[k]) return std::nullopt;
    body_used[k] = true;
    p.matching.push_back({k, leg});
  }
  std::sort(p.matching.begin(), p.matching.end());
  return p;
}

std::optional<SpiderPartition> recognize_thick(const Graph& g) {
  std::size_t n = g.vertex_count();
  if (n < 4) return std::nullopt;

  std::size_t body_deg = n - 2;
  std::size_t s = 0;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == body_deg) ++s;
  if (s < 2 || s > n - 2) return std::nullopt;  // s > n-2 collapses classes
  std::size_t leg_deg = s - 1;

  SpiderPartition p;
  p.kind = SpiderKind::thick;
  std::size_t legs_found = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t d = g.degree(v);
    if (d == body_deg)
      p.body.push_back(v);
    else if (d == leg_deg) {
      p.legs.push_back(v);
      ++legs_found;
    } else
      p.head.push_back(v);
  }
  if (legs_found != s) return std::nullopt;

  auto matching = thick_matching(g, p.body, p.legs);
  if (!matching) return std::nullopt;
  p.matching = std::move(*matching);
  return p;
}

namespace {

bool well_formed(const Graph& g, const SpiderPartition& p) {
  std::size_t n = g.vertex_count();
  std::vector<int> hits(n, 0);
  for (const VertexSet* set : {&p.body, &p.legs, &p.head}) {
    for (std::size_t i = 0; i < set->size(); ++i) {
      Vertex v = (*set)[i];
      if (v >= n) throw std::out_of_range("partition vertex id out of range");
      if (i > 0 && v <= (*set)[i - 1]) return false;
      ++hits[v];
    }
  }
  for (int h : hits)
    if (h != 1) return false;
  // matching must be a bijection body -> legs
  if (p.matching.size() != p.body.size()) return false;
  std::vector<bool> leg_used(n, false);
  std::size_t mi = 0;
  for (auto [k, s] : p.matching) {
    if (k >= n || s >= n) throw std::out_of_range("matching id out of range");
    if (!std::binary_search(p.body.begin(), p.body.end(), k)) return false;
    if (!std::binary_search(p.legs.begin(), p.legs.end(), s)) return false;
    if (mi > 0 && k <= p.matching[mi - 1].first) return false;
    if (leg_used[s]) return false;
    leg_used[s] = true;
    ++mi;
  }
  return true;
}

}  // namespace

VerifyResult verify_thin(const Graph& g, const SpiderPartition& p) {
  if (!well_formed(g, p)) return {false, "partition"};
  if (p.body.size() != p.legs.size() || p.body.size() < 2)
    return {false, "iii"};
  for (std::size_t i = 0; i < p.body.size(); ++i)
    for (std::size_t j = i + 1; j < p.body.size(); ++j)
      if (!g.has_edge(p.body[i], p.body[j])) return {false, "i"};
  for (std::size_t i = 0; i < p.legs.size(); ++i)
    for (std::size_t j = i + 1; j < p.legs.size(); ++j)
      if (g.has_edge(p.legs[i], p.legs[j])) return {false, "ii"};
  for (auto [k, s] : p.matching)
    if (!g.has_edge(k, s)) return {false, "v"};
  for (Vertex r : p.head) {
    for (Vertex k : p.body)
      if (!g.has_edge(r, k)) return {false, "iv"};
    for (Vertex s : p.legs)
      if (g.has_edge(r, s)) return {false, "iv"};
  }
  // uniqueness half of (v): a body vertex may touch no leg beyond its match
  for (auto [k, s] : p.matching)
    for (Vertex other : p.legs)
      if (other != s && g.has_edge(k, other)) return {false, "v"};
  return {true, ""};
}

VerifyResult verify_thick(const Graph& g, const SpiderPartition& p) {
  // A thick partition of g is a thin partition of the complement with body
  // and legs swapped and the matching read as the unique non-adjacency.
  SpiderPartition flipped;
  flipped.kind = SpiderKind::thin;
  flipped.body = p.legs;
  flipped.legs = p.body;
  flipped.head = p.head;
  for (auto [k, s] : p.matching) flipped.matching.push_back({s, k});
  std::sort(flipped.matching.begin(), flipped.matching.end());
  return verify_thin(complement(g), flipped);
}

SpiderClass classify(const Graph& g) {
  bool thin = recognize_thin(g).has_value();
  bool thick = recognize_thick(g).has_value();
  if (thin && thick) return SpiderClass::Both;
  if (thin) return SpiderClass::ThinOnly;
  if (thick) return SpiderClass::ThickOnly;
  return SpiderClass::NotSpider;
}

namespace {

// Lexicographically first S (subset of rest) completing (body, S) to a valid
// spider of the requested kind, together with the verified partition.
std::optional<SpiderPartition> first_valid_for_body(const Graph& g,
                                                    SpiderKind kind,
                                                    const VertexSet& body,
                                                    const VertexSet& rest,
                                                    std::size_t s) {
  if (rest.size() < s) return std::nullopt;
  auto idx = detail::first_combination(static_cast<std::uint32_t>(s));
  do {
    VertexSet legs;
    legs.reserve(s);
    for (auto i : idx) legs.push_back(rest[i]);
    auto matching = kind == SpiderKind::thin ? thin_matching(g, body, legs)
                                             : thick_matching(g, body, legs);
    if (!matching) continue;
    SpiderPartition p;
    p.kind = kind;
    p.body = body;
    p.legs = legs;
    p.head = rest_of(g.vertex_count(), body, legs);
    p.matching = std::move(*matching);
    VerifyResult vr = kind == SpiderKind::thin ? verify_thin(g, p)
                                               : verify_thick(g, p);
    if (vr.ok) return p;
  } while (detail::next_combination(idx, static_cast<std::uint32_t>(rest.size())));
  return std::nullopt;
}

VertexSet complement_set(std::size_t n, const VertexSet& a) {
  VertexSet rest;
  auto it = a.begin();
  for (Vertex v = 0; v < n; ++v) {
    if (it != a.end() && *it == v)
      ++it;
    else
      rest.push_back(v);
  }
  return rest;
}

void check_guard(const Graph& g, std::size_t max_n) {
  max_n = std::min<std::size_t>(max_n, kBruteForceMaxVertices);
  if (g.vertex_count() > max_n)
    throw std::invalid_argument("brute-force oracle guard exceeded");
}

}  // namespace

std::optional<SpiderPartition> brute_force_recognize_serial(const Graph& g,
                                                            SpiderKind kind,
                                                            std::size_t max_n) {
  check_guard(g, max_n);
  std::uint32_t n = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t s = 2; 2 * s <= n; ++s) {
    auto idx = detail::first_combination(s);
    do {
      VertexSet body(idx.begin(), idx.end());
      auto hit =
          first_valid_for_body(g, kind, body, complement_set(n, body), s);
      if (hit) return hit;
    } while (detail::next_combination(idx, n));
  }
  return std::nullopt;
}

std::optional<SpiderPartition> brute_force_recognize(const Graph& g,
                                                     SpiderKind kind,
                                                     std::size_t max_n) {
  check_guard(g, max_n);
  std::uint32_t n = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t s = 2; 2 * s <= n; ++s) {
    std::uint64_t total = detail::binomial(n, s);
    std::int64_t best_rank = -1;
    SpiderPartition best;
#pragma omp parallel
    {
      std::int64_t local_rank = -1;
      SpiderPartition local;
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t r = 0; r < static_cast<std::int64_t>(total); ++r) {
        if (local_rank >= 0 && r > local_rank) continue;
        auto idx = detail::unrank_combination(n, s, static_cast<std::uint64_t>(r));
        VertexSet body(idx.begin(), idx.end());
        auto hit =
            first_valid_for_body(g, kind, body, complement_set(n, body), s);
        if (hit && (local_rank < 0 || r < local_rank)) {
          local_rank = r;
          local = std::move(*hit);
        }
      }
#pragma omp critical
      {
        if (local_rank >= 0 && (best_rank < 0 || local_rank < best_rank)) {
          best_rank = local_rank;
          best = std::move(local);
        }
      }
    }
    if (best_rank >= 0) return best;
  }
  return std::nullopt;
}

}  // namespace spiderkit
