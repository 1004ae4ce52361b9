#include "spiderkit/gen.hpp"

#include <algorithm>
#include <random>

namespace spiderkit {

namespace {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Explicit Fisher-Yates so the stream does not depend on the standard
// library's std::shuffle implementation.
void shuffle_ids(std::vector<Vertex>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rand_below(rng, i)]);
}

GeneratedSpider thin_spider_around(std::size_t s, const Graph& head,
                                   std::mt19937_64& rng) {
  if (s < 2) throw std::invalid_argument("spider needs s >= 2");
  std::size_t hn = head.vertex_count();
  std::size_t n = 2 * s + hn;

  std::vector<Vertex> perm(s);
  for (std::size_t i = 0; i < s; ++i) perm[i] = static_cast<Vertex>(i);
  shuffle_ids(perm, rng);

  GraphBuilder b(n);
  for (Vertex i = 0; i < s; ++i) b.reserve(i, s + hn);
  for (Vertex i = 0; i < s; ++i) b.reserve(static_cast<Vertex>(s + i), 1);
  for (Vertex u = 0; u < hn; ++u)
    b.reserve(static_cast<Vertex>(2 * s + u), s + head.degree(u));

  for (Vertex i = 0; i < s; ++i)
    for (Vertex j = i + 1; j < s; ++j) b.add_edge(i, j);
  for (Vertex i = 0; i < s; ++i)
    b.add_edge(i, static_cast<Vertex>(s + perm[i]));
  for (Vertex i = 0; i < s; ++i)
    for (Vertex r = static_cast<Vertex>(2 * s); r < n; ++r) b.add_edge(i, r);
  for (Vertex u = 0; u < hn; ++u)
    for (Vertex x : head.neighbors(u))
      if (u < x)
        b.add_edge(static_cast<Vertex>(2 * s + u),
                   static_cast<Vertex>(2 * s + x));

  GeneratedSpider out;
  out.graph = b.finish();
  out.partition.kind = SpiderKind::thin;
  for (Vertex i = 0; i < s; ++i) {
    out.partition.body.push_back(i);
    out.partition.legs.push_back(static_cast<Vertex>(s + i));
    out.partition.matching.push_back({i, static_cast<Vertex>(s + perm[i])});
  }
  for (Vertex r = static_cast<Vertex>(2 * s); r < n; ++r)
    out.partition.head.push_back(r);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::size_t na = a.vertex_count();
  GraphBuilder out(na + b.vertex_count());
  for (Vertex u = 0; u < na; ++u)
    for (Vertex v : a.neighbors(u))
      if (u < v) out.add_edge(u, v);
  for (Vertex u = 0; u < b.vertex_count(); ++u)
    for (Vertex v : b.neighbors(u))
      if (u < v)
        out.add_edge(static_cast<Vertex>(na + u), static_cast<Vertex>(na + v));
  return out.finish();
}

Graph join(const Graph& a, const Graph& b) {
  std::size_t na = a.vertex_count();
  GraphBuilder out(na + b.vertex_count());
  for (Vertex u = 0; u < na; ++u)
    for (Vertex v : a.neighbors(u))
      if (u < v) out.add_edge(u, v);
  for (Vertex u = 0; u < b.vertex_count(); ++u)
    for (Vertex v : b.neighbors(u))
      if (u < v)
        out.add_edge(static_cast<Vertex>(na + u), static_cast<Vertex>(na + v));
  for (Vertex u = 0; u < na; ++u)
    for (Vertex v = 0; v < b.vertex_count(); ++v)
      out.add_edge(u, static_cast<Vertex>(na + v));
  return out.finish();
}

Graph build_p4_sparse(std::size_t n, unsigned depth, std::mt19937_64& rng) {
  if (n <= 1 || depth == 0) return Graph(1);
  int op;
  if (n < 4)
    op = static_cast<int>(rand_below(rng, 2));  // union or join only
  else
    op = static_cast<int>(rand_below(rng, 3));
  if (op == 0 || op == 1) {
    std::size_t n1 = 1 + rand_below(rng, n - 1);
    Graph g1 = build_p4_sparse(n1, depth - 1, rng);
    Graph g2 = build_p4_sparse(n - n1, depth - 1, rng);
    return op == 0 ? disjoint_union(g1, g2) : join(g1, g2);
  }
  std::size_t max_s = n / 2;  // n >= 4 here, so max_s >= 2
  std::size_t s = max_s == 2 ? 2 : 2 + rand_below(rng, max_s - 1);
  std::size_t head_n = n - 2 * s;
  Graph head = head_n > 0 ? build_p4_sparse(head_n, depth - 1, rng) : Graph(0);
  GeneratedSpider sp = thin_spider_around(s, head, rng);
  return rand_below(rng, 2) == 0 ? sp.graph : complement(sp.graph);
}

}  // namespace

GeneratedSpider random_thin_spider(std::size_t s, const Graph& head,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return thin_spider_around(s, head, rng);
}

GeneratedSpider random_thick_spider(std::size_t s, const Graph& head,
                                    std::uint64_t seed) {
  GeneratedSpider thin = random_thin_spider(s, head, seed);
  GeneratedSpider out;
  out.graph = complement(thin.graph);
  out.partition.kind = SpiderKind::thick;
  out.partition.body = thin.partition.legs;
  out.partition.legs = thin.partition.body;
  out.partition.head = thin.partition.head;
  for (auto [k, s_id] : thin.partition.matching)
    out.partition.matching.push_back({s_id, k});
  std::sort(out.partition.matching.begin(), out.partition.matching.end());
  return out;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = static_cast<Vertex>(u + 1); v < n; ++v)
      if (rand_unit(rng) < p) b.add_edge(u, v);
  return b.finish();
}

Graph random_p4_sparse(std::size_t n_target, unsigned depth,
                       std::uint64_t seed) {
  if (n_target < 1) throw std::invalid_argument("n_target must be >= 1");
  std::mt19937_64 rng(seed);
  return build_p4_sparse(n_target, depth, rng);
}

}  // namespace spiderkit
