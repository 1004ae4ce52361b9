#include "spiderkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace spiderkit {

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& small = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex needle = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(small.begin(), small.end(), needle);
}

Graph Graph::from_edges(std::size_t n,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.finish();
}

Graph GraphBuilder::finish() {
  for (auto& row : g_.adj_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::invalid_argument("duplicate edge");
  }
  return std::move(g_);
}

Graph complement(const Graph& g) {
  std::size_t n = g.vertex_count();
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    b.reserve(v, n - 1 - nb.size());
    auto it = nb.begin();
    for (Vertex u = 0; u < v; ++u) {
      while (it != nb.end() && *it < u) ++it;
      if (it != nb.end() && *it == u) continue;
      b.add_edge(u, v);
    }
    // add_edge fills both rows, so only pairs u < v are visited
  }
  return b.finish();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> new_id(g.vertex_count(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.vertex_count())
      throw std::out_of_range("vertex id out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument("vertex set not sorted/unique");
    new_id[s[i]] = static_cast<Vertex>(i);
  }
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex u : g.neighbors(s[i])) {
      if (new_id[u] != static_cast<Vertex>(-1) && new_id[u] < i)
        b.add_edge(new_id[u], static_cast<Vertex>(i));
    }
  }
  return {b.finish(), s};
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

bool parse_uint(std::string_view tok, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

GraphDocument parse_graph(std::string_view text) {
  GraphDocument doc;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen_edges;
  std::vector<std::pair<int, std::pair<Vertex, std::string>>> pending_labels;
  std::uint64_t n = 0, m = 0;
  bool header_seen = false;
  std::size_t edges_seen = 0;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].front() == '#') {
      // "# label <id> <name>" comments carry vertex names
      if (toks.size() >= 4 && toks[0] == "#" && toks[1] == "label") {
        std::uint64_t id;
        if (!parse_uint(toks[2], id))
          throw ParseError(lineno, "malformed label id");
        pending_labels.push_back(
            {lineno, {static_cast<Vertex>(id), std::string(toks[3])}});
      }
      continue;
    }
    if (!header_seen) {
      if (toks.size() != 2 || !parse_uint(toks[0], n) || !parse_uint(toks[1], m))
        throw ParseError(lineno, "malformed header, expected 'n m'");
      header_seen = true;
      continue;
    }
    std::uint64_t u, v;
    if (toks.size() != 2 || !parse_uint(toks[0], u) || !parse_uint(toks[1], v))
      throw ParseError(lineno, "malformed edge line, expected 'u v'");
    if (edges_seen >= m) throw ParseError(lineno, "more edges than declared");
    if (u >= n || v >= n) throw ParseError(lineno, "vertex id >= n");
    if (u == v) throw ParseError(lineno, "self-loop");
    std::pair<Vertex, Vertex> key{static_cast<Vertex>(std::min(u, v)),
                                  static_cast<Vertex>(std::max(u, v))};
    if (!seen_edges.insert(key).second)
      throw ParseError(lineno, "duplicate edge");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    ++edges_seen;
  }
  if (!header_seen) throw ParseError(lineno, "missing header");
  if (edges_seen != m)
    throw ParseError(lineno, "fewer edges than declared (" +
                                 std::to_string(edges_seen) + " of " +
                                 std::to_string(m) + ")");
  doc.graph = Graph::from_edges(n, edges);
  for (auto& [line_no, lab] : pending_labels) {
    if (lab.first >= n) throw ParseError(line_no, "label id >= n");
    doc.labels[lab.first] = lab.second;
  }
  return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
  const Graph& g = doc.graph;
  std::ostringstream out;
  for (const auto& [id, name] : doc.labels)
    out << "# label " << id << ' ' << name << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace spiderkit
