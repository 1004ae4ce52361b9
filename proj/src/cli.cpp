#include "spiderkit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "spiderkit/gen.hpp"
#include "spiderkit/p4sparse.hpp"
#include "spiderkit/selftest.hpp"
#include "spiderkit/spider_seq.hpp"

namespace spiderkit::cli {

using nlohmann::json;

json partition_to_json(const SpiderPartition& p) {
  json j;
  j["kind"] = p.kind == SpiderKind::thin ? "thin" : "thick";
  j["K"] = p.body;
  j["S"] = p.legs;
  j["R"] = p.head;
  json m = json::array();
  for (auto [k, s] : p.matching) m.push_back({k, s});
  j["matching"] = m;
  return j;
}

SpiderPartition partition_from_json(const json& j) {
  SpiderPartition p;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "thin")
    p.kind = SpiderKind::thin;
  else if (kind == "thick")
    p.kind = SpiderKind::thick;
  else
    throw std::invalid_argument("partition kind must be thin or thick");
  p.body = j.at("K").get<VertexSet>();
  p.legs = j.at("S").get<VertexSet>();
  p.head = j.at("R").get<VertexSet>();
  for (const auto& pair : j.at("matching")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("matching entries must be [k,s] pairs");
    p.matching.push_back({pair[0].get<Vertex>(), pair[1].get<Vertex>()});
  }
  return p;
}

DegreeSequence parse_sequence(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument(
        "sequence must start with 'counts:' or 'degrees:'");
  std::string form = text.substr(0, colon);
  std::vector<std::uint64_t> values;
  std::size_t pos = colon + 1;
  if (pos >= text.size() && form == "counts") {
    // empty counts = empty sequence
  }
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok(text.data() + pos,
                         (comma == std::string::npos ? text.size() : comma) -
                             pos);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed sequence value '" +
                                  std::string(tok) + "'");
    values.push_back(v);
    pos = comma == std::string::npos ? text.size() : comma + 1;
  }
  if (form == "counts") return DegreeSequence::from_counts(std::move(values));
  if (form == "degrees") return DegreeSequence::from_degrees(values);
  throw std::invalid_argument("unknown sequence form '" + form + "'");
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json envelope(const std::string& command, const std::string& input_digest,
              double elapsed_ms, const json& payload) {
  return json{{"command", command},
              {"input_digest", input_digest},
              {"elapsed_ms", elapsed_ms},
              {"result", payload}};
}

Guards effective_guards() {
  Guards g{kBruteForceMaxVertices, kP4BruteForceMaxVertices};
  if (const char* env = std::getenv("SPIDERKIT_MAX_N")) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), v);
    if (ec == std::errc() && *ptr == '\0') {
      g.spider_max_n = std::min<std::size_t>(g.spider_max_n, v);
      g.p4_max_n = std::min<std::size_t>(g.p4_max_n, v);
    }
  }
  return g;
}

CommandResult cmd_recognize(const GraphDocument& doc, bool verify) {
  const Graph& g = doc.graph;
  auto thin = recognize_thin(g);
  auto thick = recognize_thick(g);
  json payload;
  if (thin && thick)
    payload["class"] = "both";
  else if (thin)
    payload["class"] = "thin";
  else if (thick)
    payload["class"] = "thick";
  else
    payload["class"] = "neither";
  const std::optional<SpiderPartition>& primary = thin ? thin : thick;
  if (primary) payload["partition"] = partition_to_json(*primary);

  int code = kExitOk;
  if (verify) {
    bool agree = true;
    if (thin) agree = agree && verify_thin(g, *thin).ok;
    if (thick) agree = agree && verify_thick(g, *thick).ok;
    payload["verified"] = agree;
    if (!agree) code = kExitInvariant;
  }
  return {code, payload};
}

CommandResult cmd_verify(const Graph& g, const SpiderPartition& p) {
  VerifyResult r = p.kind == SpiderKind::thin ? verify_thin(g, p)
                                              : verify_thick(g, p);
  json payload{{"valid", r.ok}};
  if (!r.ok) payload["violated"] = r.violated;
  return {kExitOk, payload};
}

namespace {

json witness_json(const std::optional<ThinRealizabilityWitness>& w,
                  const char* kind) {
  json j{{"realizable", w.has_value()}, {"kind", kind}};
  if (w) {
    j["s"] = w->s;
    j["v"] = w->v;
    j["head_sequence"] = w->head_sequence.counts();
  }
  return j;
}

}  // namespace

CommandResult cmd_seq_check(const DegreeSequence& seq) {
  json payload;
  payload["graphical"] = is_graphical(seq);
  payload["thin"] = witness_json(thin_spider_realizable(seq), "thin");
  std::optional<ThinRealizabilityWitness> thick;
  std::uint64_t v = seq.vertex_count();
  if (seq.counts().size() <= v)  // degrees >= v have no complement degree
    thick = thick_spider_realizable(seq, v);
  payload["thick"] = witness_json(thick, "thick");
  return {kExitOk, payload};
}

CommandResult cmd_seq_realize(const DegreeSequence& seq,
                              const std::string& as) {
  json payload;
  if (as == "any") {
    auto g = havel_hakimi_realize(seq);
    if (!g) return {kExitImpossible, json{{"error", "sequence not graphical"}}};
    payload["edge_list"] = serialize_graph(*g);
    return {kExitOk, payload};
  }
  if (as == "thin") {
    auto w = thin_spider_realizable(seq);
    if (!w)
      return {kExitImpossible,
              json{{"error", "sequence not realizable by a thin spider"}}};
    auto r = construct_thin_spider(*w);
    payload["edge_list"] = serialize_graph(r.graph);
    payload["partition"] = partition_to_json(r.partition);
    return {kExitOk, payload};
  }
  if (as == "thick") {
    auto w = thick_spider_realizable(seq, seq.vertex_count());
    if (!w)
      return {kExitImpossible,
              json{{"error", "sequence not realizable by a thick spider"}}};
    auto r = construct_thick_spider(*w);
    payload["edge_list"] = serialize_graph(r.graph);
    payload["partition"] = partition_to_json(r.partition);
    return {kExitOk, payload};
  }
  throw std::invalid_argument("--as must be thin, thick, or any");
}

CommandResult cmd_p4sparse(const Graph& g, const std::string& method,
                           std::size_t p4_guard) {
  json payload{{"method", method}};
  bool want_brute = method == "brute" || method == "both";
  bool want_rec = method == "recursive" || method == "both";
  if (!want_brute && !want_rec)
    throw std::invalid_argument("--method must be brute, recursive, or both");
  if (want_brute && g.vertex_count() > p4_guard)
    return {kExitInputError,
            json{{"error", "graph exceeds brute-force guard; use --method "
                           "recursive"}}};
  std::optional<P4SparseResult> brute;
  std::optional<bool> rec;
  if (want_brute) brute = is_p4_sparse_bruteforce(g, p4_guard);
  if (want_rec) rec = is_p4_sparse_recursive(g);
  if (brute && rec && brute->sparse != *rec) {
    payload["error"] = "brute-force and recursive checks disagree";
    return {kExitInvariant, payload};
  }
  bool sparse = brute ? brute->sparse : *rec;
  payload["p4_sparse"] = sparse;
  if (brute && !brute->sparse) payload["violating_set"] = brute->violating;
  return {kExitOk, payload};
}

CommandResult cmd_complement(const GraphDocument& doc) {
  GraphDocument out{complement(doc.graph), doc.labels};
  return {kExitOk, json{{"edge_list", serialize_graph(out)}}};
}

CommandResult cmd_selftest(std::size_t max_n, std::ostream& log) {
  bool ok = run_selftest(max_n, log);
  return {ok ? kExitOk : kExitInvariant, json{{"ok", ok}, {"max_n", max_n}}};
}

std::string generate_spec_string(const GenerateOptions& opt) {
  std::ostringstream ss;
  ss << "generate " << opt.kind;
  if (opt.kind == "thin" || opt.kind == "thick")
    ss << " s=" << opt.s << " head=" << opt.head;
  else if (opt.kind == "random")
    ss << " n=" << opt.n << " p=" << opt.p;
  else
    ss << " n=" << opt.n << " depth=" << opt.depth;
  ss << " seed=" << opt.seed;
  return ss.str();
}

namespace {

Graph head_from_spec(const std::string& spec, std::uint64_t seed) {
  if (spec == "p4")
    return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  auto parse_num = [](const std::string& s) {
    return std::stoull(s);
  };
  if (spec.rfind("empty:", 0) == 0)
    return Graph(parse_num(spec.substr(6)));
  if (spec.rfind("random:", 0) == 0) {
    auto rest = spec.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("head spec random:<k>:<p>");
    std::size_t k = parse_num(rest.substr(0, colon));
    double p = std::stod(rest.substr(colon + 1));
    return random_graph(k, p, seed ^ 0x9e3779b97f4a7c15ull);
  }
  throw std::invalid_argument("head spec must be p4, empty:<k> or "
                              "random:<k>:<p>");
}

}  // namespace

CommandResult cmd_generate(const GenerateOptions& opt) {
  json payload;
  std::string header = "# " + generate_spec_string(opt) + "\n";
  if (opt.kind == "thin" || opt.kind == "thick") {
    if (opt.s < 2) throw std::invalid_argument("spider generation needs s >= 2");
    Graph head = head_from_spec(opt.head, opt.seed);
    GeneratedSpider sp = opt.kind == "thin"
                             ? random_thin_spider(opt.s, head, opt.seed)
                             : random_thick_spider(opt.s, head, opt.seed);
    payload["edge_list"] = header + serialize_graph(sp.graph);
    payload["partition"] = partition_to_json(sp.partition);
    return {kExitOk, payload};
  }
  if (opt.kind == "random") {
    payload["edge_list"] =
        header + serialize_graph(random_graph(opt.n, opt.p, opt.seed));
    return {kExitOk, payload};
  }
  if (opt.kind == "p4sparse") {
    payload["edge_list"] =
        header + serialize_graph(random_p4_sparse(opt.n, opt.depth, opt.seed));
    return {kExitOk, payload};
  }
  throw std::invalid_argument("generate kind must be thin, thick, random, or "
                              "p4sparse");
}

}  // namespace spiderkit::cli
