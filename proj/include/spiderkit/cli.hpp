#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "spiderkit/degseq.hpp"
#include "spiderkit/graph.hpp"
#include "spiderkit/spider.hpp"

namespace spiderkit::cli {

// Exit codes: 0 analysis complete (including negative answers), 1 requested
// construction impossible, 2 input/usage error, 3 internal invariant breach.
inline constexpr int kExitOk = 0;
inline constexpr int kExitImpossible = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInvariant = 3;

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json payload;
};

nlohmann::json partition_to_json(const SpiderPartition& p);
SpiderPartition partition_from_json(const nlohmann::json& j);

// "counts:0,3,0,0,2,2,0,3" or "degrees:7,7,7,5,5,4,4,1,1,1".
DegreeSequence parse_sequence(const std::string& text);

// FNV-1a 64-bit content hash, hex encoded.
std::string digest(std::string_view bytes);

// Wraps a payload in the common envelope.
nlohmann::json envelope(const std::string& command,
                        const std::string& input_digest, double elapsed_ms,
                        const nlohmann::json& payload);

struct Guards {
  std::size_t spider_max_n;
  std::size_t p4_max_n;
};

// Effective brute-force guards; SPIDERKIT_MAX_N may lower, never raise them.
Guards effective_guards();

CommandResult cmd_recognize(const GraphDocument& doc, bool verify);
CommandResult cmd_verify(const Graph& g, const SpiderPartition& p);
CommandResult cmd_seq_check(const DegreeSequence& seq);
CommandResult cmd_seq_realize(const DegreeSequence& seq,
                              const std::string& as);  // thin|thick|any
CommandResult cmd_p4sparse(const Graph& g, const std::string& method,
                           std::size_t p4_guard);
CommandResult cmd_complement(const GraphDocument& doc);
CommandResult cmd_selftest(std::size_t max_n, std::ostream& log);

struct GenerateOptions {
  std::string kind;  // thin|thick|random|p4sparse
  std::size_t s = 2;
  std::string head = "p4";  // p4 | empty:<k> | random:<k>:<p>
  std::size_t n = 1;
  double p = 0.5;
  unsigned depth = 3;
  std::uint64_t seed = 0;
};

CommandResult cmd_generate(const GenerateOptions& opt);

// Canonical provenance string echoed as a comment in generated output.
std::string generate_spec_string(const GenerateOptions& opt);

}  // namespace spiderkit::cli
