#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spiderkit/cli.hpp"

namespace {

using namespace spiderkit;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

void print_human(const json& j, std::ostream& out, int indent = 0) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    out << std::string(indent * 2, ' ') << it.key() << ": ";
    if (it->is_object()) {
      out << '\n';
      print_human(*it, out, indent + 1);
    } else {
      out << it->dump() << '\n';
    }
  }
}

struct Invocation {
  std::string command;
  std::string input_bytes;
  cli::CommandResult result;
};

int emit(const Invocation& inv, bool human,
         std::chrono::steady_clock::time_point t0) {
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  json out = cli::envelope(inv.command, cli::digest(inv.input_bytes), ms,
                           inv.result.payload);
  if (human)
    print_human(out, std::cout);
  else
    std::cout << out.dump(2) << '\n';
  return inv.result.exit_code;
}

// Moves a possibly large edge list out of the JSON payload into a file.
void redirect_output(cli::CommandResult& r, const std::string& out_path) {
  if (out_path.empty() || !r.payload.contains("edge_list")) return;
  write_file(out_path, r.payload["edge_list"].get<std::string>());
  r.payload.erase("edge_list");
  r.payload["output_path"] = out_path;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spider graph toolkit: recognition, degree sequences, "
               "P4-sparseness"};
  app.require_subcommand(1);
  bool human = false;
  app.add_flag("--human", human, "table output instead of JSON");

  std::string path, partition_path, sequence, as = "any", method = "both";
  std::string out_path;
  bool verify_flag = false;
  std::size_t selftest_max_n = 6;
  cli::GenerateOptions gen_opt;
  bool seed_given = false;

  auto* rec = app.add_subcommand("recognize", "classify a graph file");
  rec->add_option("path", path)->required();
  rec->add_flag("--verify", verify_flag, "re-check the returned partition");

  auto* ver = app.add_subcommand("verify", "check a partition against a graph");
  ver->add_option("path", path)->required();
  ver->add_option("partition", partition_path, "partition JSON file")
      ->required();

  auto* seq = app.add_subcommand("seq", "degree-sequence analysis");
  seq->require_subcommand(1);
  auto* seq_check = seq->add_subcommand("check", "graphicality and spider "
                                                 "realizability");
  seq_check->add_option("sequence", sequence)->required();
  auto* seq_realize = seq->add_subcommand("realize", "construct a realization");
  seq_realize->add_option("sequence", sequence)->required();
  seq_realize->add_option("--as", as, "thin|thick|any");
  seq_realize->add_option("-o,--output", out_path, "write edge list to file");

  auto* p4 = app.add_subcommand("p4sparse", "P4-sparseness check");
  p4->add_option("path", path)->required();
  p4->add_option("--method", method, "brute|recursive|both");

  auto* gen = app.add_subcommand("generate", "seeded graph generation");
  gen->add_option("kind", gen_opt.kind, "thin|thick|random|p4sparse")
      ->required();
  gen->add_option("--s", gen_opt.s, "leg count for spiders");
  gen->add_option("--head", gen_opt.head, "p4 | empty:<k> | random:<k>:<p>");
  gen->add_option("--n", gen_opt.n, "vertex count target");
  gen->add_option("--p", gen_opt.p, "edge probability");
  gen->add_option("--depth", gen_opt.depth, "recursion depth for p4sparse");
  gen->add_option("--seed", gen_opt.seed)
      ->each([&](const std::string&) { seed_given = true; });
  gen->add_option("-o,--output", out_path, "write edge list to file");

  auto* comp = app.add_subcommand("complement", "complement a graph file");
  comp->add_option("path", path)->required();
  comp->add_option("-o,--output", out_path, "write edge list to file");

  auto* self = app.add_subcommand("selftest", "exhaustive small-graph oracle "
                                              "suites");
  self->add_option("--max-n", selftest_max_n, "largest vertex count (<= 6 "
                                              "recommended)");

  // Let the global --human flag appear after a subcommand as well.
  for (auto* sub : {rec, ver, seq, seq_check, seq_realize, p4, gen, comp, self})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  auto t0 = std::chrono::steady_clock::now();
  try {
    cli::Guards guards = cli::effective_guards();
    Invocation inv;
    if (rec->parsed()) {
      inv.command = "recognize";
      inv.input_bytes = read_file(path);
      inv.result = cli::cmd_recognize(parse_graph(inv.input_bytes), verify_flag);
    } else if (ver->parsed()) {
      inv.command = "verify";
      inv.input_bytes = read_file(path);
      auto pj = json::parse(read_file(partition_path));
      inv.result = cli::cmd_verify(parse_graph(inv.input_bytes).graph,
                                   cli::partition_from_json(pj));
    } else if (seq_check->parsed()) {
      inv.command = "seq check";
      inv.input_bytes = sequence;
      inv.result = cli::cmd_seq_check(cli::parse_sequence(sequence));
    } else if (seq_realize->parsed()) {
      inv.command = "seq realize";
      inv.input_bytes = sequence;
      inv.result = cli::cmd_seq_realize(cli::parse_sequence(sequence), as);
      redirect_output(inv.result, out_path);
    } else if (p4->parsed()) {
      inv.command = "p4sparse";
      inv.input_bytes = read_file(path);
      inv.result = cli::cmd_p4sparse(parse_graph(inv.input_bytes).graph,
                                     method, guards.p4_max_n);
    } else if (gen->parsed()) {
      if (!seed_given)
        throw std::invalid_argument("--seed is required; no time-based default");
      inv.command = "generate";
      inv.input_bytes = cli::generate_spec_string(gen_opt);
      inv.result = cli::cmd_generate(gen_opt);
      redirect_output(inv.result, out_path);
    } else if (comp->parsed()) {
      inv.command = "complement";
      inv.input_bytes = read_file(path);
      inv.result = cli::cmd_complement(parse_graph(inv.input_bytes));
      redirect_output(inv.result, out_path);
    } else if (self->parsed()) {
      inv.command = "selftest";
      inv.input_bytes = std::to_string(selftest_max_n);
      inv.result = cli::cmd_selftest(selftest_max_n, std::cerr);
    }
    return emit(inv, human, t0);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return cli::kExitInputError;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << '\n';
    return cli::kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInputError;
  }
}
