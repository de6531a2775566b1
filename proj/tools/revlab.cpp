#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "revlab/scenario.hpp"

namespace {

using namespace revlab;

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

CheckConfig make_config(const std::string& vocab_csv, std::uint32_t max_rank,
                        std::uint32_t seq_bound, bool serial) {
  CheckConfig cfg = CheckConfig::exhaustive(Vocabulary(split_csv(vocab_csv)));
  cfg.max_rank = max_rank;
  cfg.sequence_length_bound = seq_bound;
  cfg.mode = serial ? ExecutionMode::Serial : ExecutionMode::Parallel;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief revision scenarios, postulate suites, and counterexample searches"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string suite;
  std::string op;
  std::string target;
  std::string vocab_csv = "p,q";
  std::uint32_t max_rank = 2;
  std::uint32_t seq_bound = 3;
  bool json_output = false;
  bool serial = false;

  CLI::App* revise = app.add_subcommand("revise", "run an observation trace from a scenario file");
  revise->add_option("--scenario", scenario_path, "scenario file (JSON)")->required();
  revise->add_flag("--json", json_output, "machine-readable output");

  CLI::App* check = app.add_subcommand("check", "run a postulate suite");
  check->add_option("--suite", suite, "agm | agm-primed | dp | lehmann | weak-i4 | fl")
      ->required();
  check->add_option("--operator", op, "ranking | boutilier | dp | knowledge | fl")->required();
  check->add_option("--vocab", vocab_csv, "comma-separated atoms (default p,q)");
  check->add_option("--max-rank", max_rank, "OCF enumeration bound (default 2)");
  check->add_option("--seq-bound", seq_bound, "observation sequence length bound (default 3)");
  check->add_flag("--json", json_output, "machine-readable output");
  check->add_flag("--serial", serial, "disable parallel instance evaluation");

  CLI::App* search = app.add_subcommand("search", "run a counterexample search");
  search->add_option("--target", target, "nonfunctional-dp | c2-incompat")->required();
  search->add_option("--vocab", vocab_csv, "comma-separated atoms (default p,q)");
  search->add_option("--max-rank", max_rank, "OCF enumeration bound (default 2)");
  search->add_flag("--json", json_output, "machine-readable output");
  search->add_flag("--serial", serial, "disable parallel instance evaluation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (revise->parsed()) {
      const Scenario s = load_scenario(scenario_path);
      const Trace t = run_scenario(s);
      std::cout << (json_output ? render_trace_json(s, t) : render_trace_text(s, t));
      return t.error ? kExitDomain : kExitOk;
    }
    if (check->parsed()) {
      const CheckConfig cfg = make_config(vocab_csv, max_rank, seq_bound, serial);
      const SuiteResult r = run_suite(suite, op, cfg);
      std::cout << (json_output ? render_suite_json(r, cfg) : render_suite_text(r, cfg));
      return r.signature_ok ? kExitOk : kExitSignature;
    }
    const CheckConfig cfg = make_config(vocab_csv, max_rank, seq_bound, serial);
    const SearchResult r = run_search(target, cfg);
    std::cout << (json_output ? render_search_json(r, cfg) : render_search_text(r, cfg));
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << " (position " << e.position() << ")\n";
    return kExitParse;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  }
}
