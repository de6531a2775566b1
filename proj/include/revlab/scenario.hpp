#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revlab/operators.hpp"
#include "revlab/postulates.hpp"
#include "revlab/searches.hpp"

namespace revlab {

// Process exit codes shared by the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitSchema = 3,
  kExitDomain = 4,
  kExitSignature = 5,
};

enum class StateKind { Preorder, Ocf, Knowledge, Sequence };

// A validated scenario file: vocabulary, tagged initial state, operator and
// the observation sequence to run.
struct Scenario {
  Vocabulary vocab;
  std::string operator_name;  // ranking | boutilier | dp | knowledge | fl
  StateKind kind;
  std::optional<TotalPreorder> preorder;   // preorder kind (boutilier/fl/ranking prior)
  std::optional<Ocf> ocf;                  // ocf/knowledge/sequence kinds
  std::vector<Formula> prior_observations; // knowledge/sequence kinds
  std::optional<BeliefSet> beliefs;        // fl/ranking initial belief set
  std::vector<Formula> observations;
  std::vector<std::string> observation_texts;
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& source);

struct TraceStep {
  int index = 0;  // 1-based
  std::string observation;
  std::string beliefs;
  std::optional<std::string> firmness;  // OCF-backed operators only
  std::optional<std::string> known;     // knowledge operator only
  std::string state;
};

struct StepError {
  int step = 0;
  std::string observation;
  std::string message;
};

struct Trace {
  std::string initial_state;
  std::string initial_beliefs;
  std::vector<TraceStep> steps;
  std::string final_beliefs;
  std::optional<StepError> error;  // set when an observation was rejected
};

Trace run_scenario(const Scenario& s);

std::string render_trace_text(const Scenario& s, const Trace& t);
std::string render_trace_json(const Scenario& s, const Trace& t);

// Postulate suites exposed by the CLI, each with its expected signature.
struct SuiteResult {
  std::string suite;
  std::string operator_name;
  std::vector<CheckReport> reports;
  bool signature_ok = true;
  std::vector<std::string> mismatches;
};

// suite in {agm, agm-primed, dp, lehmann, weak-i4, fl}; throws SchemaError on
// an incompatible suite/operator pairing.
SuiteResult run_suite(const std::string& suite, const std::string& operator_name,
                      const CheckConfig& cfg);

std::string render_suite_text(const SuiteResult& r, const CheckConfig& cfg);
std::string render_suite_json(const SuiteResult& r, const CheckConfig& cfg);

struct SearchResult {
  std::string target;
  std::optional<DpNonfunctionalResult> nonfunctional;
  std::optional<C2CaseAnalysis> analysis;
};

// target in {nonfunctional-dp, c2-incompat}.
SearchResult run_search(const std::string& target, const CheckConfig& cfg);

std::string render_search_text(const SearchResult& r, const CheckConfig& cfg);
std::string render_search_json(const SearchResult& r, const CheckConfig& cfg);

// Initial OCF used by the sequence suites: each atom is believed, later atoms
// more firmly (atom i carries weight i+1 when false in a world).
Ocf graded_atom_ocf(const Vocabulary& vocab);

}  // namespace revlab
