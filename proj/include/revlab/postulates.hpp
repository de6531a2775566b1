#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "revlab/logic.hpp"
#include "revlab/operators.hpp"
#include "revlab/parallel.hpp"
#include "revlab/rankings.hpp"

namespace revlab {

enum class PostulateFamily { R, RPrime, C, CPrime, FL, I, R9Prime, WeakI4, Nullification };

struct PostulateId {
  PostulateFamily family;
  int index = 0;

  std::string name() const;
  bool operator==(const PostulateId&) const = default;
};

enum class CheckStatus { Pass, Fail, Vacuous };

std::string to_string(CheckStatus s);

// A failing instance, with enough bindings (rank maps, canonical formulas) to
// replay the evaluation through the public operations.
struct Counterexample {
  std::uint64_t instance_index = 0;
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string trace;
};

// Result of checking one postulate over a finite instance grid.  "pass" is
// always relative to the configured bounds; the counts make that explicit.
struct CheckReport {
  PostulateId postulate;
  CheckStatus status = CheckStatus::Vacuous;
  std::uint64_t instances_checked = 0;  // precondition held; conclusion evaluated
  std::uint64_t domain_skipped = 0;     // needed a revision outside the operator's domain
  std::uint64_t failures_total = 0;
  std::vector<Counterexample> counterexamples;  // first few, in enumeration order
  std::vector<std::string> notes;
};

struct CheckConfig {
  Vocabulary vocab;
  std::uint32_t max_rank = 2;
  bool allow_inf = true;
  std::vector<Formula> formula_pool;
  std::uint32_t sequence_length_bound = 3;
  ExecutionMode mode = ExecutionMode::Parallel;
  std::uint32_t max_counterexamples = 3;

  // Pool defaulted to every formula equivalence class; requires |vocab| <= 3.
  static CheckConfig exhaustive(Vocabulary vocab);
};

// Belief-set-level revision operator under test, with the belief sets it is
// quantified over.  revise may throw DomainError only for inputs the checks
// themselves exclude (unsatisfiable formulas).
struct BeliefRevisionOp {
  std::string name;
  std::vector<BeliefSet> domain;
  std::function<BeliefSet(const BeliefSet&, const Formula&)> revise;
};

BeliefRevisionOp ranking_induced_op(const TotalPreorder& p, const Vocabulary& vocab);
BeliefRevisionOp fl_op(const TotalPreorder& prior, const Vocabulary& vocab);
// K*f := Cl(K u {f}); violates R5.  Used as a negative control.
BeliefRevisionOp expand_always_op(const Vocabulary& vocab);

// Epistemic-state-level operator under test.
using EpistemicState = std::variant<TotalPreorder, Ocf, KnowledgeState>;

struct EpistemicOp {
  std::string name;
  std::vector<EpistemicState> states;
  std::function<bool(const EpistemicState&, const WorldSet&)> admissible;
  std::function<EpistemicState(const EpistemicState&, const Formula&, const WorldSet&)> revise;
  std::function<BeliefSet(const EpistemicState&)> bel;
  std::function<bool(const EpistemicState&, const EpistemicState&)> equal;
  std::function<std::optional<std::string>(const EpistemicState&)> validate;
  std::function<std::string(const EpistemicState&)> describe;
};

EpistemicOp make_boutilier_op(const CheckConfig& cfg);
EpistemicOp make_dp_op(const CheckConfig& cfg);
EpistemicOp make_knowledge_op(const CheckConfig& cfg);

// Exhaustive, duplicate-free enumerations.  Preorders are generated in normal
// form; OCFs take finite ranks <= max_rank plus optionally infinity, always
// with some world at rank 0.
std::vector<TotalPreorder> enumerate_preorders(std::size_t world_count);
std::vector<Ocf> enumerate_ocfs(std::size_t world_count, std::uint32_t max_rank, bool allow_inf);

// AGM postulates R1-R8 over the op's domain and the formula pool.  R5 is
// checked in the consistent direction only; R6 pairs each pool formula with a
// double-negated variant; revision by false is tallied as out of domain.
std::vector<CheckReport> check_r(const BeliefRevisionOp& op, const CheckConfig& cfg);

// FL: if !f in K then K * f = K_bot * f.
CheckReport check_fl(const BeliefRevisionOp& op, const CheckConfig& cfg);

// Darwiche-Pearl C1-C4 at the belief-set level; the op must be total on the
// belief sets its own revisions produce.
std::vector<CheckReport> check_c(const BeliefRevisionOp& op, const CheckConfig& cfg);

// R1'-R8' plus R9' over enumerated epistemic states.
std::vector<CheckReport> check_r_primed(const EpistemicOp& op, const CheckConfig& cfg);

// C1'-C4' over enumerated epistemic states.  Instances whose inner revision
// is disallowed (e.g. C2' under the knowledge operator) are counted vacuous.
std::vector<CheckReport> check_c_primed(const EpistemicOp& op, const CheckConfig& cfg);

// Lehmann's I1-I7 over observation sequences up to the configured length.
// Sequences outside the evaluator's domain are skipped and tallied.
std::vector<CheckReport> check_i(const BelEvaluator& evaluator, const CheckConfig& cfg);

// Weak variant of I4: observing a formula that is already known never changes
// future beliefs.  Requires the knowledge evaluator.
CheckReport check_weak_i4(const BelEvaluator& evaluator, const CheckConfig& cfg);

// Natural revision nullification: after a surprise, beliefs equal those of
// the longest prefix still consistent with the surprising observation.
CheckReport boutilier_nullification_check(const TotalPreorder& p0, const CheckConfig& cfg);

// Combines per-run reports for the same postulate list (used to aggregate
// ranking-induced revision over every enumerated preorder).
std::vector<CheckReport> merge_reports(std::vector<std::vector<CheckReport>> runs);

}  // namespace revlab
