#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revlab/logic.hpp"
#include "revlab/rankings.hpp"

namespace revlab {

// Family of rankings, one per belief set, as required by the Grove/KM
// representation of AGM revision.  There is no necessary connection between
// the rankings of different belief sets; the designated prior serves the
// inconsistent belief set.
struct RevisionAssignment {
  TotalPreorder prior;
  std::map<BeliefSet, TotalPreorder> assign;

  // Assignment defined only at Bel(p) (and at the inconsistent set, via the
  // prior).
  static RevisionAssignment single_state(const TotalPreorder& p);
  // Total assignment derived from a prior: every consistent K is ranked with
  // its own models at rank 0 and all other worlds in prior order above.
  static RevisionAssignment derived_total(const TotalPreorder& prior, const Vocabulary& vocab);
};

// Ranking-induced AGM revision: the result holds exactly the minimal f-worlds
// of the ranking assigned to K.  f must be satisfiable; K must be in the
// assignment's domain (or inconsistent, which uses the prior).
BeliefSet agm_revise(const RevisionAssignment& a, const BeliefSet& k, const Formula& f,
                     const Vocabulary& vocab);

// Natural revision: the minimal f-worlds become the unique minimal rank; the
// relative ranks of all other worlds stay unchanged.  Result is normalized.
TotalPreorder boutilier_revise(const TotalPreorder& p, const Formula& f, const Vocabulary& vocab);
TotalPreorder boutilier_revise(const TotalPreorder& p, const WorldSet& fmodels);

// Conditioning: shifts models of f down to 0 and models of !f to firmness a,
// preserving rank differences on each side; impossible worlds stay
// impossible.  Requires kappa(f) < inf.
Ocf spohn_condition(const Ocf& k, const Formula& f, Firmness a, const Vocabulary& vocab);
Ocf spohn_condition(const Ocf& k, const WorldSet& fmodels, Firmness a);

// Conditioning to firmness 1 unless f is already believed with firmness >= 1,
// in which case the state is returned unchanged.
Ocf dp_revise(const Ocf& k, const Formula& f, const Vocabulary& vocab);
Ocf dp_revise(const Ocf& k, const WorldSet& fmodels);

// Observation sequence plus the OCF it induces.  Worlds falsifying some
// observation are exactly the infinitely-ranked ones.
struct KnowledgeState {
  std::vector<Formula> observations;
  Ocf kappa;
};

// Fresh state from an all-finite prior (nothing is known yet).
KnowledgeState make_knowledge_state(Ocf prior);

// Returns the conjunction of the observations' model sets.
WorldSet known_worlds(const KnowledgeState& s, const Vocabulary& vocab);

// Observing f conditions the state on f with firmness infinity: f becomes
// knowledge and can never be retracted.  f must be compatible with current
// knowledge (kappa(f) < inf).
KnowledgeState knowledge_observe(const KnowledgeState& s, const Formula& f,
                                 const Vocabulary& vocab);

// Severe revision: expansion while f is consistent with K; otherwise the
// belief set is rebuilt from the minimal f-worlds of the fixed prior, as if
// starting over from scratch.
BeliefSet fl_revise(const TotalPreorder& prior, const BeliefSet& k, const Formula& f,
                    const Vocabulary& vocab);

// Observation sequence in which each formula is individually satisfiable;
// joint consistency is not required.
struct SequenceState {
  std::vector<Formula> observations;
};

// Maps observation sequences to belief sets; partial (in_domain guards bel).
struct BelEvaluator {
  std::string kind;
  std::function<bool(const SequenceState&)> in_domain;
  std::function<BeliefSet(const SequenceState&)> bel;
  // Set for the knowledge evaluator; exposes the OCF behind a sequence.
  std::function<Ocf(const SequenceState&)> kappa_after;
};

// Threads knowledge_observe through the sequence from an all-finite initial
// OCF; defined exactly on jointly consistent sequences.
BelEvaluator make_knowledge_evaluator(const Ocf& initial, const Vocabulary& vocab);

BeliefSet sequence_bel(const SequenceState& s, const BelEvaluator& evaluator);

}  // namespace revlab
