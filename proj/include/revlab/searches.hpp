#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revlab/postulates.hpp"

namespace revlab {

// Two OCFs with the same belief set whose DP revisions by some formula
// produce different belief sets: the induced mapping on belief sets is not
// functional.
struct DpNonfunctionalWitness {
  Ocf k1;
  Ocf k2;
  Formula revising;
  BeliefSet bel_common;
  BeliefSet bel1_after;
  BeliefSet bel2_after;
};

struct DpNonfunctionalResult {
  std::optional<DpNonfunctionalWitness> witness;  // first in enumeration order
  std::uint64_t triples_examined = 0;
};

DpNonfunctionalResult search_dp_nonfunctional(const CheckConfig& cfg);

// Mechanical case analysis over every candidate operator table on
// (belief sets x formula classes): values are narrowed by R1-R4, then C2
// instances propagate equalities between cells; remaining freedom is split
// exhaustively.  closed = every candidate table violates R1-R4 + C2.
// include_false controls whether the table is total on the unsatisfiable
// class as well (AGM revision takes arbitrary formulas).
struct C2CaseAnalysis {
  bool closed = false;
  bool include_false = true;
  std::uint64_t branches_explored = 0;
  std::vector<std::string> derivation;          // forced values, propagations, splits
  std::optional<std::string> satisfying_table;  // rendered when not closed
};

C2CaseAnalysis c2_case_analysis(const Vocabulary& vocab, bool include_false = true);

// The combined demonstration: the non-functionality witness plus the case
// analysis.
struct C2IncompatibilityReport {
  DpNonfunctionalResult nonfunctional;
  C2CaseAnalysis analysis;
};

C2IncompatibilityReport search_c2_incompatibility(const CheckConfig& cfg);

}  // namespace revlab
