#include "revlab/searches.hpp"

#include <algorithm>
#include <bit>

namespace revlab {

DpNonfunctionalResult search_dp_nonfunctional(const CheckConfig& cfg) {
  const Vocabulary& vocab = cfg.vocab;
  const auto ocfs = enumerate_ocfs(vocab.world_count(), cfg.max_rank, cfg.allow_inf);

  std::vector<Formula> sat;
  std::vector<WorldSet> sat_models;
  for (const Formula& f : cfg.formula_pool) {
    WorldSet m = models(f, vocab);
    if (!m.empty()) {
      sat.push_back(f);
      sat_models.push_back(std::move(m));
    }
  }

  DpNonfunctionalResult result;
  for (std::size_t i = 0; i < ocfs.size(); ++i) {
    const BeliefSet bel_i = bel_ocf(ocfs[i]);
    for (std::size_t j = i + 1; j < ocfs.size(); ++j) {
      if (bel_ocf(ocfs[j]) != bel_i) continue;
      for (std::size_t fi = 0; fi < sat.size(); ++fi) {
        const WorldSet& fm = sat_models[fi];
        if (kappa_value(ocfs[i], fm).is_infinite() ||
            kappa_value(ocfs[j], fm).is_infinite()) {
          continue;
        }
        ++result.triples_examined;
        const BeliefSet b1 = bel_ocf(dp_revise(ocfs[i], fm));
        const BeliefSet b2 = bel_ocf(dp_revise(ocfs[j], fm));
        if (b1 != b2) {
          result.witness =
              DpNonfunctionalWitness{ocfs[i], ocfs[j], sat[fi], bel_i, b1, b2};
          return result;
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// C2 case analysis
//
// Belief sets and formula classes are both world-set masks; a candidate table
// maps (K, phi) to a result mask.  Per-cell candidate sets are bitmasks over
// result masks.

namespace {

using Mask = std::uint32_t;      // model set of a belief set or formula class
using CandSet = std::uint32_t;   // bit b set: result mask b still possible

struct Analysis {
  Vocabulary vocab;
  std::uint32_t worlds;
  std::uint32_t belief_sets;            // 2^worlds
  std::vector<Mask> classes;            // formula classes included
  std::vector<std::string> class_text;  // canonical DNF per class
  std::vector<std::string> set_text;    // canonical DNF per belief set mask

  std::uint64_t branches = 0;
  std::vector<std::string> log;
  static constexpr std::size_t kLogCap = 400;

  void note(std::size_t depth, const std::string& line) {
    if (log.size() == kLogCap) {
      log.push_back("... (log truncated)");
      return;
    }
    if (log.size() > kLogCap) return;
    log.push_back(std::string(2 * depth, ' ') + line);
  }

  std::size_t cell(std::size_t k, std::size_t c) const { return k * classes.size() + c; }
  std::string cell_name(std::size_t k, std::size_t c) const {
    return "(" + set_text[k] + ") * (" + class_text[c] + ")";
  }
};

std::string render_mask(Mask m, const Vocabulary& vocab) {
  WorldSet ws(vocab.world_count());
  for (WorldId w = 0; w < vocab.world_count(); ++w) {
    if ((m >> w) & 1u) ws.insert(w);
  }
  return belief_set_to_string(BeliefSet{ws}, vocab);
}

// Fixpoint propagation of the C2 equalities over determined inner cells.
// Returns false on contradiction (some cell lost all candidates).
bool propagate(Analysis& a, std::vector<CandSet>& cand, std::size_t depth) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < a.belief_sets; ++k) {
      for (std::size_t ci = 0; ci < a.classes.size(); ++ci) {
        const CandSet inner = cand[a.cell(k, ci)];
        if (std::popcount(inner) != 1) continue;
        const Mask result = static_cast<Mask>(std::countr_zero(inner));
        // C2 instances with this inner revision: phi disjoint from psi.
        for (std::size_t fi = 0; fi < a.classes.size(); ++fi) {
          if ((a.classes[fi] & a.classes[ci]) != 0) continue;  // phi |-/- !psi
          const std::size_t left = a.cell(result, fi);
          const std::size_t right = a.cell(k, fi);
          if (left == right) continue;
          const CandSet meet = cand[left] & cand[right];
          if (meet == cand[left] && meet == cand[right]) continue;
          a.note(depth, "C2 with K = " + a.set_text[k] + ", psi = " + a.class_text[ci] +
                            ", phi = " + a.class_text[fi] + ": cell " +
                            a.cell_name(result, fi) + " must equal cell " +
                            a.cell_name(k, fi));
          if (meet == 0) {
            a.note(depth, "contradiction: no candidate value remains for " +
                              a.cell_name(k, fi));
            return false;
          }
          cand[left] = meet;
          cand[right] = meet;
          changed = true;
        }
      }
    }
  }
  return true;
}

std::string render_table(const Analysis& a, const std::vector<CandSet>& cand) {
  std::string out;
  for (std::size_t k = 0; k < a.belief_sets; ++k) {
    for (std::size_t ci = 0; ci < a.classes.size(); ++ci) {
      const CandSet c = cand[a.cell(k, ci)];
      const Mask result = static_cast<Mask>(std::countr_zero(c));
      out += a.cell_name(k, ci) + " = " + render_mask(result, a.vocab) + "\n";
    }
  }
  return out;
}

// Verifies a fully determined table against R1-R4 and C2 from scratch.
bool verify_table(const Analysis& a, const std::vector<CandSet>& cand) {
  auto value = [&](std::size_t k, std::size_t ci) -> Mask {
    return static_cast<Mask>(std::countr_zero(cand[a.cell(k, ci)]));
  };
  for (std::size_t k = 0; k < a.belief_sets; ++k) {
    for (std::size_t ci = 0; ci < a.classes.size(); ++ci) {
      const Mask f = a.classes[ci];
      const Mask r = value(k, ci);
      if ((r & ~f) != 0) return false;                           // R2
      if (((static_cast<Mask>(k) & f) & ~r) != 0) return false;  // R3
      if (k != 0 && (static_cast<Mask>(k) & f) != 0 &&
          r != (static_cast<Mask>(k) & f)) {
        return false;  // R4 (with R3)
      }
      for (std::size_t fi = 0; fi < a.classes.size(); ++fi) {
        if ((a.classes[fi] & f) != 0) continue;
        if (value(r, fi) != value(k, fi)) return false;  // C2
      }
    }
  }
  return true;
}

// Exhausts the remaining freedom.  Returns a satisfying assignment if one
// exists; nullopt when every completion hits a contradiction.
std::optional<std::vector<CandSet>> explore(Analysis& a, std::vector<CandSet> cand,
                                            std::size_t depth) {
  if (!propagate(a, cand, depth)) return std::nullopt;

  std::size_t split = cand.size();
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (std::popcount(cand[i]) > 1) {
      split = i;
      break;
    }
  }
  if (split == cand.size()) {
    ++a.branches;
    if (verify_table(a, cand)) return cand;
    a.note(depth, "fully determined table fails re-verification");
    return std::nullopt;
  }

  const std::size_t k = split / a.classes.size();
  const std::size_t ci = split % a.classes.size();
  std::optional<std::vector<CandSet>> found;
  for (Mask r = 0; r < a.belief_sets; ++r) {
    if (((cand[split] >> r) & 1u) == 0) continue;
    a.note(depth, "case: " + a.cell_name(k, ci) + " = " + render_mask(r, a.vocab));
    std::vector<CandSet> branch = cand;
    branch[split] = CandSet{1} << r;
    auto sub = explore(a, std::move(branch), depth + 1);
    if (sub) {
      found = std::move(sub);
      break;
    }
    a.note(depth, "case closed");
  }
  return found;
}

}  // namespace

C2CaseAnalysis c2_case_analysis(const Vocabulary& vocab, bool include_false) {
  if (vocab.size() > 2) {
    throw DomainError("C2 case analysis supports at most 2 atoms");
  }
  Analysis a{vocab, vocab.world_count(), 0, {}, {}, {}, 0, {}};
  a.belief_sets = std::uint32_t{1} << a.worlds;
  for (Mask m = 0; m < a.belief_sets; ++m) {
    if (m == 0 && !include_false) continue;
    a.classes.push_back(m);
  }
  for (Mask m : a.classes) a.class_text.push_back(render_mask(m, vocab));
  for (Mask m = 0; m < a.belief_sets; ++m) a.set_text.push_back(render_mask(m, vocab));

  // Initial candidate sets from R1-R4.
  std::vector<CandSet> cand(a.belief_sets * a.classes.size(), 0);
  std::size_t forced = 0;
  for (std::size_t k = 0; k < a.belief_sets; ++k) {
    for (std::size_t ci = 0; ci < a.classes.size(); ++ci) {
      const Mask f = a.classes[ci];
      CandSet c = 0;
      for (Mask r = 0; r < a.belief_sets; ++r) {
        if ((r & ~f) != 0) continue;                          // R2: result entails phi
        if (((static_cast<Mask>(k) & f) & ~r) != 0) continue;  // R3
        if (k != 0 && (static_cast<Mask>(k) & f) != 0 &&
            r != (static_cast<Mask>(k) & f)) {
          continue;  // R4
        }
        c |= CandSet{1} << r;
      }
      cand[a.cell(k, ci)] = c;
      if (std::popcount(c) == 1) ++forced;
    }
  }
  a.note(0, "R1-R4 admit candidate values cell by cell; " + std::to_string(forced) + " of " +
                std::to_string(cand.size()) + " cells are forced outright");

  auto table = explore(a, std::move(cand), 0);

  C2CaseAnalysis out;
  out.include_false = include_false;
  out.branches_explored = a.branches;
  out.derivation = std::move(a.log);
  if (table) {
    out.closed = false;
    out.satisfying_table = render_table(a, *table);
    out.derivation.push_back("a table satisfying R1-R4 and C2 exists at this vocabulary");
  } else {
    out.closed = true;
    out.derivation.push_back(
        "every candidate table violates R1-R4 + C2: the case analysis is closed");
  }
  return out;
}

C2IncompatibilityReport search_c2_incompatibility(const CheckConfig& cfg) {
  C2IncompatibilityReport report{search_dp_nonfunctional(cfg),
                                 c2_case_analysis(cfg.vocab, /*include_false=*/true)};
  return report;
}

}  // namespace revlab
