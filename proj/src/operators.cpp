#include "revlab/operators.hpp"

#include <algorithm>

namespace revlab {

RevisionAssignment RevisionAssignment::single_state(const TotalPreorder& p) {
  RevisionAssignment a{p, {}};
  a.assign.emplace(bel_preorder(p), p);
  return a;
}

RevisionAssignment RevisionAssignment::derived_total(const TotalPreorder& prior,
                                                     const Vocabulary& vocab) {
  RevisionAssignment a{prior, {}};
  const WorldId n = vocab.world_count();
  const std::uint64_t sets = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < sets; ++mask) {
    WorldSet ws(n);
    for (WorldId w = 0; w < n; ++w) {
      if ((mask >> w) & 1u) ws.insert(w);
    }
    std::vector<std::uint32_t> ranks(n);
    for (WorldId w = 0; w < n; ++w) {
      ranks[w] = ws.contains(w) ? 0 : prior.rank(w) + 1;
    }
    a.assign.emplace(BeliefSet{ws}, TotalPreorder(std::move(ranks)));
  }
  return a;
}

BeliefSet agm_revise(const RevisionAssignment& a, const BeliefSet& k, const Formula& f,
                     const Vocabulary& vocab) {
  const WorldSet fmodels = models(f, vocab);
  if (fmodels.empty()) throw DomainError("revision by an unsatisfiable formula");
  if (!consistent(k)) return BeliefSet{min_worlds(a.prior, fmodels)};
  auto it = a.assign.find(k);
  if (it == a.assign.end()) {
    throw DomainError("no ranking assigned to this belief set");
  }
  return BeliefSet{min_worlds(it->second, fmodels)};
}

TotalPreorder boutilier_revise(const TotalPreorder& p, const WorldSet& fmodels) {
  if (fmodels.empty()) throw DomainError("revision by an unsatisfiable formula");
  const WorldSet promoted = min_worlds(p, fmodels);
  std::vector<std::uint32_t> ranks(p.world_count());
  for (WorldId w = 0; w < p.world_count(); ++w) {
    ranks[w] = promoted.contains(w) ? 0 : p.rank(w) + 1;
  }
  return TotalPreorder(std::move(ranks));
}

TotalPreorder boutilier_revise(const TotalPreorder& p, const Formula& f,
                               const Vocabulary& vocab) {
  return boutilier_revise(p, models(f, vocab));
}

Ocf spohn_condition(const Ocf& k, const WorldSet& fmodels, Firmness a) {
  const Rank kf = kappa_value(k, fmodels);
  if (kf.is_infinite()) {
    throw DomainError("conditioning on a formula ranked impossible");
  }
  const Rank knf = kappa_value(k, fmodels.complement());
  std::vector<Rank> ranks;
  ranks.reserve(k.world_count());
  for (WorldId w = 0; w < k.world_count(); ++w) {
    const Rank r = k.rank(w);
    if (r.is_infinite()) {
      ranks.push_back(Rank::infinity());
    } else if (fmodels.contains(w)) {
      ranks.push_back(r.minus(kf.finite_value()));
    } else {
      // knf <= r < inf here, so the subtraction is finite.
      ranks.push_back(r.minus(knf.finite_value()).plus(a));
    }
  }
  return Ocf(std::move(ranks));
}

Ocf spohn_condition(const Ocf& k, const Formula& f, Firmness a, const Vocabulary& vocab) {
  return spohn_condition(k, models(f, vocab), a);
}

Ocf dp_revise(const Ocf& k, const WorldSet& fmodels) {
  if (kappa_value(k, fmodels).is_infinite()) {
    throw DomainError("conditioning on a formula ranked impossible");
  }
  if (kappa_value(k, fmodels.complement()) >= Rank(1)) return k;
  return spohn_condition(k, fmodels, Rank(1));
}

Ocf dp_revise(const Ocf& k, const Formula& f, const Vocabulary& vocab) {
  return dp_revise(k, models(f, vocab));
}

KnowledgeState make_knowledge_state(Ocf prior) {
  if (!prior.all_finite()) {
    throw DomainError("knowledge state requires an all-finite prior");
  }
  return KnowledgeState{{}, std::move(prior)};
}

WorldSet known_worlds(const KnowledgeState& s, const Vocabulary& vocab) {
  WorldSet ws = WorldSet::all(vocab.world_count());
  for (const Formula& f : s.observations) ws = ws.intersect(models(f, vocab));
  return ws;
}

KnowledgeState knowledge_observe(const KnowledgeState& s, const Formula& f,
                                 const Vocabulary& vocab) {
  const WorldSet fmodels = models(f, vocab);
  if (kappa_value(s.kappa, fmodels).is_infinite()) {
    throw DomainError("observation contradicts prior observations");
  }
  KnowledgeState next{s.observations, spohn_condition(s.kappa, fmodels, Rank::infinity())};
  next.observations.push_back(f);
  return next;
}

BeliefSet fl_revise(const TotalPreorder& prior, const BeliefSet& k, const Formula& f,
                    const Vocabulary& vocab) {
  const WorldSet fmodels = models(f, vocab);
  if (fmodels.empty()) throw DomainError("revision by an unsatisfiable formula");
  if (consistent(k) && k.models.intersects(fmodels)) {
    return BeliefSet{k.models.intersect(fmodels)};
  }
  return BeliefSet{min_worlds(prior, fmodels)};
}

BelEvaluator make_knowledge_evaluator(const Ocf& initial, const Vocabulary& vocab) {
  if (!initial.all_finite()) {
    throw DomainError("knowledge evaluator requires an all-finite initial OCF");
  }
  auto kappa_after = [initial, vocab](const SequenceState& s) {
    KnowledgeState ks = make_knowledge_state(initial);
    for (const Formula& f : s.observations) ks = knowledge_observe(ks, f, vocab);
    return ks.kappa;
  };
  auto in_domain = [vocab](const SequenceState& s) {
    WorldSet ws = WorldSet::all(vocab.world_count());
    for (const Formula& f : s.observations) ws = ws.intersect(models(f, vocab));
    return !ws.empty();
  };
  BelEvaluator e;
  e.kind = "knowledge";
  e.in_domain = in_domain;
  e.bel = [kappa_after](const SequenceState& s) { return bel_ocf(kappa_after(s)); };
  e.kappa_after = kappa_after;
  return e;
}

BeliefSet sequence_bel(const SequenceState& s, const BelEvaluator& evaluator) {
  if (!evaluator.in_domain(s)) {
    throw DomainError("sequence outside the evaluator's domain");
  }
  return evaluator.bel(s);
}

}  // namespace revlab
