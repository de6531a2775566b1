#include "revlab/postulates.hpp"

#include <algorithm>

namespace revlab {

std::string PostulateId::name() const {
  switch (family) {
    case PostulateFamily::R:
      return "R" + std::to_string(index);
    case PostulateFamily::RPrime:
      return "R" + std::to_string(index) + "'";
    case PostulateFamily::C:
      return "C" + std::to_string(index);
    case PostulateFamily::CPrime:
      return "C" + std::to_string(index) + "'";
    case PostulateFamily::FL:
      return "FL";
    case PostulateFamily::I:
      return "I" + std::to_string(index);
    case PostulateFamily::R9Prime:
      return "R9'";
    case PostulateFamily::WeakI4:
      return "weak-I4";
    case PostulateFamily::Nullification:
      return "nullification";
  }
  return "?";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Vacuous:
      return "vacuous";
  }
  return "?";
}

CheckConfig CheckConfig::exhaustive(Vocabulary vocab) {
  if (vocab.size() > 3) {
    throw DomainError("exhaustive checking requires at most 3 atoms");
  }
  auto pool = enumerate_formula_classes(vocab);
  CheckConfig cfg{.vocab = std::move(vocab), .formula_pool = std::move(pool)};
  return cfg;
}

namespace {

struct PoolEntry {
  Formula formula;
  WorldSet mset;
  std::string text;
};

std::vector<PoolEntry> build_pool(const std::vector<Formula>& pool, const Vocabulary& vocab) {
  std::vector<PoolEntry> out;
  out.reserve(pool.size());
  for (const Formula& f : pool) {
    out.push_back(PoolEntry{f, models(f, vocab), formula_to_string(f)});
  }
  return out;
}

enum class Outcome : std::uint8_t { Holds, Violated, PreconditionUnmet, OutOfDomain, OpRejected };

// Evaluates every instance of one postulate and assembles the report in
// enumeration order, independent of the execution interleaving.
CheckReport run_grid(PostulateId id, std::uint64_t count, const CheckConfig& cfg,
                     const std::function<Outcome(std::uint64_t)>& eval,
                     const std::function<Counterexample(std::uint64_t)>& describe) {
  std::vector<std::uint8_t> outcomes(count);
  for_each_index(count, cfg.mode, [&](std::size_t i) {
    Outcome o;
    try {
      o = eval(i);
    } catch (const Error&) {
      o = Outcome::OpRejected;
    }
    outcomes[i] = static_cast<std::uint8_t>(o);
  });

  CheckReport report;
  report.postulate = id;
  for (std::uint64_t i = 0; i < count; ++i) {
    switch (static_cast<Outcome>(outcomes[i])) {
      case Outcome::Holds:
        ++report.instances_checked;
        break;
      case Outcome::Violated:
        ++report.instances_checked;
        ++report.failures_total;
        if (report.counterexamples.size() < cfg.max_counterexamples) {
          report.counterexamples.push_back(describe(i));
        }
        break;
      case Outcome::PreconditionUnmet:
        break;
      case Outcome::OutOfDomain:
        ++report.domain_skipped;
        break;
      case Outcome::OpRejected:
        throw DomainError("operator rejected an in-scope input while checking " + id.name());
    }
  }
  report.status = report.failures_total > 0
                      ? CheckStatus::Fail
                      : (report.instances_checked > 0 ? CheckStatus::Pass : CheckStatus::Vacuous);
  return report;
}

std::string set_str(const BeliefSet& k, const Vocabulary& v) {
  return belief_set_to_string(k, v);
}

}  // namespace

// ---------------------------------------------------------------------------
// Belief-set-level operators

BeliefRevisionOp ranking_induced_op(const TotalPreorder& p, const Vocabulary& vocab) {
  RevisionAssignment a = RevisionAssignment::single_state(p);
  BeliefRevisionOp op;
  op.name = "ranking[" + rank_map_to_string(p, vocab) + "]";
  op.domain = {bel_preorder(p)};
  op.revise = [a, vocab](const BeliefSet& k, const Formula& f) {
    return agm_revise(a, k, f, vocab);
  };
  return op;
}

namespace {

std::vector<BeliefSet> all_belief_sets(const Vocabulary& vocab) {
  const WorldId n = vocab.world_count();
  std::vector<BeliefSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    WorldSet ws(n);
    for (WorldId w = 0; w < n; ++w) {
      if ((mask >> w) & 1u) ws.insert(w);
    }
    out.push_back(BeliefSet{ws});
  }
  return out;
}

}  // namespace

BeliefRevisionOp fl_op(const TotalPreorder& prior, const Vocabulary& vocab) {
  BeliefRevisionOp op;
  op.name = "fl[" + rank_map_to_string(prior, vocab) + "]";
  op.domain = all_belief_sets(vocab);
  op.revise = [prior, vocab](const BeliefSet& k, const Formula& f) {
    return fl_revise(prior, k, f, vocab);
  };
  return op;
}

BeliefRevisionOp expand_always_op(const Vocabulary& vocab) {
  BeliefRevisionOp op;
  op.name = "expand-always";
  op.domain = all_belief_sets(vocab);
  op.revise = [vocab](const BeliefSet& k, const Formula& f) { return expand(k, f, vocab); };
  return op;
}

// ---------------------------------------------------------------------------
// check_r / check_fl / check_c

std::vector<CheckReport> check_r(const BeliefRevisionOp& op, const CheckConfig& cfg) {
  const Vocabulary& vocab = cfg.vocab;
  const auto pool = build_pool(cfg.formula_pool, vocab);
  const std::uint64_t D = op.domain.size();
  const std::uint64_t F = pool.size();

  auto K = [&](std::uint64_t idx) -> const BeliefSet& { return op.domain[idx]; };

  auto base_bindings = [&](std::uint64_t d) {
    std::vector<std::pair<std::string, std::string>> b;
    b.emplace_back("operator", op.name);
    b.emplace_back("K", set_str(K(d), vocab));
    return b;
  };

  std::vector<CheckReport> reports;

  // R1/R2/R3/R5: one revision per (K, phi).
  struct Single {
    int index;
    std::function<bool(const BeliefSet& k, const PoolEntry& f, const BeliefSet& result)> holds;
  };
  const std::vector<Single> singles = {
      {1, [&](const BeliefSet&, const PoolEntry&, const BeliefSet& r) {
         return r.models.universe() == vocab.world_count();
       }},
      {2, [&](const BeliefSet&, const PoolEntry& f, const BeliefSet& r) {
         return r.models.subset_of(f.mset);
       }},
      {3, [&](const BeliefSet& k, const PoolEntry& f, const BeliefSet& r) {
         return k.models.intersect(f.mset).subset_of(r.models);
       }},
      {5, [&](const BeliefSet&, const PoolEntry&, const BeliefSet& r) {
         return consistent(r);
       }},
  };
  for (const auto& s : singles) {
    reports.push_back(run_grid(
        {PostulateFamily::R, s.index}, D * F, cfg,
        [&](std::uint64_t i) {
          const auto& f = pool[i % F];
          if (f.mset.empty()) return Outcome::OutOfDomain;
          const BeliefSet r = op.revise(K(i / F), f.formula);
          return s.holds(K(i / F), f, r) ? Outcome::Holds : Outcome::Violated;
        },
        [&](std::uint64_t i) {
          const auto& f = pool[i % F];
          Counterexample ce{i, base_bindings(i / F), {}};
          ce.bindings.emplace_back("phi", f.text);
          ce.trace = "K * phi = " + set_str(op.revise(K(i / F), f.formula), vocab);
          return ce;
        }));
  }

  // R4: if !phi not in K then Cl(K u {phi}) is contained in K * phi.
  reports.push_back(run_grid(
      {PostulateFamily::R, 4}, D * F, cfg,
      [&](std::uint64_t i) {
        const auto& f = pool[i % F];
        if (f.mset.empty()) return Outcome::OutOfDomain;
        const BeliefSet& k = K(i / F);
        if (!k.models.intersects(f.mset)) return Outcome::PreconditionUnmet;
        const BeliefSet r = op.revise(k, f.formula);
        return r.models.subset_of(k.models.intersect(f.mset)) ? Outcome::Holds
                                                              : Outcome::Violated;
      },
      [&](std::uint64_t i) {
        const auto& f = pool[i % F];
        Counterexample ce{i, base_bindings(i / F), {}};
        ce.bindings.emplace_back("phi", f.text);
        ce.trace = "K * phi = " + set_str(op.revise(K(i / F), f.formula), vocab);
        return ce;
      }));

  // R6: syntactic variants with equal model sets revise identically.
  reports.push_back(run_grid(
      {PostulateFamily::R, 6}, D * F, cfg,
      [&](std::uint64_t i) {
        const auto& f = pool[i % F];
        if (f.mset.empty()) return Outcome::OutOfDomain;
        const Formula variant = Formula::negation(Formula::negation(f.formula));
        const BeliefSet a = op.revise(K(i / F), f.formula);
        const BeliefSet b = op.revise(K(i / F), variant);
        return a == b ? Outcome::Holds : Outcome::Violated;
      },
      [&](std::uint64_t i) {
        const auto& f = pool[i % F];
        Counterexample ce{i, base_bindings(i / F), {}};
        ce.bindings.emplace_back("phi", f.text);
        ce.bindings.emplace_back("psi", "!!(" + f.text + ")");
        ce.trace = "K * phi = " + set_str(op.revise(K(i / F), f.formula), vocab);
        return ce;
      }));

  // R7/R8 over (K, phi, psi) with the literal conjunction phi & psi.
  auto pair_entry = [&](std::uint64_t i) {
    const std::uint64_t d = i / (F * F);
    const std::uint64_t fi = (i / F) % F;
    const std::uint64_t gi = i % F;
    return std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>(d, fi, gi);
  };

  reports.push_back(run_grid(
      {PostulateFamily::R, 7}, D * F * F, cfg,
      [&](std::uint64_t i) {
        auto [d, fi, gi] = pair_entry(i);
        const auto& f = pool[fi];
        const auto& g = pool[gi];
        const WorldSet conj = f.mset.intersect(g.mset);
        if (f.mset.empty() || conj.empty()) return Outcome::OutOfDomain;
        const BeliefSet via_conj = op.revise(K(d), Formula::conjunction(f.formula, g.formula));
        const BeliefSet via_f = op.revise(K(d), f.formula);
        return via_f.models.intersect(g.mset).subset_of(via_conj.models) ? Outcome::Holds
                                                                         : Outcome::Violated;
      },
      [&](std::uint64_t i) {
        auto [d, fi, gi] = pair_entry(i);
        Counterexample ce{i, base_bindings(d), {}};
        ce.bindings.emplace_back("phi", pool[fi].text);
        ce.bindings.emplace_back("psi", pool[gi].text);
        ce.trace =
            "K * (phi & psi) = " +
            set_str(op.revise(K(d), Formula::conjunction(pool[fi].formula, pool[gi].formula)),
                    vocab) +
            "; K * phi = " + set_str(op.revise(K(d), pool[fi].formula), vocab);
        return ce;
      }));

  reports.push_back(run_grid(
      {PostulateFamily::R, 8}, D * F * F, cfg,
      [&](std::uint64_t i) {
        auto [d, fi, gi] = pair_entry(i);
        const auto& f = pool[fi];
        const auto& g = pool[gi];
        const WorldSet conj = f.mset.intersect(g.mset);
        if (f.mset.empty() || conj.empty()) return Outcome::OutOfDomain;
        const BeliefSet via_f = op.revise(K(d), f.formula);
        if (!via_f.models.intersects(g.mset)) return Outcome::PreconditionUnmet;
        const BeliefSet via_conj = op.revise(K(d), Formula::conjunction(f.formula, g.formula));
        return via_conj.models.subset_of(via_f.models.intersect(g.mset)) ? Outcome::Holds
                                                                         : Outcome::Violated;
      },
      [&](std::uint64_t i) {
        auto [d, fi, gi] = pair_entry(i);
        Counterexample ce{i, base_bindings(d), {}};
        ce.bindings.emplace_back("phi", pool[fi].text);
        ce.bindings.emplace_back("psi", pool[gi].text);
        ce.trace =
            "K * (phi & psi) = " +
            set_str(op.revise(K(d), Formula::conjunction(pool[fi].formula, pool[gi].formula)),
                    vocab) +
            "; K * phi = " + set_str(op.revise(K(d), pool[fi].formula), vocab);
        return ce;
      }));

  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) {
                     return a.postulate.index < b.postulate.index;
                   });
  return reports;
}

CheckReport check_fl(const BeliefRevisionOp& op, const CheckConfig& cfg) {
  const Vocabulary& vocab = cfg.vocab;
  const auto pool = build_pool(cfg.formula_pool, vocab);
  const std::uint64_t F = pool.size();
  const std::uint64_t D = op.domain.size();
  const BeliefSet bottom = inconsistent_belief_set(vocab);

  return run_grid(
      {PostulateFamily::FL, 0}, D * F, cfg,
      [&](std::uint64_t i) {
        const auto& f = pool[i % F];
        if (f.mset.empty()) return Outcome::OutOfDomain;
        const BeliefSet& k = op.domain[i / F];
        if (k.models.intersects(f.mset)) return Outcome::PreconditionUnmet;  // !phi not in K
        return op.revise(k, f.formula) == op.revise(bottom, f.formula) ? Outcome::Holds
                                                                       : Outcome::Violated;
      },
      [&](std::uint64_t i) {
        const auto& f = pool[i % F];
        const BeliefSet& k = op.domain[i / F];
        Counterexample ce{i, {{"operator", op.name}, {"K", set_str(k, vocab)}}, {}};
        ce.bindings.emplace_back("phi", f.text);
        ce.trace = "K * phi = " + set_str(op.revise(k, f.formula), vocab) +
                   "; K_bot * phi = " + set_str(op.revise(bottom, f.formula), vocab);
        return ce;
      });
}

std::vector<CheckReport> check_c(const BeliefRevisionOp& op, const CheckConfig& cfg) {
  const Vocabulary& vocab = cfg.vocab;
  const auto pool = build_pool(cfg.formula_pool, vocab);
  const std::uint64_t F = pool.size();
  const std::uint64_t D = op.domain.size();

  auto decode = [&](std::uint64_t i) {
    return std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>(i / (F * F), (i / F) % F,
                                                                   i % F);
  };
  auto describe = [&](std::uint64_t i) {
    auto [d, fi, gi] = decode(i);
    Counterexample ce{i,
                      {{"operator", op.name},
                       {"K", set_str(op.domain[d], vocab)},
                       {"phi", pool[fi].text},
                       {"psi", pool[gi].text}},
                      {}};
    const BeliefSet inner = op.revise(op.domain[d], pool[gi].formula);
    ce.trace = "K * psi = " + set_str(inner, vocab) +
               "; (K * psi) * phi = " + set_str(op.revise(inner, pool[fi].formula), vocab) +
               "; K * phi = " + set_str(op.revise(op.domain[d], pool[fi].formula), vocab);
    return ce;
  };

  std::vector<CheckReport> reports;

  // C1: phi |- psi  =>  (K * psi) * phi = K * phi
  // C2: phi |- !psi =>  (K * psi) * phi = K * phi
  for (int index : {1, 2}) {
    reports.push_back(run_grid(
        {PostulateFamily::C, index}, D * F * F, cfg,
        [&, index](std::uint64_t i) {
          auto [d, fi, gi] = decode(i);
          const auto& f = pool[fi];
          const auto& g = pool[gi];
          if (f.mset.empty() || g.mset.empty()) return Outcome::OutOfDomain;
          const bool pre = index == 1 ? f.mset.subset_of(g.mset) : !f.mset.intersects(g.mset);
          if (!pre) return Outcome::PreconditionUnmet;
          const BeliefSet lhs = op.revise(op.revise(op.domain[d], g.formula), f.formula);
          const BeliefSet rhs = op.revise(op.domain[d], f.formula);
          return lhs == rhs ? Outcome::Holds : Outcome::Violated;
        },
        describe));
  }

  // C3: psi in K * phi  =>  psi in (K * psi) * phi
  // C4: !psi not in K * phi  =>  !psi not in (K * psi) * phi
  for (int index : {3, 4}) {
    reports.push_back(run_grid(
        {PostulateFamily::C, index}, D * F * F, cfg,
        [&, index](std::uint64_t i) {
          auto [d, fi, gi] = decode(i);
          const auto& f = pool[fi];
          const auto& g = pool[gi];
          if (f.mset.empty() || g.mset.empty()) return Outcome::OutOfDomain;
          const BeliefSet via_f = op.revise(op.domain[d], f.formula);
          const bool pre = index == 3 ? via_f.models.subset_of(g.mset)
                                      : via_f.models.intersects(g.mset);
          if (!pre) return Outcome::PreconditionUnmet;
          const BeliefSet lhs = op.revise(op.revise(op.domain[d], g.formula), f.formula);
          const bool holds =
              index == 3 ? lhs.models.subset_of(g.mset) : lhs.models.intersects(g.mset);
          return holds ? Outcome::Holds : Outcome::Violated;
        },
        describe));
  }

  return reports;
}

// ---------------------------------------------------------------------------
// Epistemic-state operators

EpistemicOp make_boutilier_op(const CheckConfig& cfg) {
  const Vocabulary vocab = cfg.vocab;
  EpistemicOp op;
  op.name = "boutilier";
  for (auto& p : enumerate_preorders(vocab.world_count())) {
    op.states.emplace_back(std::move(p));
  }
  op.admissible = [](const EpistemicState&, const WorldSet& fmodels) {
    return !fmodels.empty();
  };
  op.revise = [](const EpistemicState& s, const Formula&, const WorldSet& fmodels) {
    return EpistemicState(boutilier_revise(std::get<TotalPreorder>(s), fmodels));
  };
  op.bel = [](const EpistemicState& s) { return bel_preorder(std::get<TotalPreorder>(s)); };
  op.equal = [](const EpistemicState& a, const EpistemicState& b) {
    return std::get<TotalPreorder>(a) == std::get<TotalPreorder>(b);
  };
  op.validate = [](const EpistemicState& s) -> std::optional<std::string> {
    if (std::get<TotalPreorder>(s).worlds_at(0).empty()) return "no rank-0 world";
    return std::nullopt;
  };
  op.describe = [vocab](const EpistemicState& s) {
    return rank_map_to_string(std::get<TotalPreorder>(s), vocab);
  };
  return op;
}

EpistemicOp make_dp_op(const CheckConfig& cfg) {
  const Vocabulary vocab = cfg.vocab;
  EpistemicOp op;
  op.name = "dp";
  for (auto& k : enumerate_ocfs(vocab.world_count(), cfg.max_rank, cfg.allow_inf)) {
    op.states.emplace_back(std::move(k));
  }
  op.admissible = [](const EpistemicState& s, const WorldSet& fmodels) {
    return !kappa_value(std::get<Ocf>(s), fmodels).is_infinite();
  };
  op.revise = [](const EpistemicState& s, const Formula&, const WorldSet& fmodels) {
    return EpistemicState(dp_revise(std::get<Ocf>(s), fmodels));
  };
  op.bel = [](const EpistemicState& s) { return bel_ocf(std::get<Ocf>(s)); };
  op.equal = [](const EpistemicState& a, const EpistemicState& b) {
    return std::get<Ocf>(a) == std::get<Ocf>(b);
  };
  op.validate = [](const EpistemicState& s) { return validate_ocf(std::get<Ocf>(s)); };
  op.describe = [vocab](const EpistemicState& s) {
    return rank_map_to_string(std::get<Ocf>(s), vocab);
  };
  return op;
}

EpistemicOp make_knowledge_op(const CheckConfig& cfg) {
  const Vocabulary vocab = cfg.vocab;
  EpistemicOp op;
  op.name = "knowledge";
  for (auto& k : enumerate_ocfs(vocab.world_count(), cfg.max_rank, /*allow_inf=*/false)) {
    op.states.emplace_back(make_knowledge_state(std::move(k)));
  }
  op.admissible = [](const EpistemicState& s, const WorldSet& fmodels) {
    return !kappa_value(std::get<KnowledgeState>(s).kappa, fmodels).is_infinite();
  };
  op.revise = [vocab](const EpistemicState& s, const Formula& f, const WorldSet&) {
    return EpistemicState(knowledge_observe(std::get<KnowledgeState>(s), f, vocab));
  };
  op.bel = [](const EpistemicState& s) { return bel_ocf(std::get<KnowledgeState>(s).kappa); };
  op.equal = [vocab](const EpistemicState& a, const EpistemicState& b) {
    const auto& ka = std::get<KnowledgeState>(a);
    const auto& kb = std::get<KnowledgeState>(b);
    return ka.kappa == kb.kappa && known_worlds(ka, vocab) == known_worlds(kb, vocab);
  };
  op.validate = [vocab](const EpistemicState& s) -> std::optional<std::string> {
    const auto& ks = std::get<KnowledgeState>(s);
    const WorldSet known = known_worlds(ks, vocab);
    if (known.empty()) return "observations jointly inconsistent";
    for (WorldId w = 0; w < vocab.world_count(); ++w) {
      const bool inf = ks.kappa.rank(w).is_infinite();
      if (inf == known.contains(w)) {
        return "infinite ranks do not match the observation violators";
      }
    }
    if (auto v = validate_ocf(ks.kappa)) return v;
    return std::nullopt;
  };
  op.describe = [vocab](const EpistemicState& s) {
    const auto& ks = std::get<KnowledgeState>(s);
    std::string out = rank_map_to_string(ks.kappa, vocab);
    if (!ks.observations.empty()) {
      out += " after <";
      for (std::size_t i = 0; i < ks.observations.size(); ++i) {
        if (i > 0) out += "; ";
        out += formula_to_string(ks.observations[i]);
      }
      out += ">";
    }
    return out;
  };
  return op;
}

// ---------------------------------------------------------------------------
// Enumerations

std::vector<TotalPreorder> enumerate_preorders(std::size_t world_count) {
  if (world_count == 0 || world_count > 8) {
    throw DomainError("preorder enumeration supports 1 to 8 worlds");
  }
  std::vector<TotalPreorder> out;
  std::vector<std::uint32_t> ranks(world_count, 0);
  // Depth-first over rank vectors; a vector is kept iff the used ranks are
  // contiguous from 0.  next_free is 1 + the largest rank seen so far; a new
  // rank above it opens a gap that the remaining worlds must be able to fill.
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t next_free) -> void {
    if (pos == world_count) {
      std::vector<bool> used(next_free, false);
      for (auto r : ranks) used[r] = true;
      if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
        out.emplace_back(ranks);
      }
      return;
    }
    const std::uint32_t remaining = static_cast<std::uint32_t>(world_count - pos);
    for (std::uint32_t r = 0; r < world_count && r < next_free + remaining; ++r) {
      ranks[pos] = r;
      self(self, pos + 1, std::max(next_free, r + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Ocf> enumerate_ocfs(std::size_t world_count, std::uint32_t max_rank, bool allow_inf) {
  if (world_count == 0 || world_count > 8) {
    throw DomainError("OCF enumeration supports 1 to 8 worlds");
  }
  std::vector<Rank> values;
  for (std::uint32_t r = 0; r <= max_rank; ++r) values.push_back(Rank(r));
  if (allow_inf) values.push_back(Rank::infinity());

  std::vector<Ocf> out;
  std::vector<Rank> ranks(world_count, Rank(0));
  auto rec = [&](auto&& self, std::size_t pos, bool has_zero) -> void {
    if (pos == world_count) {
      if (has_zero) out.emplace_back(ranks);
      return;
    }
    for (const Rank& v : values) {
      ranks[pos] = v;
      self(self, pos + 1, has_zero || v == Rank(0));
    }
  };
  rec(rec, 0, false);
  return out;
}

// ---------------------------------------------------------------------------
// check_r_primed / check_c_primed

std::vector<CheckReport> check_r_primed(const EpistemicOp& op, const CheckConfig& cfg) {
  const Vocabulary& vocab = cfg.vocab;
  const auto pool = build_pool(cfg.formula_pool, vocab);
  const std::uint64_t F = pool.size();
  const std::uint64_t S = op.states.size();

  auto bindings1 = [&](std::uint64_t s, std::uint64_t fi) {
    std::vector<std::pair<std::string, std::string>> b;
    b.emplace_back("operator", op.name);
    b.emplace_back("E", op.describe(op.states[s]));
    b.emplace_back("phi", pool[fi].text);
    return b;
  };

  std::vector<CheckReport> reports;

  // R1': the revised state is well-formed.
  // R2': phi in B(E * phi).
  // R3': B(E * phi) subset of Cl(B(E) u {phi}).
  // R5': satisfiable phi yields a consistent belief set.
  struct Single {
    int index;
    std::function<bool(const EpistemicState& e, const PoolEntry& f, const EpistemicState& r)>
        holds;
  };
  const std::vector<Single> singles = {
      {1, [&](const EpistemicState&, const PoolEntry&, const EpistemicState& r) {
         return !op.validate(r).has_value();
       }},
      {2, [&](const EpistemicState&, const PoolEntry& f, const EpistemicState& r) {
         return op.bel(r).models.subset_of(f.mset);
       }},
      {3, [&](const EpistemicState& e, const PoolEntry& f, const EpistemicState& r) {
         return op.bel(e).models.intersect(f.mset).subset_of(op.bel(r).models);
       }},
      {5, [&](const EpistemicState&, const PoolEntry&, const EpistemicState& r) {
         return consistent(op.bel(r));
       }},
  };
  for (const auto& s : singles) {
    reports.push_back(run_grid(
        {PostulateFamily::RPrime, s.index}, S * F, cfg,
        [&](std::uint64_t i) {
          const auto& f = pool[i % F];
          const auto& e = op.states[i / F];
          if (!op.admissible(e, f.mset)) return Outcome::OutOfDomain;
          const EpistemicState r = op.revise(e, f.formula, f.mset);
          return s.holds(e, f, r) ? Outcome::Holds : Outcome::Violated;
        },
        [&](std::uint64_t i) {
          const auto& f = pool[i % F];
          const auto& e = op.states[i / F];
          Counterexample ce{i, bindings1(i / F, i % F), {}};
          const EpistemicState r = op.revise(e, f.formula, f.mset);
          ce.trace = "E * phi = " + op.describe(r) +
                     "; B(E * phi) = " + set_str(op.bel(r), vocab);
          return ce;
        }));
  }

  // R4': if !phi not in B(E) then Cl(B(E) u {phi}) subset of B(E * phi).
  reports.push_back(run_grid(
      {PostulateFamily::RPrime, 4}, S * F, cfg,
      [&](std::uint64_t i) {
        const auto& f = pool[i % F];
        const auto& e = op.states[i / F];
        if (!op.admissible(e, f.mset)) return Outcome::OutOfDomain;
        const BeliefSet before = op.bel(e);
        if (!before.models.intersects(f.mset)) return Outcome::PreconditionUnmet;
        const BeliefSet after = op.bel(op.revise(e, f.formula, f.mset));
        return after.models.subset_of(before.models.intersect(f.mset)) ? Outcome::Holds
                                                                       : Outcome::Violated;
      },
      [&](std::uint64_t i) {
        const auto& f = pool[i % F];
        const auto& e = op.states[i / F];
        Counterexample ce{i, bindings1(i / F, i % F), {}};
        ce.trace = "B(E * phi) = " + set_str(op.bel(op.revise(e, f.formula, f.mset)), vocab);
        return ce;
      }));

  // R6': logically equivalent inputs produce equivalent revised states.
  reports.push_back(run_grid(
      {PostulateFamily::RPrime, 6}, S * F, cfg,
      [&](std::uint64_t i) {
        const auto& f = pool[i % F];
        const auto& e = op.states[i / F];
        if (!op.admissible(e, f.mset)) return Outcome::OutOfDomain;
        const Formula variant = Formula::negation(Formula::negation(f.formula));
        const EpistemicState a = op.revise(e, f.formula, f.mset);
        const EpistemicState b = op.revise(e, variant, f.mset);
        return op.equal(a, b) ? Outcome::Holds : Outcome::Violated;
      },
      [&](std::uint64_t i) {
        const auto& f = pool[i % F];
        const auto& e = op.states[i / F];
        Counterexample ce{i, bindings1(i / F, i % F), {}};
        ce.trace = "E * phi = " + op.describe(op.revise(e, f.formula, f.mset));
        return ce;
      }));

  // R7'/R8' with the literal conjunction.
  auto decode3 = [&](std::uint64_t i) {
    return std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>(i / (F * F), (i / F) % F,
                                                                   i % F);
  };
  auto bindings2 = [&](std::uint64_t i) {
    auto [s, fi, gi] = decode3(i);
    auto b = bindings1(s, fi);
    b.emplace_back("psi", pool[gi].text);
    return b;
  };

  reports.push_back(run_grid(
      {PostulateFamily::RPrime, 7}, S * F * F, cfg,
      [&](std::uint64_t i) {
        auto [s, fi, gi] = decode3(i);
        const auto& f = pool[fi];
        const auto& g = pool[gi];
        const auto& e = op.states[s];
        const WorldSet conj = f.mset.intersect(g.mset);
        if (!op.admissible(e, f.mset) || !op.admissible(e, conj)) return Outcome::OutOfDomain;
        const BeliefSet via_conj =
            op.bel(op.revise(e, Formula::conjunction(f.formula, g.formula), conj));
        const BeliefSet via_f = op.bel(op.revise(e, f.formula, f.mset));
        return via_f.models.intersect(g.mset).subset_of(via_conj.models) ? Outcome::Holds
                                                                         : Outcome::Violated;
      },
      [&](std::uint64_t i) {
        auto [s, fi, gi] = decode3(i);
        const auto& e = op.states[s];
        const WorldSet conj = pool[fi].mset.intersect(pool[gi].mset);
        Counterexample ce{i, bindings2(i), {}};
        ce.trace =
            "B(E * (phi & psi)) = " +
            set_str(op.bel(op.revise(
                        e, Formula::conjunction(pool[fi].formula, pool[gi].formula), conj)),
                    vocab) +
            "; B(E * phi) = " + set_str(op.bel(op.revise(e, pool[fi].formula, pool[fi].mset)),
                                        vocab);
        return ce;
      }));

  reports.push_back(run_grid(
      {PostulateFamily::RPrime, 8}, S * F * F, cfg,
      [&](std::uint64_t i) {
        auto [s, fi, gi] = decode3(i);
        const auto& f = pool[fi];
        const auto& g = pool[gi];
        const auto& e = op.states[s];
        const WorldSet conj = f.mset.intersect(g.mset);
        if (!op.admissible(e, f.mset) || !op.admissible(e, conj)) return Outcome::OutOfDomain;
        const BeliefSet via_f = op.bel(op.revise(e, f.formula, f.mset));
        if (!via_f.models.intersects(g.mset)) return Outcome::PreconditionUnmet;
        const BeliefSet via_conj =
            op.bel(op.revise(e, Formula::conjunction(f.formula, g.formula), conj));
        return via_conj.models.subset_of(via_f.models.intersect(g.mset)) ? Outcome::Holds
                                                                         : Outcome::Violated;
      },
      [&](std::uint64_t i) {
        Counterexample ce{i, bindings2(i), {}};
        return ce;
      }));

  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) {
                     return a.postulate.index < b.postulate.index;
                   });

  // R9': observing phi then psi equals observing phi & psi, at the belief
  // level, whenever phi & psi is satisfiable.
  reports.push_back(run_grid(
      {PostulateFamily::R9Prime, 9}, S * F * F, cfg,
      [&](std::uint64_t i) {
        auto [s, fi, gi] = decode3(i);
        const auto& f = pool[fi];
        const auto& g = pool[gi];
        const auto& e = op.states[s];
        const WorldSet conj = f.mset.intersect(g.mset);
        if (conj.empty()) return Outcome::OutOfDomain;
        if (!op.admissible(e, f.mset) || !op.admissible(e, conj)) return Outcome::OutOfDomain;
        const EpistemicState after_f = op.revise(e, f.formula, f.mset);
        if (!op.admissible(after_f, g.mset)) return Outcome::OutOfDomain;
        const BeliefSet lhs = op.bel(op.revise(after_f, g.formula, g.mset));
        const BeliefSet rhs =
            op.bel(op.revise(e, Formula::conjunction(f.formula, g.formula), conj));
        return lhs == rhs ? Outcome::Holds : Outcome::Violated;
      },
      [&](std::uint64_t i) {
        auto [s, fi, gi] = decode3(i);
        const auto& e = op.states[s];
        const WorldSet conj = pool[fi].mset.intersect(pool[gi].mset);
        Counterexample ce{i, bindings2(i), {}};
        const EpistemicState after_f = op.revise(e, pool[fi].formula, pool[fi].mset);
        ce.trace =
            "B(E * phi * psi) = " +
            set_str(op.bel(op.revise(after_f, pool[gi].formula, pool[gi].mset)), vocab) +
            "; B(E * (phi & psi)) = " +
            set_str(op.bel(op.revise(
                        e, Formula::conjunction(pool[fi].formula, pool[gi].formula), conj)),
                    vocab);
        return ce;
      }));

  return reports;
}

std::vector<CheckReport> check_c_primed(const EpistemicOp& op, const CheckConfig& cfg) {
  const Vocabulary& vocab = cfg.vocab;
  const auto pool = build_pool(cfg.formula_pool, vocab);
  const std::uint64_t F = pool.size();
  const std::uint64_t S = op.states.size();

  auto decode = [&](std::uint64_t i) {
    return std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>(i / (F * F), (i / F) % F,
                                                                   i % F);
  };
  auto describe = [&](std::uint64_t i) {
    auto [s, fi, gi] = decode(i);
    const auto& e = op.states[s];
    Counterexample ce{i,
                      {{"operator", op.name},
                       {"E", op.describe(e)},
                       {"phi", pool[fi].text},
                       {"psi", pool[gi].text}},
                      {}};
    const EpistemicState inner = op.revise(e, pool[gi].formula, pool[gi].mset);
    ce.trace =
        "B((E * psi) * phi) = " +
        set_str(op.bel(op.revise(inner, pool[fi].formula, pool[fi].mset)), vocab) +
        "; B(E * phi) = " + set_str(op.bel(op.revise(e, pool[fi].formula, pool[fi].mset)), vocab);
    return ce;
  };

  std::vector<CheckReport> reports;
  for (int index : {1, 2, 3, 4}) {
    reports.push_back(run_grid(
        {PostulateFamily::CPrime, index}, S * F * F, cfg,
        [&, index](std::uint64_t i) {
          auto [s, fi, gi] = decode(i);
          const auto& f = pool[fi];
          const auto& g = pool[gi];
          const auto& e = op.states[s];
          if (f.mset.empty() || g.mset.empty()) return Outcome::OutOfDomain;
          if (!op.admissible(e, f.mset) || !op.admissible(e, g.mset)) {
            return Outcome::OutOfDomain;
          }
          // Entailment preconditions for C1'/C2'.
          if (index == 1 && !f.mset.subset_of(g.mset)) return Outcome::PreconditionUnmet;
          if (index == 2 && f.mset.intersects(g.mset)) return Outcome::PreconditionUnmet;

          const BeliefSet via_f = op.bel(op.revise(e, f.formula, f.mset));
          if (index == 3 && !via_f.models.subset_of(g.mset)) return Outcome::PreconditionUnmet;
          if (index == 4 && !via_f.models.intersects(g.mset)) return Outcome::PreconditionUnmet;

          const EpistemicState inner = op.revise(e, g.formula, g.mset);
          if (!op.admissible(inner, f.mset)) return Outcome::OutOfDomain;
          const BeliefSet lhs = op.bel(op.revise(inner, f.formula, f.mset));

          bool holds = false;
          switch (index) {
            case 1:
            case 2:
              holds = lhs == via_f;
              break;
            case 3:
              holds = lhs.models.subset_of(g.mset);
              break;
            case 4:
              holds = lhs.models.intersects(g.mset);
              break;
          }
          return holds ? Outcome::Holds : Outcome::Violated;
        },
        describe));
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Sequence-level checks

namespace {

// All sequences over pool indices with length in [min_len, max_len], in
// depth-first prefix order (deterministic).
std::vector<std::vector<std::uint32_t>> enumerate_sequences(std::uint32_t pool_size,
                                                            std::uint32_t min_len,
                                                            std::uint32_t max_len) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t remaining) -> void {
    if (cur.size() >= min_len) out.push_back(cur);
    if (remaining == 0) return;
    for (std::uint32_t i = 0; i < pool_size; ++i) {
      cur.push_back(i);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, max_len);
  return out;
}

struct SequenceContext {
  std::vector<PoolEntry> sat_pool;     // satisfiable classes only
  std::vector<PoolEntry> full_pool;    // every class
  std::vector<std::vector<std::uint32_t>> sequences;  // over sat_pool, any length <= bound
  Vocabulary vocab;
};

SequenceContext make_sequence_context(const CheckConfig& cfg) {
  SequenceContext ctx{{}, {}, {}, cfg.vocab};
  ctx.full_pool = build_pool(cfg.formula_pool, cfg.vocab);
  for (const auto& e : ctx.full_pool) {
    if (!e.mset.empty()) ctx.sat_pool.push_back(e);
  }
  ctx.sequences = enumerate_sequences(static_cast<std::uint32_t>(ctx.sat_pool.size()), 0,
                                      cfg.sequence_length_bound);
  return ctx;
}

SequenceState to_sequence(const SequenceContext& ctx, const std::vector<std::uint32_t>& idx) {
  SequenceState s;
  for (auto i : idx) s.observations.push_back(ctx.sat_pool[i].formula);
  return s;
}

std::string sequence_text(const SequenceContext& ctx, const std::vector<std::uint32_t>& idx) {
  std::string out = "<";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += "; ";
    out += ctx.sat_pool[idx[i]].text;
  }
  return out + ">";
}

SequenceState concat(SequenceState a, const Formula& f) {
  a.observations.push_back(f);
  return a;
}

SequenceState concat(SequenceState a, const SequenceState& b) {
  for (const auto& f : b.observations) a.observations.push_back(f);
  return a;
}

}  // namespace

std::vector<CheckReport> check_i(const BelEvaluator& evaluator, const CheckConfig& cfg) {
  const SequenceContext ctx = make_sequence_context(cfg);
  const Vocabulary& vocab = ctx.vocab;
  const std::uint32_t L = cfg.sequence_length_bound;

  auto in_domain = [&](const SequenceState& s) { return evaluator.in_domain(s); };
  auto bel = [&](const SequenceState& s) { return evaluator.bel(s); };

  std::vector<CheckReport> reports;

  // Materialized tuple spaces keep the index decoding trivial and the
  // enumeration order deterministic.
  using Tuple = std::vector<std::uint32_t>;

  // I1: Bel(sigma) is a consistent belief set.
  {
    const auto& seqs = ctx.sequences;
    reports.push_back(run_grid(
        {PostulateFamily::I, 1}, seqs.size(), cfg,
        [&](std::uint64_t i) {
          const SequenceState s = to_sequence(ctx, seqs[i]);
          if (!in_domain(s)) return Outcome::OutOfDomain;
          return consistent(bel(s)) ? Outcome::Holds : Outcome::Violated;
        },
        [&](std::uint64_t i) {
          Counterexample ce{i, {{"sigma", sequence_text(ctx, seqs[i])}}, {}};
          ce.trace = "Bel(sigma) = " + set_str(bel(to_sequence(ctx, seqs[i])), vocab);
          return ce;
        }));
  }

  // I2: phi in Bel(sigma . phi).
  {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tuples;  // (sigma, phi)
    for (std::uint32_t s = 0; s < ctx.sequences.size(); ++s) {
      if (ctx.sequences[s].size() + 1 > L) continue;
      for (std::uint32_t f = 0; f < ctx.sat_pool.size(); ++f) tuples.emplace_back(s, f);
    }
    reports.push_back(run_grid(
        {PostulateFamily::I, 2}, tuples.size(), cfg,
        [&](std::uint64_t i) {
          auto [si, fi] = tuples[i];
          const SequenceState s =
              concat(to_sequence(ctx, ctx.sequences[si]), ctx.sat_pool[fi].formula);
          if (!in_domain(s)) return Outcome::OutOfDomain;
          return bel(s).models.subset_of(ctx.sat_pool[fi].mset) ? Outcome::Holds
                                                                : Outcome::Violated;
        },
        [&](std::uint64_t i) {
          auto [si, fi] = tuples[i];
          Counterexample ce{
              i,
              {{"sigma", sequence_text(ctx, ctx.sequences[si])}, {"phi", ctx.sat_pool[fi].text}},
              {}};
          return ce;
        }));
  }

  // I3: if psi in Bel(sigma . phi) then phi -> psi in Bel(sigma).
  {
    std::vector<Tuple> tuples;  // (sigma, phi, psi) with psi over the full pool
    for (std::uint32_t s = 0; s < ctx.sequences.size(); ++s) {
      if (ctx.sequences[s].size() + 1 > L) continue;
      for (std::uint32_t f = 0; f < ctx.sat_pool.size(); ++f) {
        for (std::uint32_t g = 0; g < ctx.full_pool.size(); ++g) tuples.push_back({s, f, g});
      }
    }
    reports.push_back(run_grid(
        {PostulateFamily::I, 3}, tuples.size(), cfg,
        [&](std::uint64_t i) {
          const auto& t = tuples[i];
          const SequenceState sigma = to_sequence(ctx, ctx.sequences[t[0]]);
          const SequenceState sp = concat(sigma, ctx.sat_pool[t[1]].formula);
          if (!in_domain(sp)) return Outcome::OutOfDomain;
          if (!bel(sp).models.subset_of(ctx.full_pool[t[2]].mset)) {
            return Outcome::PreconditionUnmet;
          }
          // phi -> psi holds in Bel(sigma): models within phi must satisfy psi.
          const WorldSet impl =
              ctx.sat_pool[t[1]].mset.complement().unite(ctx.full_pool[t[2]].mset);
          return bel(sigma).models.subset_of(impl) ? Outcome::Holds : Outcome::Violated;
        },
        [&](std::uint64_t i) {
          const auto& t = tuples[i];
          Counterexample ce{i,
                            {{"sigma", sequence_text(ctx, ctx.sequences[t[0]])},
                             {"phi", ctx.sat_pool[t[1]].text},
                             {"psi", ctx.full_pool[t[2]].text}},
                            {}};
          return ce;
        }));
  }

  // I4: if phi in Bel(sigma) then Bel(sigma . phi . rho) = Bel(sigma . rho).
  {
    std::vector<Tuple> tuples;  // (sigma, phi, rho)
    for (std::uint32_t s = 0; s < ctx.sequences.size(); ++s) {
      for (std::uint32_t r = 0; r < ctx.sequences.size(); ++r) {
        if (ctx.sequences[s].size() + 1 + ctx.sequences[r].size() > L) continue;
        for (std::uint32_t f = 0; f < ctx.sat_pool.size(); ++f) tuples.push_back({s, f, r});
      }
    }
    reports.push_back(run_grid(
        {PostulateFamily::I, 4}, tuples.size(), cfg,
        [&](std::uint64_t i) {
          const auto& t = tuples[i];
          const SequenceState sigma = to_sequence(ctx, ctx.sequences[t[0]]);
          const SequenceState rho = to_sequence(ctx, ctx.sequences[t[2]]);
          if (!in_domain(sigma)) return Outcome::OutOfDomain;
          if (!bel(sigma).models.subset_of(ctx.sat_pool[t[1]].mset)) {
            return Outcome::PreconditionUnmet;
          }
          const SequenceState with_phi =
              concat(concat(sigma, ctx.sat_pool[t[1]].formula), rho);
          if (!in_domain(with_phi)) return Outcome::OutOfDomain;
          const SequenceState without_phi = concat(sigma, rho);
          return bel(with_phi) == bel(without_phi) ? Outcome::Holds : Outcome::Violated;
        },
        [&](std::uint64_t i) {
          const auto& t = tuples[i];
          const SequenceState sigma = to_sequence(ctx, ctx.sequences[t[0]]);
          const SequenceState rho = to_sequence(ctx, ctx.sequences[t[2]]);
          Counterexample ce{i,
                            {{"sigma", sequence_text(ctx, ctx.sequences[t[0]])},
                             {"phi", ctx.sat_pool[t[1]].text},
                             {"rho", sequence_text(ctx, ctx.sequences[t[2]])}},
                            {}};
          ce.trace =
              "Bel(sigma . phi . rho) = " +
              set_str(bel(concat(concat(sigma, ctx.sat_pool[t[1]].formula), rho)), vocab) +
              "; Bel(sigma . rho) = " + set_str(bel(concat(sigma, rho)), vocab);
          return ce;
        }));
  }

  // I5: if psi |- phi then Bel(sigma . phi . psi . rho) = Bel(sigma . psi . rho).
  {
    std::vector<Tuple> tuples;  // (sigma, phi, psi, rho)
    for (std::uint32_t s = 0; s < ctx.sequences.size(); ++s) {
      for (std::uint32_t r = 0; r < ctx.sequences.size(); ++r) {
        if (ctx.sequences[s].size() + 2 + ctx.sequences[r].size() > L) continue;
        for (std::uint32_t f = 0; f < ctx.sat_pool.size(); ++f) {
          for (std::uint32_t g = 0; g < ctx.sat_pool.size(); ++g) {
            tuples.push_back({s, f, g, r});
          }
        }
      }
    }
    reports.push_back(run_grid(
        {PostulateFamily::I, 5}, tuples.size(), cfg,
        [&](std::uint64_t i) {
          const auto& t = tuples[i];
          if (!ctx.sat_pool[t[2]].mset.subset_of(ctx.sat_pool[t[1]].mset)) {
            return Outcome::PreconditionUnmet;
          }
          const SequenceState sigma = to_sequence(ctx, ctx.sequences[t[0]]);
          const SequenceState rho = to_sequence(ctx, ctx.sequences[t[3]]);
          const SequenceState lhs = concat(
              concat(concat(sigma, ctx.sat_pool[t[1]].formula), ctx.sat_pool[t[2]].formula),
              rho);
          if (!in_domain(lhs)) return Outcome::OutOfDomain;
          const SequenceState rhs = concat(concat(sigma, ctx.sat_pool[t[2]].formula), rho);
          return bel(lhs) == bel(rhs) ? Outcome::Holds : Outcome::Violated;
        },
        [&](std::uint64_t i) {
          const auto& t = tuples[i];
          Counterexample ce{i,
                            {{"sigma", sequence_text(ctx, ctx.sequences[t[0]])},
                             {"phi", ctx.sat_pool[t[1]].text},
                             {"psi", ctx.sat_pool[t[2]].text},
                             {"rho", sequence_text(ctx, ctx.sequences[t[3]])}},
                            {}};
          return ce;
        }));
  }

  // I6: if !psi not in Bel(sigma . phi) then
  //     Bel(sigma . phi . psi . rho) = Bel(sigma . phi . (phi & psi) . rho),
  // with the literal conjunction formula.
  {
    std::vector<Tuple> tuples;
    for (std::uint32_t s = 0; s < ctx.sequences.size(); ++s) {
      for (std::uint32_t r = 0; r < ctx.sequences.size(); ++r) {
        if (ctx.sequences[s].size() + 2 + ctx.sequences[r].size() > L) continue;
        for (std::uint32_t f = 0; f < ctx.sat_pool.size(); ++f) {
          for (std::uint32_t g = 0; g < ctx.sat_pool.size(); ++g) {
            tuples.push_back({s, f, g, r});
          }
        }
      }
    }
    reports.push_back(run_grid(
        {PostulateFamily::I, 6}, tuples.size(), cfg,
        [&](std::uint64_t i) {
          const auto& t = tuples[i];
          const SequenceState sigma = to_sequence(ctx, ctx.sequences[t[0]]);
          const SequenceState sp = concat(sigma, ctx.sat_pool[t[1]].formula);
          if (!in_domain(sp)) return Outcome::OutOfDomain;
          if (!bel(sp).models.intersects(ctx.sat_pool[t[2]].mset)) {
            return Outcome::PreconditionUnmet;
          }
          const SequenceState rho = to_sequence(ctx, ctx.sequences[t[3]]);
          const SequenceState lhs = concat(concat(sp, ctx.sat_pool[t[2]].formula), rho);
          if (!in_domain(lhs)) return Outcome::OutOfDomain;
          const Formula conj =
              Formula::conjunction(ctx.sat_pool[t[1]].formula, ctx.sat_pool[t[2]].formula);
          const SequenceState rhs = concat(concat(sp, conj), rho);
          return bel(lhs) == bel(rhs) ? Outcome::Holds : Outcome::Violated;
        },
        [&](std::uint64_t i) {
          const auto& t = tuples[i];
          Counterexample ce{i,
                            {{"sigma", sequence_text(ctx, ctx.sequences[t[0]])},
                             {"phi", ctx.sat_pool[t[1]].text},
                             {"psi", ctx.sat_pool[t[2]].text},
                             {"rho", sequence_text(ctx, ctx.sequences[t[3]])}},
                            {}};
          return ce;
        }));
  }

  // I7: Bel(sigma . !phi . phi) subset of Cl(Bel(sigma) u {phi}).  Both phi
  // and !phi must be individually satisfiable; the joint sequence never is,
  // so under the knowledge evaluator every instance is out of domain.
  {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tuples;  // (sigma, phi)
    for (std::uint32_t s = 0; s < ctx.sequences.size(); ++s) {
      if (ctx.sequences[s].size() + 2 > L) continue;
      for (std::uint32_t f = 0; f < ctx.sat_pool.size(); ++f) tuples.emplace_back(s, f);
    }
    reports.push_back(run_grid(
        {PostulateFamily::I, 7}, tuples.size(), cfg,
        [&](std::uint64_t i) {
          auto [si, fi] = tuples[i];
          const auto& f = ctx.sat_pool[fi];
          if (f.mset.full()) return Outcome::OutOfDomain;  // !phi unsatisfiable
          const SequenceState sigma = to_sequence(ctx, ctx.sequences[si]);
          const SequenceState lhs =
              concat(concat(sigma, Formula::negation(f.formula)), f.formula);
          if (!in_domain(lhs)) return Outcome::OutOfDomain;
          if (!in_domain(sigma)) return Outcome::OutOfDomain;
          return bel(sigma).models.intersect(f.mset).subset_of(bel(lhs).models)
                     ? Outcome::Holds
                     : Outcome::Violated;
        },
        [&](std::uint64_t i) {
          auto [si, fi] = tuples[i];
          Counterexample ce{
              i,
              {{"sigma", sequence_text(ctx, ctx.sequences[si])}, {"phi", ctx.sat_pool[fi].text}},
              {}};
          return ce;
        }));
  }

  return reports;
}

CheckReport check_weak_i4(const BelEvaluator& evaluator, const CheckConfig& cfg) {
  if (evaluator.kind != "knowledge" || !evaluator.kappa_after) {
    throw DomainError("weak-I4 is defined for the knowledge evaluator only");
  }
  const SequenceContext ctx = make_sequence_context(cfg);
  const Vocabulary& vocab = ctx.vocab;
  const std::uint32_t L = cfg.sequence_length_bound;

  std::vector<std::vector<std::uint32_t>> tuples;  // (sigma, phi, rho)
  for (std::uint32_t s = 0; s < ctx.sequences.size(); ++s) {
    for (std::uint32_t r = 0; r < ctx.sequences.size(); ++r) {
      if (ctx.sequences[s].size() + 1 + ctx.sequences[r].size() > L) continue;
      for (std::uint32_t f = 0; f < ctx.sat_pool.size(); ++f) tuples.push_back({s, f, r});
    }
  }

  return run_grid(
      {PostulateFamily::WeakI4, 0}, tuples.size(), cfg,
      [&](std::uint64_t i) {
        const auto& t = tuples[i];
        const SequenceState sigma = to_sequence(ctx, ctx.sequences[t[0]]);
        if (!evaluator.in_domain(sigma)) return Outcome::OutOfDomain;
        const Ocf kappa = evaluator.kappa_after(sigma);
        // phi is known iff kappa(!phi) is infinite.
        if (!kappa_value(kappa, ctx.sat_pool[t[1]].mset.complement()).is_infinite()) {
          return Outcome::PreconditionUnmet;
        }
        const SequenceState rho = to_sequence(ctx, ctx.sequences[t[2]]);
        const SequenceState without = concat(sigma, rho);
        if (!evaluator.in_domain(without)) return Outcome::OutOfDomain;
        const SequenceState with_phi =
            concat(concat(sigma, ctx.sat_pool[t[1]].formula), rho);
        return evaluator.bel(with_phi) == evaluator.bel(without) ? Outcome::Holds
                                                                 : Outcome::Violated;
      },
      [&](std::uint64_t i) {
        const auto& t = tuples[i];
        Counterexample ce{i,
                          {{"sigma", sequence_text(ctx, ctx.sequences[t[0]])},
                           {"phi", ctx.sat_pool[t[1]].text},
                           {"rho", sequence_text(ctx, ctx.sequences[t[2]])}},
                          {}};
        const SequenceState sigma = to_sequence(ctx, ctx.sequences[t[0]]);
        const SequenceState rho = to_sequence(ctx, ctx.sequences[t[2]]);
        ce.trace =
            "Bel(sigma . phi . rho) = " +
            set_str(
                evaluator.bel(concat(concat(sigma, ctx.sat_pool[t[1]].formula), rho)), vocab) +
            "; Bel(sigma . rho) = " + set_str(evaluator.bel(concat(sigma, rho)), vocab);
        return ce;
      });
}

CheckReport boutilier_nullification_check(const TotalPreorder& p0, const CheckConfig& cfg) {
  const SequenceContext ctx = make_sequence_context(cfg);
  const Vocabulary& vocab = ctx.vocab;

  // Sequences of length >= 1; the last element may be a surprise, everything
  // before it must be consistent with the beliefs at the time.
  std::vector<std::vector<std::uint32_t>> seqs;
  for (const auto& s : ctx.sequences) {
    if (!s.empty()) seqs.push_back(s);
  }

  auto chain_bel = [&](const std::vector<std::uint32_t>& seq) {
    TotalPreorder p = p0;
    for (auto i : seq) p = boutilier_revise(p, ctx.sat_pool[i].mset);
    return bel_preorder(p);
  };

  CheckReport report = run_grid(
      {PostulateFamily::Nullification, 0}, seqs.size(), cfg,
      [&](std::uint64_t idx) {
        const auto& seq = seqs[idx];
        const std::size_t m = seq.size();
        // Interior steps must be unsurprising.
        TotalPreorder p = p0;
        std::vector<BeliefSet> bel_after;  // bel after prefix of length j
        bel_after.push_back(bel_preorder(p));
        for (std::size_t j = 0; j + 1 < m; ++j) {
          if (!bel_after.back().models.intersects(ctx.sat_pool[seq[j]].mset)) {
            return Outcome::OutOfDomain;
          }
          p = boutilier_revise(p, ctx.sat_pool[seq[j]].mset);
          bel_after.push_back(bel_preorder(p));
        }
        const auto& last = ctx.sat_pool[seq[m - 1]];
        // k: longest prefix whose beliefs are consistent with the final
        // observation (0 when even the initial beliefs are not).
        std::size_t k = 0;
        for (std::size_t j = 0; j < bel_after.size(); ++j) {
          if (bel_after[j].models.intersects(last.mset)) k = j;
        }
        std::vector<std::uint32_t> truncated(seq.begin(), seq.begin() + k);
        truncated.push_back(seq[m - 1]);
        return chain_bel(seq) == chain_bel(truncated) ? Outcome::Holds : Outcome::Violated;
      },
      [&](std::uint64_t idx) {
        Counterexample ce{idx, {{"sequence", sequence_text(ctx, seqs[idx])}}, {}};
        ce.trace = "beliefs = " + set_str(chain_bel(seqs[idx]), vocab);
        return ce;
      });

  // Contrast note: conditioning keeps what natural revision nullifies.
  if (vocab.size() >= 2) {
    const Formula a0 = parse_formula(vocab.atoms()[0], vocab);
    const Formula a1 = parse_formula(vocab.atoms()[1], vocab);
    const std::vector<Formula> red_bird = {a0, a1, Formula::negation(a0)};
    TotalPreorder p = TotalPreorder::flat(vocab.world_count());
    Ocf k = Ocf::flat(vocab.world_count());
    for (const Formula& f : red_bird) {
      p = boutilier_revise(p, f, vocab);
      k = dp_revise(k, f, vocab);
    }
    report.notes.push_back(
        "contrast: after <" + formula_to_string(red_bird[0]) + "; " +
        formula_to_string(red_bird[1]) + "; " + formula_to_string(red_bird[2]) +
        "> from flat states, natural revision believes " +
        set_str(bel_preorder(p), vocab) + " while conditioning believes " +
        set_str(bel_ocf(k), vocab));
  }
  return report;
}

std::vector<CheckReport> merge_reports(std::vector<std::vector<CheckReport>> runs) {
  if (runs.empty()) return {};
  std::vector<CheckReport> merged = std::move(runs.front());
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].size() != merged.size()) {
      throw DomainError("cannot merge report lists of different shapes");
    }
    for (std::size_t i = 0; i < merged.size(); ++i) {
      CheckReport& m = merged[i];
      CheckReport& o = runs[r][i];
      if (!(m.postulate == o.postulate)) {
        throw DomainError("cannot merge reports for different postulates");
      }
      m.instances_checked += o.instances_checked;
      m.domain_skipped += o.domain_skipped;
      m.failures_total += o.failures_total;
      for (auto& ce : o.counterexamples) {
        if (m.counterexamples.size() >= 8) break;
        m.counterexamples.push_back(std::move(ce));
      }
      for (auto& note : o.notes) m.notes.push_back(std::move(note));
    }
  }
  for (auto& m : merged) {
    m.status = m.failures_total > 0
                   ? CheckStatus::Fail
                   : (m.instances_checked > 0 ? CheckStatus::Pass : CheckStatus::Vacuous);
  }
  return merged;
}

}  // namespace revlab
