#include "doctest.h"

#include "revlab/operators.hpp"
#include "revlab/postulates.hpp"
#include "support/spohn_oracle.hpp"
#include "support/test_util.hpp"

using namespace revlab;
using namespace revlab::test;

TEST_CASE("agm_revise") {
  const Vocabulary v = vocab_pq();

  const RevisionAssignment flat = RevisionAssignment::single_state(TotalPreorder::flat(4));
  CHECK(agm_revise(flat, tautology_belief_set(v), f("p & q", v), v) == bs(v, {"11"}));

  const TotalPreorder p = preorder(v, "11:0 10:1 01:2 00:3");
  const RevisionAssignment a = RevisionAssignment::single_state(p);
  const BeliefSet k = bel_preorder(p);  // Cl(p & q)
  const BeliefSet revised = agm_revise(a, k, f("!p", v), v);
  CHECK(revised == bs(v, {"01"}));
  CHECK(contains(revised, f("!p & q", v), v));

  CHECK_THROWS_AS(agm_revise(a, k, f("false", v), v), DomainError);
  // The inconsistent belief set is served by the designated prior.
  CHECK(agm_revise(a, inconsistent_belief_set(v), f("!p", v), v) == bs(v, {"01"}));
  // A belief set outside the assignment's domain is rejected.
  CHECK_THROWS_AS(agm_revise(a, bs(v, {"00"}), f("p", v), v), DomainError);
}

TEST_CASE("boutilier_revise") {
  const Vocabulary v = vocab_pq();

  CHECK(boutilier_revise(TotalPreorder::flat(4), f("p", v), v) ==
        preorder(v, "10:0 11:0 01:1 00:1"));

  const TotalPreorder p = preorder(v, "11:0 10:1 01:2 00:3");
  CHECK(boutilier_revise(p, f("!p", v), v) == preorder(v, "01:0 11:1 10:2 00:3"));

  CHECK_THROWS_AS(boutilier_revise(p, f("false", v), v), DomainError);

  // Consistent case: beliefs expand, and non-promoted worlds keep their
  // relative order.
  const auto classes = enumerate_formula_classes(v);
  for (const TotalPreorder& q : enumerate_preorders(4)) {
    for (const Formula& g : classes) {
      const WorldSet gm = models(g, v);
      if (gm.empty()) continue;
      const TotalPreorder r = boutilier_revise(q, gm);
      const WorldSet promoted = min_worlds(q, gm);
      CHECK(bel_preorder(r).models == promoted);
      for (WorldId w = 0; w < 4; ++w) {
        for (WorldId u = 0; u < 4; ++u) {
          if (promoted.contains(w) || promoted.contains(u)) continue;
          CHECK((q.rank(w) < q.rank(u)) == (r.rank(w) < r.rank(u)));
        }
      }
      if (bel_preorder(q).models.intersects(gm)) {
        CHECK(bel_preorder(r).models == bel_preorder(q).models.intersect(gm));
      }
    }
  }
}

TEST_CASE("spohn_condition examples") {
  const Vocabulary v = vocab_pq();

  CHECK(spohn_condition(Ocf::flat(4), f("p", v), Rank(1), v) ==
        ocf(v, "10:0 11:0 01:1 00:1"));

  const Ocf k = ocf(v, "11:0 01:1 10:2 00:3");
  CHECK(spohn_condition(k, f("!p | !q", v), Rank::infinity(), v) ==
        ocf(v, "01:0 10:1 00:2 11:inf"));

  CHECK_THROWS_AS(spohn_condition(ocf(v, "11:0 01:inf 10:0 00:inf"), f("!p & q", v), Rank(1), v),
                  DomainError);
  CHECK_THROWS_AS(spohn_condition(k, f("false", v), Rank(0), v), DomainError);

  // Conditioning makes the formula believed with firmness exactly alpha.
  const Ocf c = spohn_condition(k, f("!p | !q", v), Rank(2), v);
  CHECK(firmness(c, f("!p | !q", v), v) == Rank(2));
}

TEST_CASE("spohn_condition agrees with the brute-force characterization") {
  const Vocabulary v = vocab_p();
  const auto classes = enumerate_formula_classes(v);
  for (const Ocf& k : enumerate_ocfs(2, 3, true)) {
    for (const Formula& g : classes) {
      const WorldSet gm = models(g, v);
      if (kappa_value(k, gm).is_infinite()) continue;
      for (Rank alpha : {Rank(0), Rank(1), Rank(3), Rank::infinity()}) {
        const auto solutions = spohn_characterization_solutions(k, gm, alpha, 6);
        if (!alpha.is_infinite() && kappa_value(k, gm.complement()).is_infinite()) {
          // A known formula cannot be believed with finite firmness.
          CHECK(solutions.empty());
          CHECK(spohn_condition(k, gm, alpha) == spohn_condition(k, gm, Rank::infinity()));
        } else {
          REQUIRE(solutions.size() == 1);
          CHECK(solutions.front() == spohn_condition(k, gm, alpha));
        }
      }
    }
  }
}

TEST_CASE("dp_revise") {
  const Vocabulary v = vocab_p();

  const Ocf believed = ocf(v, "1:0 0:2");
  CHECK(dp_revise(believed, f("p", v), v) == believed);  // unchanged, exactly

  CHECK(dp_revise(Ocf::flat(2), f("p", v), v) == ocf(v, "1:0 0:1"));
  CHECK_THROWS_AS(dp_revise(ocf(v, "1:inf 0:0"), f("p", v), v), DomainError);

  // Idempotence on believed inputs, exhaustively.
  const Vocabulary vq = vocab_pq();
  const auto classes = enumerate_formula_classes(vq);
  for (const Ocf& k : enumerate_ocfs(4, 2, true)) {
    for (const Formula& g : classes) {
      const WorldSet gm = models(g, vq);
      if (kappa_value(k, gm).is_infinite()) continue;
      const auto a = firmness(k, gm);
      if (a.has_value() && *a >= Rank(1)) CHECK(dp_revise(k, gm) == k);
    }
  }
}

TEST_CASE("knowledge_observe follows the worked example") {
  const Vocabulary v = vocab_pq();
  const Ocf initial = ocf(v, "11:0 01:1 10:2 00:3");

  KnowledgeState s = make_knowledge_state(initial);
  const KnowledgeState after_or = knowledge_observe(s, f("!p | !q", v), v);
  CHECK(after_or.kappa == ocf(v, "01:0 10:1 00:2 11:inf"));
  CHECK(contains(bel_ocf(after_or.kappa), f("q", v), v));
  CHECK(contains(bel_ocf(after_or.kappa), f("!p", v), v));

  const KnowledgeState after_p = knowledge_observe(s, f("p", v), v);
  CHECK(after_p.kappa == ocf(v, "11:0 10:2 01:inf 00:inf"));
  const KnowledgeState after_both = knowledge_observe(after_p, f("!p | !q", v), v);
  CHECK(after_both.kappa == ocf(v, "10:0 11:inf 01:inf 00:inf"));
  CHECK(contains(bel_ocf(after_both.kappa), f("p", v), v));
  CHECK(contains(bel_ocf(after_both.kappa), f("!q", v), v));

  CHECK_THROWS_AS(knowledge_observe(after_p, f("!p", v), v), DomainError);
  CHECK_THROWS_AS(make_knowledge_state(ocf(v, "11:0 01:inf 10:0 00:0")), DomainError);
}

TEST_CASE("knowledge_observe state-level properties") {
  const Vocabulary v = vocab_pq();
  const auto classes = enumerate_formula_classes(v);

  for (const Ocf& k : enumerate_ocfs(4, 2, false)) {
    const KnowledgeState s = make_knowledge_state(k);
    for (const Formula& g : classes) {
      const WorldSet gm = models(g, v);
      if (kappa_value(s.kappa, gm).is_infinite()) continue;
      const KnowledgeState sg = knowledge_observe(s, g, v);
      // Observation conjunction collapse, at the level of the OCF itself.
      for (const Formula& h : classes) {
        const WorldSet hm = models(h, v);
        if (gm.intersect(hm).empty()) continue;
        if (kappa_value(sg.kappa, hm).is_infinite()) continue;
        const KnowledgeState two = knowledge_observe(sg, h, v);
        const KnowledgeState one =
            knowledge_observe(s, Formula::conjunction(g, h), v);
        CHECK(two.kappa == one.kappa);
      }
      // Knowledge only grows.
      for (WorldId w = 0; w < 4; ++w) {
        if (s.kappa.rank(w).is_infinite()) CHECK(sg.kappa.rank(w).is_infinite());
      }
    }
  }
}

TEST_CASE("fl_revise") {
  const Vocabulary v = vocab_pq();
  const TotalPreorder flat = TotalPreorder::flat(4);

  CHECK(fl_revise(flat, bs(v, {"10", "11"}), f("q", v), v) == bs(v, {"11"}));
  CHECK(fl_revise(preorder(v, "01:0 11:1 10:1 00:1"), bs(v, {"11"}), f("!p", v), v) ==
        bs(v, {"01"}));
  CHECK(fl_revise(flat, inconsistent_belief_set(v), f("p", v), v) == bs(v, {"10", "11"}));
  CHECK_THROWS_AS(fl_revise(flat, bs(v, {"11"}), f("false", v), v), DomainError);

  // FL holds by construction: a surprising revision restarts from scratch.
  const auto classes = enumerate_formula_classes(v);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    WorldSet m(4);
    for (WorldId w = 0; w < 4; ++w) {
      if ((mask >> w) & 1u) m.insert(w);
    }
    const BeliefSet k{m};
    for (const Formula& g : classes) {
      const WorldSet gm = models(g, v);
      if (gm.empty() || k.models.intersects(gm)) continue;
      CHECK(fl_revise(flat, k, g, v) == fl_revise(flat, inconsistent_belief_set(v), g, v));
    }
  }
}

TEST_CASE("sequence_bel with the knowledge evaluator") {
  const Vocabulary v = vocab_pq();
  const BelEvaluator e = make_knowledge_evaluator(Ocf::flat(4), v);

  CHECK(sequence_bel(SequenceState{}, e) == tautology_belief_set(v));
  CHECK(sequence_bel(SequenceState{{f("p", v)}}, e) == bs(v, {"10", "11"}));
  CHECK_THROWS_AS(sequence_bel(SequenceState{{f("p", v), f("!p", v)}}, e), DomainError);
  CHECK_THROWS_AS(make_knowledge_evaluator(ocf(v, "11:0 01:inf 10:0 00:0"), v), DomainError);
}
