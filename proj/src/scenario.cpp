#include "revlab/scenario.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace revlab {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& message) {
  throw SchemaError(path + ": " + message);
}

const json& require_field(const json& j, const std::string& path, const std::string& key) {
  if (!j.contains(key)) schema_fail(path + "." + key, "missing");
  return j.at(key);
}

void reject_unknown_keys(const json& j, const std::string& path,
                         const std::set<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) schema_fail(path + "." + it.key(), "unknown field");
  }
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<Rank> parse_ranks(const json& j, const std::string& path, const Vocabulary& vocab,
                              bool allow_inf) {
  if (!j.is_object()) schema_fail(path, "expected an object mapping worlds to ranks");
  std::map<WorldId, Rank> entries;
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto world = vocab.world_from_name(it.key());
    if (!world) schema_fail(path + "." + it.key(), "not a world over this vocabulary");
    Rank r(0);
    if (it.value().is_string()) {
      auto parsed = Rank::parse(it.value().get<std::string>());
      if (!parsed) schema_fail(path + "." + it.key(), "expected a rank or \"inf\"");
      r = *parsed;
    } else if (it.value().is_number_unsigned()) {
      r = Rank(it.value().get<std::uint32_t>());
    } else {
      schema_fail(path + "." + it.key(), "expected a nonnegative integer or \"inf\"");
    }
    if (r.is_infinite() && !allow_inf) {
      schema_fail(path + "." + it.key(), "infinite rank not allowed here");
    }
    entries.emplace(*world, r);
  }
  for (WorldId w = 0; w < vocab.world_count(); ++w) {
    if (!entries.count(w)) schema_fail(path, "missing world '" + vocab.world_name(w) + "'");
  }
  std::vector<Rank> ranks;
  for (WorldId w = 0; w < vocab.world_count(); ++w) ranks.push_back(entries.at(w));
  return ranks;
}

Formula parse_scenario_formula(const std::string& text, const Vocabulary& vocab,
                               const std::string& path) {
  try {
    return parse_formula(text, vocab);
  } catch (const UnknownAtomError& e) {
    throw ParseError(path + ": " + e.what(), e.position());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.position());
  }
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(source + ": not valid JSON: " + e.what());
  }
  if (!j.is_object()) schema_fail(source, "expected a JSON object");
  reject_unknown_keys(j, source, {"vocabulary", "state", "operator", "observations"});

  const json& jvocab = require_field(j, source, "vocabulary");
  if (!jvocab.is_array() || jvocab.empty()) schema_fail(source + ".vocabulary", "expected a nonempty array");
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < jvocab.size(); ++i) {
    atoms.push_back(require_string(jvocab[i], source + ".vocabulary[" + std::to_string(i) + "]"));
  }
  Vocabulary vocab(std::move(atoms));

  const std::string op = require_string(require_field(j, source, "operator"), source + ".operator");
  const std::set<std::string> ops = {"ranking", "boutilier", "dp", "knowledge", "fl"};
  if (!ops.count(op)) schema_fail(source + ".operator", "unknown operator '" + op + "'");

  const json& jstate = require_field(j, source, "state");
  if (!jstate.is_object()) schema_fail(source + ".state", "expected an object");
  const std::string kind_name =
      require_string(require_field(jstate, source + ".state", "kind"), source + ".state.kind");

  Scenario s{std::move(vocab), op, StateKind::Preorder, {}, {}, {}, {}, {}, {}};
  const std::string spath = source + ".state";

  if (kind_name == "preorder") {
    s.kind = StateKind::Preorder;
    reject_unknown_keys(jstate, spath, {"kind", "ranks", "beliefs"});
    auto ranks = parse_ranks(require_field(jstate, spath, "ranks"), spath + ".ranks", s.vocab,
                             /*allow_inf=*/false);
    std::vector<std::uint32_t> finite;
    for (Rank r : ranks) finite.push_back(r.finite_value());
    s.preorder = TotalPreorder(std::move(finite));
    if (jstate.contains("beliefs")) {
      const std::string btext = require_string(jstate.at("beliefs"), spath + ".beliefs");
      s.beliefs = BeliefSet{models(parse_scenario_formula(btext, s.vocab, spath + ".beliefs"),
                                   s.vocab)};
    }
  } else if (kind_name == "ocf") {
    s.kind = StateKind::Ocf;
    reject_unknown_keys(jstate, spath, {"kind", "ranks"});
    s.ocf = Ocf(parse_ranks(require_field(jstate, spath, "ranks"), spath + ".ranks", s.vocab,
                            /*allow_inf=*/true));
    if (auto v = validate_ocf(*s.ocf)) schema_fail(spath + ".ranks", *v);
  } else if (kind_name == "knowledge" || kind_name == "sequence") {
    s.kind = kind_name == "knowledge" ? StateKind::Knowledge : StateKind::Sequence;
    reject_unknown_keys(jstate, spath, {"kind", "ranks", "observations"});
    if (jstate.contains("ranks")) {
      s.ocf = Ocf(parse_ranks(jstate.at("ranks"), spath + ".ranks", s.vocab,
                              /*allow_inf=*/false));
      if (auto v = validate_ocf(*s.ocf)) schema_fail(spath + ".ranks", *v);
    } else if (kind_name == "sequence") {
      s.ocf = Ocf::flat(s.vocab.world_count());
    } else {
      schema_fail(spath + ".ranks", "missing");
    }
    if (jstate.contains("observations")) {
      const json& jobs = jstate.at("observations");
      if (!jobs.is_array()) schema_fail(spath + ".observations", "expected an array");
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        const std::string p = spath + ".observations[" + std::to_string(i) + "]";
        s.prior_observations.push_back(
            parse_scenario_formula(require_string(jobs[i], p), s.vocab, p));
      }
    }
  } else {
    schema_fail(spath + ".kind", "unknown state kind '" + kind_name + "'");
  }

  // Operator/state compatibility.
  const auto incompatible = [&](const std::string& why) {
    schema_fail(source, "operator '" + op + "' " + why);
  };
  if (op == "boutilier" && s.kind != StateKind::Preorder) {
    incompatible("requires a preorder state");
  }
  if ((op == "fl" || op == "ranking") && s.kind != StateKind::Preorder) {
    incompatible("requires a prior preorder state");
  }
  if (op == "boutilier" && s.beliefs) {
    schema_fail(spath + ".beliefs", "not allowed for operator 'boutilier'");
  }
  if (op == "dp" && s.kind != StateKind::Ocf) incompatible("requires an ocf state");
  if (op == "knowledge" && s.kind == StateKind::Preorder) {
    incompatible("requires an ocf, knowledge, or sequence state");
  }
  if (op == "knowledge" && s.kind == StateKind::Ocf && !s.ocf->all_finite()) {
    schema_fail(spath + ".ranks", "knowledge priors must be finite (nothing is known yet)");
  }

  const json& jobs = require_field(j, source, "observations");
  if (!jobs.is_array()) schema_fail(source + ".observations", "expected an array");
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string p = source + ".observations[" + std::to_string(i) + "]";
    const std::string text = require_string(jobs[i], p);
    s.observations.push_back(parse_scenario_formula(text, s.vocab, p));
    s.observation_texts.push_back(text);
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path);
}

// ---------------------------------------------------------------------------
// Trace execution

namespace {

std::string firmness_table(const Ocf& k, const Vocabulary& vocab) {
  std::string out;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    if (i > 0) out += ' ';
    WorldSet am(vocab.world_count());
    for (WorldId w = 0; w < vocab.world_count(); ++w) {
      if (vocab.atom_true_in(w, i)) am.insert(w);
    }
    if (kappa_value(k, am) == Rank(0)) {
      out += vocab.atoms()[i] + "=" + kappa_value(k, am.complement()).str();
    } else {
      out += "!" + vocab.atoms()[i] + "=" + kappa_value(k, am).str();
    }
  }
  return out;
}

}  // namespace

Trace run_scenario(const Scenario& s) {
  const Vocabulary& vocab = s.vocab;
  Trace t;

  // Per-operator step function over a small amount of mutable state.
  TotalPreorder preorder = s.preorder.value_or(TotalPreorder::flat(vocab.world_count()));
  std::optional<KnowledgeState> knowledge;
  std::optional<Ocf> ocf;
  BeliefSet k = tautology_belief_set(vocab);
  std::optional<RevisionAssignment> assignment;

  if (s.operator_name == "boutilier") {
    t.initial_state = rank_map_to_string(preorder, vocab);
    t.initial_beliefs = belief_set_to_string(bel_preorder(preorder), vocab);
  } else if (s.operator_name == "dp") {
    ocf = *s.ocf;
    t.initial_state = rank_map_to_string(*ocf, vocab);
    t.initial_beliefs = belief_set_to_string(bel_ocf(*ocf), vocab);
  } else if (s.operator_name == "knowledge") {
    KnowledgeState ks = make_knowledge_state(*s.ocf);
    for (std::size_t i = 0; i < s.prior_observations.size(); ++i) {
      try {
        ks = knowledge_observe(ks, s.prior_observations[i], vocab);
      } catch (const DomainError& e) {
        throw SchemaError("state.observations[" + std::to_string(i) + "]: " + e.what());
      }
    }
    knowledge = std::move(ks);
    t.initial_state = rank_map_to_string(knowledge->kappa, vocab);
    t.initial_beliefs = belief_set_to_string(bel_ocf(knowledge->kappa), vocab);
  } else {  // fl, ranking
    k = s.beliefs.value_or(bel_preorder(preorder));
    if (s.operator_name == "ranking") {
      assignment = RevisionAssignment::derived_total(preorder, vocab);
    }
    t.initial_state = "prior " + rank_map_to_string(preorder, vocab);
    t.initial_beliefs = belief_set_to_string(k, vocab);
  }

  for (std::size_t i = 0; i < s.observations.size(); ++i) {
    const Formula& f = s.observations[i];
    TraceStep step;
    step.index = static_cast<int>(i) + 1;
    step.observation = s.observation_texts[i];
    try {
      if (s.operator_name == "boutilier") {
        preorder = boutilier_revise(preorder, f, vocab);
        step.beliefs = belief_set_to_string(bel_preorder(preorder), vocab);
        step.state = rank_map_to_string(preorder, vocab);
      } else if (s.operator_name == "dp") {
        *ocf = dp_revise(*ocf, f, vocab);
        step.beliefs = belief_set_to_string(bel_ocf(*ocf), vocab);
        step.firmness = firmness_table(*ocf, vocab);
        step.state = rank_map_to_string(*ocf, vocab);
      } else if (s.operator_name == "knowledge") {
        *knowledge = knowledge_observe(*knowledge, f, vocab);
        step.beliefs = belief_set_to_string(bel_ocf(knowledge->kappa), vocab);
        step.firmness = firmness_table(knowledge->kappa, vocab);
        step.known = dnf_string(known_worlds(*knowledge, vocab), vocab);
        step.state = rank_map_to_string(knowledge->kappa, vocab);
      } else if (s.operator_name == "fl") {
        k = fl_revise(preorder, k, f, vocab);
        step.beliefs = belief_set_to_string(k, vocab);
        step.state = "K = " + step.beliefs;
      } else {  // ranking
        k = agm_revise(*assignment, k, f, vocab);
        step.beliefs = belief_set_to_string(k, vocab);
        step.state = "K = " + step.beliefs;
      }
    } catch (const DomainError& e) {
      t.error = StepError{step.index, step.observation, e.what()};
      return t;
    }
    t.steps.push_back(std::move(step));
  }

  if (!t.steps.empty()) {
    t.final_beliefs = t.steps.back().beliefs;
  } else {
    t.final_beliefs = t.initial_beliefs;
  }
  return t;
}

std::string render_trace_text(const Scenario& s, const Trace& t) {
  std::ostringstream out;
  out << "vocabulary:";
  for (const auto& a : s.vocab.atoms()) out << ' ' << a;
  out << '\n';
  out << "operator: " << s.operator_name << '\n';
  out << "initial state: " << t.initial_state << '\n';
  out << "initial beliefs: " << t.initial_beliefs << '\n';
  for (const auto& step : t.steps) {
    out << "step " << step.index << ": observe " << step.observation << '\n';
    out << "  beliefs: " << step.beliefs << '\n';
    if (step.firmness) out << "  firmness: " << *step.firmness << '\n';
    if (step.known) out << "  known: " << *step.known << '\n';
    out << "  state: " << step.state << '\n';
  }
  if (t.error) {
    out << "step " << t.error->step << ": observe " << t.error->observation << '\n';
    out << "  error: " << t.error->message << '\n';
  } else {
    out << "final beliefs: " << t.final_beliefs << '\n';
  }
  return out.str();
}

std::string render_trace_json(const Scenario& s, const Trace& t) {
  json j;
  j["vocabulary"] = s.vocab.atoms();
  j["operator"] = s.operator_name;
  j["initial"] = {{"state", t.initial_state}, {"beliefs", t.initial_beliefs}};
  j["steps"] = json::array();
  for (const auto& step : t.steps) {
    json js;
    js["index"] = step.index;
    js["observation"] = step.observation;
    js["beliefs"] = step.beliefs;
    if (step.firmness) js["firmness"] = *step.firmness;
    if (step.known) js["known"] = *step.known;
    js["state"] = step.state;
    j["steps"].push_back(std::move(js));
  }
  if (t.error) {
    j["error"] = {{"step", t.error->step},
                  {"observation", t.error->observation},
                  {"message", t.error->message}};
  } else {
    j["final_beliefs"] = t.final_beliefs;
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Suites

Ocf graded_atom_ocf(const Vocabulary& vocab) {
  std::vector<Rank> ranks;
  for (WorldId w = 0; w < vocab.world_count(); ++w) {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      if (!vocab.atom_true_in(w, i)) r += static_cast<std::uint32_t>(i) + 1;
    }
    ranks.push_back(Rank(r));
  }
  return Ocf(std::move(ranks));
}

namespace {

struct Expectation {
  std::string postulate;
  CheckStatus status;
};

std::vector<Expectation> expected_signature(const std::string& suite, const std::string& op) {
  auto pass_range = [](const std::string& prefix, int from, int to, const std::string& suffix) {
    std::vector<Expectation> out;
    for (int i = from; i <= to; ++i) {
      out.push_back({prefix + std::to_string(i) + suffix, CheckStatus::Pass});
    }
    return out;
  };
  std::vector<Expectation> sig;
  if (suite == "agm" || suite == "fl") {
    sig = pass_range("R", 1, 8, "");
    if (suite == "fl") sig.push_back({"FL", CheckStatus::Pass});
    return sig;
  }
  if (suite == "agm-primed" || suite == "dp") {
    sig = pass_range("R", 1, 8, "'");
    sig.push_back({"R9'", op == "knowledge" ? CheckStatus::Pass : CheckStatus::Fail});
    if (suite == "dp") {
      sig.push_back({"C1'", CheckStatus::Pass});
      sig.push_back({"C2'", op == "knowledge" ? CheckStatus::Vacuous : CheckStatus::Pass});
      sig.push_back({"C3'", CheckStatus::Pass});
      sig.push_back({"C4'", CheckStatus::Pass});
    }
    return sig;
  }
  if (suite == "lehmann") {
    sig = {{"I1", CheckStatus::Pass}, {"I2", CheckStatus::Pass}, {"I3", CheckStatus::Pass},
           {"I4", CheckStatus::Fail}, {"I5", CheckStatus::Pass}, {"I6", CheckStatus::Pass},
           {"I7", CheckStatus::Vacuous}};
    return sig;
  }
  if (suite == "weak-i4") {
    sig = {{"weak-I4", CheckStatus::Pass}};
    return sig;
  }
  throw SchemaError("unknown suite '" + suite + "'");
}

}  // namespace

SuiteResult run_suite(const std::string& suite, const std::string& operator_name,
                      const CheckConfig& cfg) {
  SuiteResult result;
  result.suite = suite;
  result.operator_name = operator_name;

  const std::set<std::string> belief_ops = {"ranking", "fl"};
  const std::set<std::string> state_ops = {"dp", "boutilier", "knowledge"};

  if (suite == "agm" || suite == "fl") {
    if (!belief_ops.count(operator_name)) {
      throw SchemaError("suite '" + suite + "' requires operator ranking or fl");
    }
    if (suite == "fl" && operator_name != "fl") {
      throw SchemaError("suite 'fl' requires operator fl");
    }
    if (operator_name == "ranking") {
      std::vector<std::vector<CheckReport>> runs;
      for (const auto& p : enumerate_preorders(cfg.vocab.world_count())) {
        runs.push_back(check_r(ranking_induced_op(p, cfg.vocab), cfg));
      }
      result.reports = merge_reports(std::move(runs));
    } else {
      const BeliefRevisionOp op = fl_op(TotalPreorder::flat(cfg.vocab.world_count()), cfg.vocab);
      result.reports = check_r(op, cfg);
      if (suite == "fl") result.reports.push_back(check_fl(op, cfg));
    }
  } else if (suite == "agm-primed" || suite == "dp") {
    if (!state_ops.count(operator_name)) {
      throw SchemaError("suite '" + suite + "' requires operator dp, boutilier, or knowledge");
    }
    const EpistemicOp op = operator_name == "dp"          ? make_dp_op(cfg)
                           : operator_name == "boutilier" ? make_boutilier_op(cfg)
                                                          : make_knowledge_op(cfg);
    result.reports = check_r_primed(op, cfg);
    if (suite == "dp") {
      auto c = check_c_primed(op, cfg);
      result.reports.insert(result.reports.end(), c.begin(), c.end());
    }
  } else if (suite == "lehmann" || suite == "weak-i4") {
    if (operator_name != "knowledge") {
      throw SchemaError("suite '" + suite + "' requires operator knowledge");
    }
    const BelEvaluator evaluator = make_knowledge_evaluator(graded_atom_ocf(cfg.vocab), cfg.vocab);
    if (suite == "lehmann") {
      result.reports = check_i(evaluator, cfg);
    } else {
      result.reports.push_back(check_weak_i4(evaluator, cfg));
    }
  } else {
    throw SchemaError("unknown suite '" + suite + "'");
  }

  const auto expected = expected_signature(suite, operator_name);
  if (expected.size() != result.reports.size()) {
    throw SchemaError("suite definition does not match report shape");
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const std::string name = result.reports[i].postulate.name();
    if (name != expected[i].postulate) {
      throw SchemaError("suite definition does not match report shape at " + name);
    }
    if (result.reports[i].status != expected[i].status) {
      result.signature_ok = false;
      result.mismatches.push_back(name + ": expected " + to_string(expected[i].status) +
                                  ", got " + to_string(result.reports[i].status));
    }
  }
  return result;
}

namespace {

void render_report_lines(std::ostringstream& out, const CheckReport& r) {
  std::string name = r.postulate.name();
  out << name << std::string(name.size() < 12 ? 12 - name.size() : 1, ' ');
  std::string status = to_string(r.status);
  for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  out << status << "  checked=" << r.instances_checked << " skipped=" << r.domain_skipped;
  if (r.failures_total > 0) out << " failures=" << r.failures_total;
  out << '\n';
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
    const auto& ce = r.counterexamples[i];
    out << "  counterexample " << (i + 1) << " (instance " << ce.instance_index << "):\n";
    for (const auto& [k, v] : ce.bindings) out << "    " << k << " = " << v << '\n';
    if (!ce.trace.empty()) out << "    " << ce.trace << '\n';
  }
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
}

void render_cfg_header(std::ostringstream& out, const CheckConfig& cfg) {
  out << "vocabulary:";
  for (const auto& a : cfg.vocab.atoms()) out << ' ' << a;
  out << '\n';
  out << "max-rank: " << cfg.max_rank << '\n';
  out << "seq-bound: " << cfg.sequence_length_bound << '\n';
}

json report_to_json(const CheckReport& r) {
  json jr;
  jr["postulate"] = r.postulate.name();
  jr["status"] = to_string(r.status);
  jr["instances_checked"] = r.instances_checked;
  jr["domain_skipped"] = r.domain_skipped;
  jr["failures_total"] = r.failures_total;
  jr["counterexamples"] = json::array();
  for (const auto& ce : r.counterexamples) {
    json jce;
    jce["instance"] = ce.instance_index;
    jce["bindings"] = json::array();
    for (const auto& [k, v] : ce.bindings) {
      jce["bindings"].push_back({{"name", k}, {"value", v}});
    }
    jce["trace"] = ce.trace;
    jr["counterexamples"].push_back(std::move(jce));
  }
  jr["notes"] = r.notes;
  return jr;
}

}  // namespace

std::string render_suite_text(const SuiteResult& r, const CheckConfig& cfg) {
  std::ostringstream out;
  out << "suite: " << r.suite << '\n';
  out << "operator: " << r.operator_name << '\n';
  render_cfg_header(out, cfg);
  for (const auto& report : r.reports) render_report_lines(out, report);
  if (r.signature_ok) {
    out << "signature: as expected\n";
  } else {
    out << "signature: UNEXPECTED\n";
    for (const auto& m : r.mismatches) out << "  " << m << '\n';
  }
  return out.str();
}

std::string render_suite_json(const SuiteResult& r, const CheckConfig& cfg) {
  json j;
  j["suite"] = r.suite;
  j["operator"] = r.operator_name;
  j["vocabulary"] = cfg.vocab.atoms();
  j["max_rank"] = cfg.max_rank;
  j["seq_bound"] = cfg.sequence_length_bound;
  j["reports"] = json::array();
  for (const auto& report : r.reports) j["reports"].push_back(report_to_json(report));
  j["signature_ok"] = r.signature_ok;
  j["mismatches"] = r.mismatches;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Searches

SearchResult run_search(const std::string& target, const CheckConfig& cfg) {
  SearchResult r;
  r.target = target;
  if (target == "nonfunctional-dp") {
    r.nonfunctional = search_dp_nonfunctional(cfg);
  } else if (target == "c2-incompat") {
    r.analysis = c2_case_analysis(cfg.vocab, /*include_false=*/true);
  } else {
    throw SchemaError("unknown search target '" + target + "'");
  }
  return r;
}

std::string render_search_text(const SearchResult& r, const CheckConfig& cfg) {
  std::ostringstream out;
  out << "target: " << r.target << '\n';
  render_cfg_header(out, cfg);
  if (r.nonfunctional) {
    const auto& nf = *r.nonfunctional;
    if (!nf.witness) {
      out << "no witness at these bounds (" << nf.triples_examined << " triples examined)\n";
      return out.str();
    }
    const auto& w = *nf.witness;
    out << "witness found (" << nf.triples_examined << " triples examined):\n";
    out << "  k1 = " << rank_map_to_string(w.k1, cfg.vocab) << '\n';
    out << "  k2 = " << rank_map_to_string(w.k2, cfg.vocab) << '\n';
    out << "  bel(k1) = bel(k2) = " << belief_set_to_string(w.bel_common, cfg.vocab) << '\n';
    out << "  revise by: " << formula_to_string(w.revising) << '\n';
    out << "  bel(dp(k1)) = " << belief_set_to_string(w.bel1_after, cfg.vocab) << '\n';
    out << "  bel(dp(k2)) = " << belief_set_to_string(w.bel2_after, cfg.vocab) << '\n';
    out << "replay: put each rank map in a scenario file with operator \"dp\" and the\n"
           "formula above as the single observation, run `revlab revise` on both, and\n"
           "compare the final beliefs.\n";
    return out.str();
  }
  const auto& a = *r.analysis;
  out << "formula classes: " << (a.include_false ? "all (revision total on the language)" : "satisfiable only")
      << '\n';
  out << "derivation:\n";
  for (const auto& line : a.derivation) out << "  " << line << '\n';
  if (a.closed) {
    out << "result: closed - every candidate table violates R1-R4 + C2\n";
  } else {
    out << "result: satisfiable - R1-R4 + C2 admit a table at this vocabulary\n";
    out << "table:\n";
    std::istringstream table(*a.satisfying_table);
    std::string line;
    while (std::getline(table, line)) out << "  " << line << '\n';
  }
  out << "branches explored: " << a.branches_explored << '\n';
  return out.str();
}

std::string render_search_json(const SearchResult& r, const CheckConfig& cfg) {
  json j;
  j["target"] = r.target;
  j["vocabulary"] = cfg.vocab.atoms();
  j["max_rank"] = cfg.max_rank;
  if (r.nonfunctional) {
    const auto& nf = *r.nonfunctional;
    j["triples_examined"] = nf.triples_examined;
    if (nf.witness) {
      const auto& w = *nf.witness;
      j["witness"] = {{"k1", rank_map_to_string(w.k1, cfg.vocab)},
                      {"k2", rank_map_to_string(w.k2, cfg.vocab)},
                      {"bel_common", belief_set_to_string(w.bel_common, cfg.vocab)},
                      {"formula", formula_to_string(w.revising)},
                      {"bel1_after", belief_set_to_string(w.bel1_after, cfg.vocab)},
                      {"bel2_after", belief_set_to_string(w.bel2_after, cfg.vocab)}};
    } else {
      j["witness"] = nullptr;
    }
  }
  if (r.analysis) {
    const auto& a = *r.analysis;
    j["closed"] = a.closed;
    j["include_false"] = a.include_false;
    j["branches_explored"] = a.branches_explored;
    j["derivation"] = a.derivation;
    if (a.satisfying_table) j["satisfying_table"] = *a.satisfying_table;
  }
  return j.dump(2) + "\n";
}

}  // namespace revlab
