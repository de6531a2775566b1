#include "doctest.h"

#include "revlab/scenario.hpp"
#include "support/test_util.hpp"

using namespace revlab;
using namespace revlab::test;

namespace {

const char* kI4Scenario = R"({
  "vocabulary": ["p", "q"],
  "state": {"kind": "ocf", "ranks": {"11": 0, "01": 1, "10": 2, "00": 3}},
  "operator": "knowledge",
  "observations": ["p", "!p | !q"]
})";

}  // namespace

TEST_CASE("minimal scenario loads and validates") {
  const Scenario s = parse_scenario_text(
      R"({"vocabulary": ["p"],
          "state": {"kind": "ocf", "ranks": {"0": 0, "1": 0}},
          "operator": "dp",
          "observations": ["p"]})",
      "test");
  CHECK(s.operator_name == "dp");
  CHECK(s.kind == StateKind::Ocf);
  CHECK(s.observations.size() == 1);
}

TEST_CASE("schema errors name the offending field") {
  // Missing world in the rank map.
  try {
    parse_scenario_text(
        R"({"vocabulary": ["p", "q"],
            "state": {"kind": "ocf", "ranks": {"11": 0, "01": 1, "10": 2}},
            "operator": "dp",
            "observations": []})",
        "test");
    FAIL("expected schema error");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("00") != std::string::npos);
  }

  // Operator/state kind mismatch.
  CHECK_THROWS_AS(parse_scenario_text(
                      R"({"vocabulary": ["p"],
                          "state": {"kind": "ocf", "ranks": {"0": 0, "1": 0}},
                          "operator": "boutilier",
                          "observations": []})",
                      "test"),
                  SchemaError);

  // Unknown field.
  CHECK_THROWS_AS(parse_scenario_text(
                      R"({"vocabulary": ["p"],
                          "state": {"kind": "ocf", "ranks": {"0": 0, "1": 0}},
                          "operator": "dp",
                          "observations": [],
                          "extra": 1})",
                      "test"),
                  SchemaError);

  // An OCF state must have a rank-0 world.
  CHECK_THROWS_AS(parse_scenario_text(
                      R"({"vocabulary": ["p"],
                          "state": {"kind": "ocf", "ranks": {"0": 1, "1": 2}},
                          "operator": "dp",
                          "observations": []})",
                      "test"),
                  SchemaError);

  // A knowledge prior with nothing observed yet must be all finite.
  CHECK_THROWS_AS(parse_scenario_text(
                      R"({"vocabulary": ["p"],
                          "state": {"kind": "ocf", "ranks": {"0": "inf", "1": 0}},
                          "operator": "knowledge",
                          "observations": []})",
                      "test"),
                  SchemaError);

  // Formula errors surface as parse errors.
  CHECK_THROWS_AS(parse_scenario_text(
                      R"({"vocabulary": ["p"],
                          "state": {"kind": "ocf", "ranks": {"0": 0, "1": 0}},
                          "operator": "dp",
                          "observations": ["p &"]})",
                      "test"),
                  ParseError);
  CHECK_THROWS_AS(parse_scenario_text(
                      R"({"vocabulary": ["p"],
                          "state": {"kind": "ocf", "ranks": {"0": 0, "1": 0}},
                          "operator": "dp",
                          "observations": ["p & r"]})",
                      "test"),
                  ParseError);
}

TEST_CASE("the worked knowledge scenario ends with p and not q") {
  const Scenario s = parse_scenario_text(kI4Scenario, "test");
  const Trace t = run_scenario(s);
  REQUIRE(!t.error.has_value());
  REQUIRE(t.steps.size() == 2);
  CHECK(t.final_beliefs == "(p & !q)");
  CHECK(t.steps[0].beliefs == "(p & q)");
  CHECK(t.steps[0].firmness == "p=inf q=2");
  CHECK(t.steps[1].firmness == "p=inf !q=inf");
}

TEST_CASE("traces are deterministic and text/json agree on belief sets") {
  const Scenario s = parse_scenario_text(kI4Scenario, "test");
  const Trace t1 = run_scenario(s);
  const Trace t2 = run_scenario(s);
  CHECK(render_trace_text(s, t1) == render_trace_text(s, t2));
  CHECK(render_trace_json(s, t1) == render_trace_json(s, t2));

  // The JSON document carries the same belief strings as the text trace.
  const std::string json_text = render_trace_json(s, t1);
  for (const auto& step : t1.steps) {
    CHECK(json_text.find("\"beliefs\": \"" + step.beliefs + "\"") != std::string::npos);
  }
  // Belief strings parse back to the same model sets in both renderings.
  for (const auto& step : t1.steps) {
    CHECK(models(parse_formula(step.beliefs, s.vocab), s.vocab).count() > 0);
  }
}

TEST_CASE("knowledge traces keep observations known") {
  const Scenario s = parse_scenario_text(kI4Scenario, "test");
  const Trace t = run_scenario(s);
  // Each step's known summary entails all observations so far.
  WorldSet conj = WorldSet::all(s.vocab.world_count());
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    conj = conj.intersect(models(s.observations[i], s.vocab));
    REQUIRE(t.steps[i].known.has_value());
    const WorldSet known = models(parse_formula(*t.steps[i].known, s.vocab), s.vocab);
    CHECK(known == conj);
  }
}

TEST_CASE("a contradicting observation yields a partial trace") {
  const Scenario s = parse_scenario_text(
      R"({"vocabulary": ["p", "q"],
          "state": {"kind": "ocf", "ranks": {"11": 0, "01": 0, "10": 0, "00": 0}},
          "operator": "knowledge",
          "observations": ["p", "!p"]})",
      "test");
  const Trace t = run_scenario(s);
  REQUIRE(t.error.has_value());
  CHECK(t.error->step == 2);
  CHECK(t.steps.size() == 1);
  const std::string text = render_trace_text(s, t);
  CHECK(text.find("error:") != std::string::npos);
}

TEST_CASE("knowledge state kind replays prior observations") {
  const Scenario s = parse_scenario_text(
      R"({"vocabulary": ["p", "q"],
          "state": {"kind": "knowledge",
                    "ranks": {"11": 0, "01": 1, "10": 2, "00": 3},
                    "observations": ["p"]},
          "operator": "knowledge",
          "observations": ["!p | !q"]})",
      "test");
  const Trace t = run_scenario(s);
  REQUIRE(!t.error.has_value());
  CHECK(t.final_beliefs == "(p & !q)");

  // Inconsistent prior observations are a schema problem.
  CHECK_THROWS_AS(run_scenario(parse_scenario_text(
                      R"({"vocabulary": ["p", "q"],
                          "state": {"kind": "knowledge",
                                    "ranks": {"11": 0, "01": 0, "10": 0, "00": 0},
                                    "observations": ["p", "!p"]},
                          "operator": "knowledge",
                          "observations": []})",
                      "test")),
                  SchemaError);
}

TEST_CASE("sequence state kind defaults to a flat prior") {
  const Scenario s = parse_scenario_text(
      R"({"vocabulary": ["p", "q"],
          "state": {"kind": "sequence", "observations": ["p"]},
          "operator": "knowledge",
          "observations": ["q"]})",
      "test");
  const Trace t = run_scenario(s);
  CHECK(t.final_beliefs == "(p & q)");
}

TEST_CASE("fl and ranking scenarios revise belief sets over a fixed prior") {
  const char* base = R"({"vocabulary": ["b", "r"],
      "state": {"kind": "preorder", "ranks": {"00": 0, "01": 0, "10": 0, "11": 0}},
      "operator": "%OP%",
      "observations": ["b", "r", "!b"]})";
  for (const std::string op : {"fl", "ranking"}) {
    std::string text(base);
    text.replace(text.find("%OP%"), 4, op);
    const Scenario s = parse_scenario_text(text, "test");
    const Trace t = run_scenario(s);
    REQUIRE(!t.error.has_value());
    CHECK(t.final_beliefs == "(!b & !r) | (!b & r)");
  }
}

TEST_CASE("incompatible suite pairing is rejected") {
  CheckConfig cfg = CheckConfig::exhaustive(vocab_pq());
  CHECK_THROWS_AS(run_suite("lehmann", "dp", cfg), SchemaError);
  CHECK_THROWS_AS(run_suite("agm", "dp", cfg), SchemaError);
  CHECK_THROWS_AS(run_suite("unknown", "dp", cfg), SchemaError);
  CHECK_THROWS_AS(run_search("unknown", cfg), SchemaError);
}

TEST_CASE("suite signatures are enforced") {
  CheckConfig cfg = CheckConfig::exhaustive(vocab_pq());
  cfg.mode = ExecutionMode::Serial;
  const SuiteResult r = run_suite("dp", "dp", cfg);
  CHECK(r.signature_ok);
  const std::string text = render_suite_text(r, cfg);
  CHECK(text.find("signature: as expected") != std::string::npos);
  const std::string json_text = render_suite_json(r, cfg);
  CHECK(json_text.find("\"signature_ok\": true") != std::string::npos);
}
