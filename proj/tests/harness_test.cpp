/*
 * Copyright 2026 The fuzzyseq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fuzzyseq/experiment_spec.hpp"
#include "fuzzyseq/experiments.hpp"
#include "fuzzyseq/kernels.hpp"
#include "fuzzyseq/literal.hpp"
#include "fuzzyseq/report.hpp"

namespace fuzzyseq {
namespace {

using nlohmann::json;

json small_spec() {
  return json::parse(R"({
    "id": "small",
    "claims": ["demo"],
    "sequence": {"example": "thm-2.12-strict"},
    "theta": "powers2",
    "grid": {"beta": [0.3], "gamma": [1]},
    "estimators": ["strong"],
    "horizon": {"r_max": 14},
    "expectations": [
      {"when": {"gamma": 1}, "verdict": "tends-to-zero"},
      {"when": {"beta": 0.3}, "verdict": "not:tends-to-zero"}
    ],
    "checks": [{"kind": "order-monotone"}]
  })");
}

TEST(SpecParsing, DefaultsAndFields) {
  const ExperimentSpec s = experiment_spec_from_json(small_spec());
  EXPECT_EQ(s.id, "small");
  EXPECT_EQ(s.claims, std::vector<std::string>{"demo"});
  EXPECT_EQ(s.r_max, 14);
  EXPECT_EQ(s.limits, std::vector<std::string>{"auto"});
  EXPECT_EQ(s.modulus, "identity");
  EXPECT_EQ(s.grid.p, std::vector<double>{1.0});
  EXPECT_EQ(s.grid.m, std::vector<int>{1});
  ASSERT_EQ(s.expectations.size(), 2u);
  EXPECT_TRUE(s.expectations[1].negated);
  EXPECT_EQ(s.expectations[1].describe(), "not:tends-to-zero");
  EXPECT_EQ(s.checks.size(), 1u);
}

TEST(SpecParsing, TextAndJsonEntryPointsAgree) {
  const ExperimentSpec a = parse_experiment_spec(small_spec().dump());
  const ExperimentSpec b = experiment_spec_from_json(small_spec());
  EXPECT_EQ(a.id, b.id);
  EXPECT_EQ(expand_cells(a).size(), expand_cells(b).size());
}

TEST(SpecParsing, HorizonFromPrefixLength) {
  json j = small_spec();
  j["horizon"] = json{{"n_max", 1000000}};
  EXPECT_EQ(experiment_spec_from_json(j).r_max, 19);
  j["horizon"] = 12;
  EXPECT_EQ(experiment_spec_from_json(j).r_max, 12);
}

TEST(SpecParsing, RejectsMalformedSpecs) {
  const auto rejects = [](const std::function<void(json&)>& edit) {
    json j = small_spec();
    edit(j);
    EXPECT_THROW(experiment_spec_from_json(j), std::invalid_argument) << j.dump();
  };
  rejects([](json& j) { j.erase("grid"); });
  rejects([](json& j) { j["grid"] = json::object(); });
  rejects([](json& j) { j["grid"]["m"] = {1.5}; });
  rejects([](json& j) { j["grid"]["beta"] = {1.5}; });
  rejects([](json& j) { j["grid"]["beta"] = {0.3, 0.3}; });
  rejects([](json& j) { j["estimators"] = {"median"}; });
  rejects([](json& j) { j["sequence"] = {{"example", "nope"}}; });
  rejects([](json& j) { j["theta"] = "explicit:0,3,2"; });
  rejects([](json& j) { j["horizon"] = "long"; });
  rejects([](json& j) { j["checks"] = {{{"kind", "magic"}}}; });
  rejects([](json& j) { j["modulus"] = "xcubed"; });
  rejects([](json& j) { j["expectations"] = json::array(); });
  rejects([](json& j) { j["expectations"][0]["verdict"] = "likely"; });
  rejects([](json& j) { j["expectations"][0]["when"] = {{"colour", "red"}}; });
  EXPECT_THROW(parse_experiment_spec("{oops"), std::invalid_argument);
}

TEST(SpecParsing, EveryCellNeedsExactlyOneExpectation) {
  json none = small_spec();
  none["expectations"] = {{{"when", {{"gamma", 1}}}, {"verdict", "tends-to-zero"}}};
  EXPECT_THROW(experiment_spec_from_json(none), std::invalid_argument);
  json twice = small_spec();
  twice["expectations"].push_back({{"when", {{"estimator", "strong"}}}, {"verdict", "growing"}});
  EXPECT_THROW(experiment_spec_from_json(twice), std::invalid_argument);
}

TEST(SpecParsing, BetaAboveOneNeedsTheFlag) {
  json j = small_spec();
  j["grid"]["beta"] = {1.5};
  j["expectations"][1]["when"]["beta"] = 1.5;
  EXPECT_THROW(experiment_spec_from_json(j), std::invalid_argument);
  j["allow_beta_gt_1"] = true;
  EXPECT_NO_THROW(experiment_spec_from_json(j));
}

TEST(Cells, SortedKeysAndMatching) {
  json j = small_spec();
  j["estimators"] = {"density", "strong"};
  j["grid"]["epsilon"] = {0.5, 1};
  j["expectations"] = {{{"when", {{"estimator", {"density", "strong"}}}}, {"verdict", {"growing", "bounded-away"}}}};
  const ExperimentSpec s = experiment_spec_from_json(j);
  const auto cells = expand_cells(s);
  ASSERT_EQ(cells.size(), 8u);
  EXPECT_TRUE(std::is_sorted(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.key < b.key; }));
  EXPECT_EQ(cells.front().key, "lacunary-density/beta=0.3/eps=0.5/m=1/p=1/limit=auto");
  for (const Cell& c : cells) {
    const Expectation& e = expectation_for(s, c);
    EXPECT_TRUE(e.accepts(VerdictKind::Growing));
    EXPECT_FALSE(e.accepts(VerdictKind::TendsToZero));
  }
  const Cell& gamma_cell = cells.back();
  EXPECT_EQ(gamma_cell.order_name, "gamma");
  EXPECT_TRUE(cell_matches(gamma_cell, json{{"order", {0.3, 1}}}));
  EXPECT_FALSE(cell_matches(gamma_cell, json{{"beta", 1}}));
  EXPECT_TRUE(cell_matches(gamma_cell, json{{"limit", "auto"}, {"m", 1}}));
}

TEST(SequenceSpecs, AllAcceptedForms) {
  EXPECT_EQ(parse_sequence_arg("order-gt-one").example, ExampleId::Alternating);
  EXPECT_EQ(parse_sequence_spec(json("thm-2.7-strict")).example, ExampleId::GrowingSupports);
  const SequenceSpec rules = parse_sequence_arg(R"js({"rules":[{"indexClass":"cube","value":"tri(2,3,4)"},
                                                              {"value":"tri(5,8,11)"}]})js");
  ASSERT_EQ(rules.rules.size(), 2u);
  EXPECT_EQ(rules.build().at(8), FuzzyNumber::triangular(2, 3, 4));
  EXPECT_EQ(parse_sequence_arg(R"js([{"value":"crisp(1)"}])js").rules.size(), 1u);
  EXPECT_THROW(parse_sequence_arg("nope"), std::invalid_argument);
  EXPECT_THROW(parse_sequence_arg(R"js({"rules":[{"indexClass":"cube","value":"tri(2,3,4)"}]})js"),
               std::invalid_argument);
  EXPECT_THROW(parse_sequence_arg(R"js({"rules":[{"value":"tri(3,2,1)"}]})js"), std::invalid_argument);
}

TEST(Limits, TokensResolve) {
  const SequenceSpec cubes = parse_sequence_arg(R"js([{"indexClass":"cube","value":"tri(2,3,4)"},
                                                     {"value":"tri(5,8,11)"}])js");
  const FuzzyNumber rule_auto = resolve_limit("auto", cubes, 1).value;
  EXPECT_EQ(alpha_cut(rule_auto, 0.0), (Interval{-6, 6}));
  SequenceSpec example;
  example.example = ExampleId::BoundedCubes;
  EXPECT_EQ(metric_d(resolve_limit("auto", example, 1).value, rule_auto), 0.0);
  EXPECT_EQ(metric_d(resolve_limit("oracle", example, 1).value, rule_auto), 0.0);
  EXPECT_EQ(resolve_limit("tri(0,1,2)", example, 1).value, FuzzyNumber::triangular(0, 1, 2));
  SequenceSpec alt;
  alt.example = ExampleId::Alternating;
  EXPECT_EQ(metric_d(resolve_limit("class:even", alt, 1).value, resolve_limit("class:odd", alt, 1).value), 6.0);
  EXPECT_THROW(resolve_limit("oracle", cubes, 1), std::invalid_argument);
  EXPECT_THROW(resolve_limit("class:cube", alt, 1), std::invalid_argument);
  EXPECT_THROW(resolve_limit("oracle", alt, 0), std::invalid_argument);
  EXPECT_THROW(resolve_limit("tri(", alt, 1), std::invalid_argument);
}

TEST(RunExperiment, SmallSpecPassesWithChecks) {
  const Report r = run_experiment(experiment_spec_from_json(small_spec()));
  EXPECT_EQ(r.outcome, Outcome::Pass);
  ASSERT_EQ(r.cells.size(), 2u);
  for (const auto& c : r.cells) {
    EXPECT_EQ(c.series.size(), 14u);
    EXPECT_TRUE(c.verdict.has_value());
    EXPECT_TRUE(c.error.empty());
  }
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_TRUE(r.checks[0].pass());
  EXPECT_GT(r.checks[0].evaluated, 0u);
  EXPECT_FALSE(r.deviations.empty());
}

TEST(RunExperiment, ShortHorizonIsIndeterminateNotFailed) {
  json j = small_spec();
  j["horizon"] = 6;
  const Report r = run_experiment(experiment_spec_from_json(j));
  EXPECT_EQ(r.outcome, Outcome::Indeterminate);
  for (const auto& c : r.cells) {
    EXPECT_EQ(c.outcome, Outcome::Indeterminate);
    EXPECT_FALSE(c.verdict.has_value());
  }
}

TEST(RunExperiment, WrongExpectationFails) {
  json j = small_spec();
  j["expectations"][0]["verdict"] = "growing";
  const Report r = run_experiment(experiment_spec_from_json(j));
  EXPECT_EQ(r.outcome, Outcome::Fail);
  EXPECT_EQ(combine(r), Outcome::Fail);
}

TEST(RunExperiment, ReportBodyIndependentOfThreadsAndReruns) {
  const ExperimentSpec s = experiment_spec_from_json(small_spec());
  set_worker_threads(1);
  const Report one = run_experiment(s);
  set_worker_threads(3);
  const Report three = run_experiment(s);
  set_worker_threads(0);
  EXPECT_EQ(to_json(one, false), to_json(three, false));
  EXPECT_EQ(to_csv(one, false), to_csv(three, false));
  EXPECT_EQ(to_json(one, false), to_json(run_experiment(s), false));
}

TEST(Reports, JsonMirrorsCsvRows) {
  const Report r = run_experiment(experiment_spec_from_json(small_spec()));
  const json j = json::parse(to_json(r, true));
  EXPECT_EQ(j["experiment"], "small");
  EXPECT_EQ(j["outcome"], "pass");
  EXPECT_TRUE(j.contains("meta"));
  EXPECT_FALSE(json::parse(to_json(r, false)).contains("meta"));
  ASSERT_EQ(j["cells"].size(), r.cells.size());
  EXPECT_EQ(j["cells"][0]["series"].size(), 14u);

  const std::string csv = to_csv(r, false);
  EXPECT_EQ(csv.substr(0, kCsvHeader.size()), kCsvHeader);
  std::size_t cell_rows = 0;
  for (std::size_t pos = 0; (pos = csv.find("\nsmall,", pos)) != std::string::npos; ++pos) ++cell_rows;
  EXPECT_GE(cell_rows, 28u);
  EXPECT_EQ(to_csv(r, true).front(), '#');
}

TEST(Reports, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(ClosedFormTable, PublishedFormsWithinTolerance) {
  for (ExampleId id : {ExampleId::Alternating, ExampleId::BoundedCubes}) {
    const auto rows = verify_closed_forms(id, 3);
    EXPECT_FALSE(rows.empty());
    for (const auto& row : rows) {
      EXPECT_LE(row.lower, 1e-12) << row.example << " m=" << row.m << " alpha=" << row.alpha;
      EXPECT_LE(row.upper, 1e-12) << row.example << " m=" << row.m << " alpha=" << row.alpha;
      EXPECT_GT(row.samples, 0u);
    }
  }
  for (const auto& row : verify_closed_forms(ExampleId::GrowingSupports, 3)) {
    EXPECT_LE(row.lower, 1e-12);
    EXPECT_NEAR(row.upper, std::ldexp(1.0, row.m) * (1 - row.alpha), 1e-12);
  }
}

TEST(Catalog, EveryClaimBelongsToExactlyOneExperiment) {
  const std::vector<std::string> required = {
      "order-above-one-ill-defined",     "density-order-inclusion-strict", "strong-to-density-inclusion-strict",
      "strong-order-inclusion-strict",   "density-order-monotone",         "linearity",
      "order-to-lacunary-statistical",   "strong-to-density-same-limit",   "strong-order-to-lacunary-mean",
      "prefix-to-lacunary-ratio",        "prefix-to-lacunary-block-share", "lacunary-to-prefix",
      "cesaro-to-strong",                "strong-to-cesaro",               "cesaro-strong-limits-agree",
      "modulus-limit-unique",            "modulus-to-density",             "density-to-modulus-bounded"};
  std::map<std::string, int> owners;
  for (const auto& id : experiment_ids()) {
    EXPECT_TRUE(is_experiment_id(id));
    const auto claims = experiment_claims(id);
    EXPECT_FALSE(claims.empty()) << id;
    for (const auto& c : claims) ++owners[c];
  }
  for (const auto& [claim, n] : owners) EXPECT_EQ(n, 1) << claim;
  for (const auto& c : required) EXPECT_EQ(owners.count(c), 1u) << c;
  EXPECT_EQ(experiment_ids().size(), 8u);
  EXPECT_FALSE(is_experiment_id("nope"));
  EXPECT_THROW(run_catalog_experiment("nope"), std::invalid_argument);
}

TEST(Catalog, GridSpecsParseAndCarryTheirClaims) {
  int grid_specs = 0;
  for (const auto& id : experiment_ids()) {
    const auto text = catalog_spec_text(id);
    if (!text) continue;
    ++grid_specs;
    const ExperimentSpec s = parse_experiment_spec(*text);
    EXPECT_EQ(s.id, id);
    EXPECT_EQ(s.claims, experiment_claims(id));
  }
  EXPECT_EQ(grid_specs, 4);
}

}  // namespace
}  // namespace fuzzyseq
