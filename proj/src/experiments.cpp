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

#include "fuzzyseq/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

#include "check_builder.hpp"
#include "fuzzyseq/kernels.hpp"
#include "fuzzyseq/lacunary.hpp"
#include "fuzzyseq/literal.hpp"
#include "fuzzyseq/modulus.hpp"
#include "suites.hpp"

namespace fuzzyseq {

namespace {

using detail::CheckBuilder;
using nlohmann::json;

// Cross-cell checks only compare cells that agree on everything but the order.
std::string sibling_key(const Cell& c) {
  return fmt::format("eps={}/m={}/p={}/limit={}", c.epsilon, c.m, c.p, c.limit);
}

bool same_series_shape(const CellResult& a, const CellResult& b) { return a.series.size() == b.series.size(); }

CheckResult order_monotone(const std::vector<CellResult>& cells, const CheckSpec& spec) {
  std::optional<StatisticKind> only;
  if (spec.args.contains("estimator")) only = parse_statistic_kind(spec.args.at("estimator").get<std::string>());
  CheckBuilder check(fmt::format("order-monotone:{}", only ? to_string(*only) : "all"), spec.args.value("claim", ""));
  for (const auto& lo : cells) {
    for (const auto& hi : cells) {
      if (lo.cell.kind != hi.cell.kind || (only && lo.cell.kind != *only)) continue;
      if (sibling_key(lo.cell) != sibling_key(hi.cell) || !(lo.cell.order < hi.cell.order)) continue;
      if (!same_series_shape(lo, hi)) continue;
      for (std::size_t i = 0; i < lo.series.size(); ++i) {
        check.geq(lo.series[i].value, hi.series[i].value, 0.0,
                  fmt::format("{} vs {} at r={}", lo.cell.key, hi.cell.key, lo.series[i].r));
      }
    }
  }
  return check.finish();
}

CheckResult chebyshev(const std::vector<CellResult>& cells, const CheckSpec& spec) {
  CheckBuilder check("chebyshev-bridge", spec.args.value("claim", ""));
  for (const auto& strong : cells) {
    if (strong.cell.kind != StatisticKind::StrongLacunaryMean) continue;
    for (const auto& density : cells) {
      if (density.cell.kind != StatisticKind::LacunaryDensity) continue;
      if (sibling_key(strong.cell) != sibling_key(density.cell) || strong.cell.order > density.cell.order) continue;
      if (!same_series_shape(strong, density)) continue;
      const double scale = std::pow(strong.cell.epsilon, strong.cell.p);
      for (std::size_t i = 0; i < strong.series.size(); ++i) {
        check.geq(strong.series[i].value, scale * density.series[i].value, 1e-12,
                  fmt::format("{} vs {} at r={}", strong.cell.key, density.cell.key, strong.series[i].r));
      }
    }
  }
  return check.finish();
}

CheckResult constant_value(const std::vector<CellResult>& cells, const CheckSpec& spec) {
  const double value = spec.args.at("value").get<double>();
  const int from_r = spec.args.value("from_r", 1);
  CheckBuilder check(fmt::format("constant-value:{}", value), spec.args.value("claim", ""));
  const json when = spec.args.value("when", json::object());
  for (const auto& c : cells) {
    if (!cell_matches(c.cell, when)) continue;
    for (const auto& row : c.series) {
      if (row.r < from_r) continue;
      check.expect(row.value == value, fmt::format("{} at r={}: {} != {}", c.cell.key, row.r, row.value, value));
    }
  }
  return check.finish();
}

CheckResult tail_below(const std::vector<CellResult>& cells, const CheckSpec& spec) {
  const double bound = spec.args.at("bound").get<double>();
  CheckBuilder check(fmt::format("tail-below:{}", bound), spec.args.value("claim", ""));
  const json when = spec.args.value("when", json::object());
  for (const auto& c : cells) {
    if (!cell_matches(c.cell, when) || c.series.empty()) continue;
    check.leq(c.series.back().value, bound, 0.0, fmt::format("{} last value", c.cell.key));
  }
  return check.finish();
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Grid-driven catalog experiments.
const std::map<std::string, std::string, std::less<>>& grid_specs() {
  static const std::map<std::string, std::string, std::less<>> specs = {
      {"exp-beta-gt-1", R"({
  "id": "exp-beta-gt-1",
  "claims": ["order-above-one-ill-defined"],
  "sequence": {"example": "order-gt-one"},
  "theta": "powers2",
  "limits": ["class:even", "class:odd"],
  "grid": {"beta": [1.5, 1], "epsilon": [1], "m": [1], "p": [1]},
  "estimators": ["density"],
  "horizon": {"r_max": 24},
  "allow_beta_gt_1": true,
  "expectations": [
    {"when": {"beta": 1.5}, "verdict": ["tends-to-zero"]},
    {"when": {"beta": 1}, "verdict": ["bounded-away"]}
  ],
  "checks": [
    {"kind": "tail-below", "when": {"beta": 1.5}, "bound": 0.001, "claim": "order-above-one-ill-defined"},
    {"kind": "constant-value", "when": {"beta": 1}, "value": 0.5, "from_r": 2, "claim": "order-above-one-ill-defined"}
  ]
})"},
      {"exp-thm-2.5", R"({
  "id": "exp-thm-2.5",
  "claims": ["density-order-inclusion-strict"],
  "sequence": {"example": "thm-2.5-strict"},
  "theta": "powers2",
  "limits": ["auto"],
  "grid": {"beta": [0.3], "gamma": [0.5, 0.75, 1], "epsilon": [0.5], "m": [1], "p": [1]},
  "estimators": ["density"],
  "horizon": {"r_max": 24},
  "expectations": [
    {"when": {"gamma": [0.5, 0.75, 1]}, "verdict": ["tends-to-zero"]},
    {"when": {"beta": 0.3}, "verdict": ["growing", "bounded-away"]}
  ],
  "checks": [
    {"kind": "order-monotone", "estimator": "density", "claim": "density-order-inclusion-strict"}
  ]
})"},
      {"exp-thm-2.7", R"({
  "id": "exp-thm-2.7",
  "claims": ["strong-to-density-inclusion-strict"],
  "sequence": {"example": "thm-2.7-strict"},
  "theta": "powers2",
  "limits": ["auto", "oracle"],
  "grid": {"beta": [0.6, 0.75, 1], "gamma": [0.6, 0.75, 1], "epsilon": [1], "m": [1], "p": [1]},
  "estimators": ["density", "strong"],
  "horizon": {"r_max": 20},
  "expectations": [
    {"when": {"estimator": "density", "limit": "auto"}, "verdict": ["tends-to-zero"]},
    {"when": {"estimator": "strong", "limit": "auto"}, "verdict": ["growing"]},
    {"when": {"limit": "oracle"}, "verdict": ["not:tends-to-zero"]}
  ],
  "checks": [
    {"kind": "chebyshev", "claim": "strong-to-density-inclusion-strict"}
  ]
})"},
      {"exp-thm-2.12", R"({
  "id": "exp-thm-2.12",
  "claims": ["strong-order-inclusion-strict"],
  "sequence": {"example": "thm-2.12-strict"},
  "theta": "powers2",
  "limits": ["auto"],
  "grid": {"beta": [0.3], "gamma": [0.5, 1], "epsilon": [1], "m": [1], "p": [1]},
  "estimators": ["strong"],
  "horizon": {"r_max": 24},
  "expectations": [
    {"when": {"gamma": [0.5, 1]}, "verdict": ["tends-to-zero"]},
    {"when": {"beta": 0.3}, "verdict": ["not:tends-to-zero"]}
  ],
  "checks": [
    {"kind": "order-monotone", "estimator": "strong", "claim": "strong-order-inclusion-strict"}
  ]
})"},
  };
  return specs;
}

}  // namespace

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::vector<DeviationRow> verify_closed_forms(ExampleId id, int m_max, std::span<const double> alphas) {
  std::vector<DeviationRow> rows;
  const FuzzySequence base = catalog_sequence(id);
  for (int m = 1; m <= m_max; ++m) {
    const FuzzySequence dx = difference(base, m);
    for (IndexClass cls : closed_form_classes(id)) {
      std::vector<Index> ks;
      for (Index start : {Index{2}, Index{1'000'000}}) {
        for (Index k = start; k < start + 256; ++k) {
          if (pure_in_class(id, cls, m, k)) ks.push_back(k);
        }
      }
      std::vector<FuzzyNumber> values;
      values.reserve(ks.size());
      for (Index k : ks) values.push_back(dx.at(k));
      for (double alpha : alphas) {
        DeviationRow row{to_string(id), m, to_string(cls), alpha, 0.0, 0.0, ks.size()};
        for (std::size_t i = 0; i < ks.size(); ++i) {
          const Interval got = alpha_cut(values[i], alpha);
          const Interval want = *closed_form_oracle(id, m, ks[i], alpha);
          row.lower = std::max(row.lower, std::abs(got.lo - want.lo));
          row.upper = std::max(row.upper, std::abs(got.hi - want.hi));
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

Outcome combine(const Report& report) {
  bool indeterminate = false;
  for (const auto& c : report.cells) {
    if (c.outcome == Outcome::Fail) return Outcome::Fail;
    if (c.outcome == Outcome::Indeterminate) indeterminate = true;
  }
  for (const auto& c : report.checks) {
    if (!c.pass()) return Outcome::Fail;
  }
  return indeterminate ? Outcome::Indeterminate : Outcome::Pass;
}

Report run_experiment(const ExperimentSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.experiment = spec.id;
  report.claims = spec.claims;
  report.meta.started = utc_now();
  report.meta.threads = worker_threads();

  const FuzzySequence seq = spec.sequence.build();
  const LacunaryStructure theta = parse_theta(spec.theta, spec.r_max);
  const int r_max = std::min(spec.r_max, theta.r_max());
  for (const auto& w : theta.warnings()) report.notes.push_back(w);
  const ModulusFunction f = modulus_by_name(spec.modulus);

  const std::vector<Cell> cells = expand_cells(spec);
  std::map<std::pair<std::string, int>, ResolvedLimit> limits;
  for (const auto& c : cells) {
    const auto key = std::pair{c.limit, c.m};
    if (!limits.count(key)) limits.emplace(key, resolve_limit(c.limit, spec.sequence, c.m));
  }

  report.cells.resize(cells.size());
  const auto n = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Cell& cell = cells[static_cast<std::size_t>(i)];
    CellResult& out = report.cells[static_cast<std::size_t>(i)];
    out.cell = cell;
    try {
      const Expectation& expectation = expectation_for(spec, cell);
      out.expected = expectation.describe();
      const FuzzyNumber& x0 = limits.at({cell.limit, cell.m}).value;
      out.limit_literal = to_literal(x0);
      OrderParams params;
      params.beta = cell.order;
      params.epsilon = cell.epsilon;
      params.p = ExponentRule(cell.p);
      params.m = cell.m;
      params.allow_beta_gt_1 = spec.allow_beta_gt_1;
      out.series = statistic_series(cell.kind, seq, x0, params, theta, r_max,
                                    cell.kind == StatisticKind::ModulusMean ? std::optional(f) : std::nullopt);
      if (out.series.size() < 8) {
        out.outcome = Outcome::Indeterminate;
      } else {
        out.verdict = verdict(out.series, spec.thresholds);
        out.outcome = expectation.accepts(out.verdict->kind) ? Outcome::Pass : Outcome::Fail;
      }
    } catch (const std::exception& e) {
      out.outcome = Outcome::Fail;
      out.error = e.what();
    }
  }

  for (const auto& check : spec.checks) {
    if (check.kind == "order-monotone") report.checks.push_back(order_monotone(report.cells, check));
    if (check.kind == "chebyshev") report.checks.push_back(chebyshev(report.cells, check));
    if (check.kind == "constant-value") report.checks.push_back(constant_value(report.cells, check));
    if (check.kind == "tail-below") report.checks.push_back(tail_below(report.cells, check));
  }

  if (spec.sequence.example) {
    const int m_max = *std::max_element(spec.grid.m.begin(), spec.grid.m.end());
    if (m_max >= 1) report.deviations = verify_closed_forms(*spec.sequence.example, m_max);
  }

  report.outcome = combine(report);
  report.meta.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids = {"exp-beta-gt-1",     "exp-thm-2.5",   "exp-thm-2.7",
                                               "exp-thm-2.12",      "exp-inclusions", "exp-theta-conditions",
                                               "exp-uniqueness",    "exp-modulus"};
  return ids;
}

bool is_experiment_id(std::string_view id) {
  const auto& ids = experiment_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::optional<std::string> catalog_spec_text(std::string_view id) {
  const auto& specs = grid_specs();
  const auto it = specs.find(id);
  if (it == specs.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> experiment_claims(std::string_view id) {
  if (const auto text = catalog_spec_text(id)) return parse_experiment_spec(*text).claims;
  if (id == "exp-inclusions") return detail::inclusion_claims();
  if (id == "exp-theta-conditions") return detail::theta_claims();
  if (id == "exp-uniqueness") return detail::uniqueness_claims();
  if (id == "exp-modulus") return detail::modulus_claims();
  throw std::invalid_argument(fmt::format("unknown experiment id '{}'", id));
}

Report run_catalog_experiment(std::string_view id) {
  if (const auto text = catalog_spec_text(id)) return run_experiment(parse_experiment_spec(*text));
  const auto start = std::chrono::steady_clock::now();
  const std::string started = utc_now();
  Report report;
  if (id == "exp-inclusions") {
    report = detail::run_inclusions();
  } else if (id == "exp-theta-conditions") {
    report = detail::run_theta_conditions();
  } else if (id == "exp-uniqueness") {
    report = detail::run_uniqueness();
  } else if (id == "exp-modulus") {
    report = detail::run_modulus();
  } else {
    throw std::invalid_argument(fmt::format("unknown experiment id '{}'", id));
  }
  report.outcome = combine(report);
  report.meta.started = started;
  report.meta.threads = worker_threads();
  report.meta.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace fuzzyseq
