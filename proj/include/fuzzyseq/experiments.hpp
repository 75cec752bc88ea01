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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyseq/catalog.hpp"
#include "fuzzyseq/estimators.hpp"
#include "fuzzyseq/experiment_spec.hpp"
#include "fuzzyseq/verdict.hpp"

namespace fuzzyseq {

enum class Outcome { Pass, Fail, Indeterminate };

const char* to_string(Outcome outcome);

struct CellResult {
  Cell cell;
  std::string limit_literal;
  std::vector<BlockStatistic> series;
  // Absent when the horizon is too short for a verdict.
  std::optional<Verdict> verdict;
  std::string expected;
  Outcome outcome = Outcome::Indeterminate;
  std::string error;
};

// A finite inequality or identity evaluated block by block.
struct CheckResult {
  std::string name;
  std::string claim;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  // Smallest slack (rhs - lhs for "lhs <= rhs"); negative when violated.
  double worst_margin = 0.0;
  std::string detail;
  // Optional statistic rows backing the check, exported with the cell rows.
  std::vector<BlockStatistic> rows;

  bool pass() const { return violations == 0; }
};

// Max |computed - published| per (m, class, alpha) endpoint over pure indices.
struct DeviationRow {
  std::string example;
  int m = 1;
  std::string index_class;
  double alpha = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t samples = 0;
};

struct RunMetadata {
  double seconds = 0.0;
  int threads = 1;
  std::string started;
};

struct Report {
  std::string experiment;
  std::vector<std::string> claims;
  std::vector<CellResult> cells;
  std::vector<CheckResult> checks;
  std::vector<DeviationRow> deviations;
  std::vector<std::string> notes;
  Outcome outcome = Outcome::Pass;
  RunMetadata meta;
};

// Default alpha grid for deviation tables.
inline constexpr double kOracleAlphas[] = {0.0, 0.25, 0.5, 0.75, 1.0};

// Pure indices k in [2, 257] and [10^6, 10^6 + 255] for each closed-form class,
// m = 1..m_max. Left endpoints first, right endpoints second.
std::vector<DeviationRow> verify_closed_forms(ExampleId id, int m_max,
                                              std::span<const double> alphas = kOracleAlphas);

// Runs every grid cell (in parallel), then the configured cross-cell checks,
// then the closed-form deviation table when the sequence is a catalog example.
Report run_experiment(const ExperimentSpec& spec);

// Catalog experiment ids in a fixed order.
const std::vector<std::string>& experiment_ids();
bool is_experiment_id(std::string_view id);
// Claims each catalog experiment covers; every claim belongs to exactly one id.
std::vector<std::string> experiment_claims(std::string_view id);
// JSON spec text for grid-driven catalog experiments, nullopt for suite experiments.
std::optional<std::string> catalog_spec_text(std::string_view id);
// Throws std::invalid_argument for unknown ids.
Report run_catalog_experiment(std::string_view id);

// pass unless something failed; indeterminate when nothing failed but some
// cell lacked a verdict.
Outcome combine(const Report& report);

}  // namespace fuzzyseq
