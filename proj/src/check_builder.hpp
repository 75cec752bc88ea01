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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "fuzzyseq/experiments.hpp"

namespace fuzzyseq::detail {

// Accumulates one CheckResult from many individual comparisons. The first
// violation is kept as the detail text.
class CheckBuilder {
 public:
  CheckBuilder(std::string name, std::string claim) {
    result_.name = std::move(name);
    result_.claim = std::move(claim);
  }

  // lhs <= rhs, allowing rel_slack * max(|lhs|, |rhs|) of rounding.
  void leq(double lhs, double rhs, double rel_slack, const std::string& context) {
    ++result_.evaluated;
    const double margin = rhs - lhs;
    worst_ = std::min(worst_, margin);
    const double allowance = rel_slack * std::max(std::abs(lhs), std::abs(rhs));
    if (!(lhs <= rhs + allowance)) violate(fmt::format("{}: {} > {}", context, lhs, rhs));
  }

  void geq(double lhs, double rhs, double rel_slack, const std::string& context) { leq(rhs, lhs, rel_slack, context); }

  // |a - b| <= rel_tol * max(scale, |a|, |b|)
  void near(double a, double b, double rel_tol, const std::string& context, double scale = 1.0) {
    ++result_.evaluated;
    const double gap = std::abs(a - b);
    worst_ = std::min(worst_, -gap);
    if (!(gap <= rel_tol * std::max({scale, std::abs(a), std::abs(b)})))
      violate(fmt::format("{}: {} != {}", context, a, b));
  }

  // A boolean fact; counts as one comparison.
  void expect(bool ok, const std::string& context) {
    ++result_.evaluated;
    if (!ok) violate(context);
  }

  void note(std::string text) { notes_ = std::move(text); }
  void add_rows(const std::vector<BlockStatistic>& rows) {
    result_.rows.insert(result_.rows.end(), rows.begin(), rows.end());
  }

  CheckResult finish() {
    result_.worst_margin = result_.evaluated && std::isfinite(worst_) ? worst_ : 0.0;
    if (result_.detail.empty()) result_.detail = notes_;
    return std::move(result_);
  }

 private:
  void violate(std::string what) {
    if (result_.violations++ == 0) result_.detail = std::move(what);
  }

  CheckResult result_;
  double worst_ = std::numeric_limits<double>::infinity();
  std::string notes_;
};

}  // namespace fuzzyseq::detail
