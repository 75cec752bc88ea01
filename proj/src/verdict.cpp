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

#include "fuzzyseq/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace fuzzyseq {

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::TendsToZero: return "tends-to-zero";
    case VerdictKind::BoundedAway: return "bounded-away";
    case VerdictKind::Growing: return "growing";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

VerdictKind parse_verdict_kind(std::string_view name) {
  for (auto kind : {VerdictKind::TendsToZero, VerdictKind::BoundedAway, VerdictKind::Growing, VerdictKind::Inconclusive}) {
    if (name == to_string(kind)) return kind;
  }
  throw std::invalid_argument(fmt::format("unknown verdict '{}'", name));
}

Verdict verdict(std::span<const BlockStatistic> series, const VerdictThresholds& thresholds) {
  const std::size_t n = series.size();
  if (n < 8) throw std::invalid_argument(fmt::format("verdict needs at least 8 points, got {}", n));
  const std::size_t window = std::max<std::size_t>(1, n / 4);

  Verdict v;
  v.head_max = 0.0;
  for (std::size_t i = 0; i < window; ++i) v.head_max = std::max(v.head_max, series[i].value);
  v.tail_min = series[n - window].value;
  v.tail_max = series[n - window].value;
  for (std::size_t i = n - window; i < n; ++i) {
    v.tail_min = std::min(v.tail_min, series[i].value);
    v.tail_max = std::max(v.tail_max, series[i].value);
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = n / 2; i < n; ++i) {
    if (!(series[i].value > 0.0) || series[i].h_r < 1) continue;
    const double x = std::log(static_cast<double>(series[i].h_r));
    const double y = std::log(series[i].value);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++v.fitted_points;
  }
  if (v.fitted_points >= 2) {
    const auto m = static_cast<double>(v.fitted_points);
    const double denom = m * sxx - sx * sx;
    if (denom > 0.0) v.slope = (m * sxy - sx * sy) / denom;
  }

  if (v.tail_max == 0.0) {
    v.kind = VerdictKind::TendsToZero;
  } else if (v.tail_max < thresholds.zero && v.slope < 0.0) {
    v.kind = VerdictKind::TendsToZero;
  } else if (v.slope < -thresholds.flat_slope && v.tail_max < v.head_max) {
    v.kind = VerdictKind::TendsToZero;
  } else if (v.tail_min > thresholds.zero && v.tail_min > thresholds.growth * v.head_max) {
    v.kind = VerdictKind::Growing;
  } else if (v.tail_min > thresholds.zero && std::abs(v.slope) <= thresholds.flat_slope) {
    v.kind = VerdictKind::BoundedAway;
  } else {
    v.kind = VerdictKind::Inconclusive;
  }
  return v;
}

}  // namespace fuzzyseq
