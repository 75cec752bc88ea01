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

#include <span>
#include <string_view>

#include "fuzzyseq/estimators.hpp"

namespace fuzzyseq {

enum class VerdictKind { TendsToZero, BoundedAway, Growing, Inconclusive };

const char* to_string(VerdictKind kind);
VerdictKind parse_verdict_kind(std::string_view name);

struct VerdictThresholds {
  // Tail values below this count as zero.
  double zero = 1e-3;
  // Growing when tail min exceeds growth * head max.
  double growth = 10.0;
  // |slope| within this band reads as flat.
  double flat_slope = 0.05;
};

// Evidence is kept with the verdict so reports can show why it was reached.
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  double head_max = 0.0;
  double tail_min = 0.0;
  double tail_max = 0.0;
  // Least-squares slope of ln(value) against ln(h_r) over the positive points
  // of the back half of the series; 0 when fewer than two such points exist.
  double slope = 0.0;
  std::size_t fitted_points = 0;
};

// Finite-horizon stand-in for a limit claim.
//   head = first 25% of points, tail = last 25% (at least one point each).
//   tends-to-zero: the tail is identically zero; or tail max < zero and slope < 0;
//                  or slope < -flat_slope with tail max < head max (power-law decay).
//   growing:       tail min > growth * head max (and tail min > zero).
//   bounded-away:  tail min > zero and |slope| <= flat_slope.
//   inconclusive:  otherwise.
// Throws std::invalid_argument for fewer than 8 points.
Verdict verdict(std::span<const BlockStatistic> series, const VerdictThresholds& thresholds = {});

}  // namespace fuzzyseq
