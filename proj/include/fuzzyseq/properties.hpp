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

#include <cstdint>
#include <random>
#include <string>

#include "fuzzyseq/fuzzy_number.hpp"
#include "fuzzyseq/sequence.hpp"

namespace fuzzyseq {

// Random values are drawn from raw engine output (no std distributions), so a
// seed gives the same stream on every standard library.
class SeededSource {
 public:
  explicit SeededSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  // lo + j / denominator for a uniform j, staying within [lo, hi].
  double dyadic(double lo, double hi, int denominator = 64);
  // Trapezoid with dyadic parameters inside [-span, span].
  Trapezoid trapezoid(double span = 16.0);
  // Valid sampled grid with `intervals` uniform level steps and dyadic endpoints.
  SampledGrid grid(int intervals, double span = 16.0);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix64(std::uint64_t x);

// X_k = trapezoid around 2 with small dyadic jitter and, at roughly one index in
// eight, an integer jump of up to 8. Pure in (seed, k).
FuzzySequence random_sequence(std::uint64_t seed);

struct SuiteResult {
  bool ok = true;
  std::size_t cases = 0;
  std::string property;
  std::string witness;
};

// Metric axioms on random trapezoid triples: d(x,x) = 0, symmetry, triangle
// inequality, translation invariance d(x+z, y+z) = d(x,y), scaling
// d(cx, cy) = |c| d(x,y), and agreement of the grid path with the exact path.
SuiteResult run_metric_suite(std::uint64_t seed, int count, double tolerance = 1e-12);

// Fuzzy-number axioms: random trapezoids and grids validate, results of
// add/sub/scalar_mul/mul validate, alpha-cut endpoints follow interval
// arithmetic, and widths add under + and -.
SuiteResult run_fuzzy_axiom_suite(std::uint64_t seed, int count, double tolerance = 1e-12);

}  // namespace fuzzyseq
