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

#include "fuzzyseq/properties.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "fuzzyseq/literal.hpp"

namespace fuzzyseq {

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

SuiteResult failure(std::size_t cases, std::string property, std::string witness) {
  return {false, cases, std::move(property), std::move(witness)};
}

}  // namespace

std::int64_t SeededSource::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

double SeededSource::dyadic(double lo, double hi, int denominator) {
  const auto steps = static_cast<std::int64_t>(std::floor((hi - lo) * denominator));
  return lo + static_cast<double>(integer(0, steps)) / denominator;
}

Trapezoid SeededSource::trapezoid(double span) {
  double p[4];
  for (double& x : p) x = dyadic(-span, span);
  std::sort(p, p + 4);
  return {p[0], p[1], p[2], p[3]};
}

SampledGrid SeededSource::grid(int intervals, double span) {
  const auto n = static_cast<std::size_t>(intervals) + 1;
  std::vector<double> lo(n), hi(n);
  // Build the core cut first and widen towards alpha = 0.
  lo[n - 1] = dyadic(-span / 4, span / 4);
  hi[n - 1] = lo[n - 1] + dyadic(0, span / 4);
  for (std::size_t i = n - 1; i-- > 0;) {
    lo[i] = lo[i + 1] - dyadic(0, span / (2.0 * intervals));
    hi[i] = hi[i + 1] + dyadic(0, span / (2.0 * intervals));
  }
  return SampledGrid(uniform_levels(intervals), std::move(lo), std::move(hi));
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

FuzzySequence random_sequence(std::uint64_t seed) {
  return FuzzySequence(
      [seed](Index k) {
        std::uint64_t s = mix64(seed ^ mix64(static_cast<std::uint64_t>(k)));
        const auto draw = [&s](std::uint64_t n) {
          s = mix64(s);
          return static_cast<double>(s % n);
        };
        double center = 2.0 + (draw(33) - 16.0) / 64.0;
        if (draw(8) == 0) center += draw(17) - 8.0;
        const double core_left = draw(32) / 64.0;
        const double core_right = draw(32) / 64.0;
        const double spread_left = (draw(64) + 1.0) / 64.0;
        const double spread_right = (draw(64) + 1.0) / 64.0;
        return FuzzyNumber(Trapezoid(center - core_left - spread_left, center - core_left, center + core_right,
                                     center + core_right + spread_right));
      },
      fmt::format("random-{}", seed));
}

SuiteResult run_metric_suite(std::uint64_t seed, int count, double tolerance) {
  SeededSource src(seed);
  const auto levels = uniform_levels(16);
  for (int i = 0; i < count; ++i) {
    const auto cases = static_cast<std::size_t>(i) + 1;
    const FuzzyNumber x = src.trapezoid();
    const FuzzyNumber y = src.trapezoid();
    const FuzzyNumber z = src.trapezoid();
    const double c = src.dyadic(-4.0, 4.0, 8);
    const auto lits = [&] { return fmt::format("x={} y={} z={} c={}", to_literal(x), to_literal(y), to_literal(z), c); };

    const double dxy = metric_d(x, y);
    if (metric_d(x, x) != 0.0) return failure(cases, "identity", lits());
    if (!(dxy >= 0.0)) return failure(cases, "non-negativity", lits());
    if (!close(dxy, metric_d(y, x), tolerance)) return failure(cases, "symmetry", lits());
    if (metric_d(x, z) > dxy + metric_d(y, z) + tolerance) return failure(cases, "triangle inequality", lits());
    if (!close(metric_d(add(x, z), add(y, z)), dxy, tolerance)) return failure(cases, "translation invariance", lits());
    if (!close(metric_d(scalar_mul(c, x), scalar_mul(c, y)), std::abs(c) * dxy, tolerance))
      return failure(cases, "scaling", lits());
    const FuzzyNumber gx = FuzzyNumber::from_grid(to_grid(x, levels));
    const FuzzyNumber gy = FuzzyNumber::from_grid(to_grid(y, levels));
    if (!close(metric_d(gx, gy), dxy, tolerance)) return failure(cases, "grid path agreement", lits());
  }
  return {true, static_cast<std::size_t>(count), "", ""};
}

SuiteResult run_fuzzy_axiom_suite(std::uint64_t seed, int count, double tolerance) {
  SeededSource src(seed);
  for (int i = 0; i < count; ++i) {
    const auto cases = static_cast<std::size_t>(i) + 1;
    const FuzzyNumber x = src.trapezoid();
    const FuzzyNumber y = src.trapezoid();
    const int intervals = static_cast<int>(src.integer(2, 32));
    const SampledGrid raw = src.grid(intervals);
    const double c = src.dyadic(-4.0, 4.0, 8);
    const double alpha = static_cast<double>(src.integer(0, 1024)) / 1024.0;
    const auto lits = [&] {
      return fmt::format("x={} y={} grid={} c={} alpha={}", to_literal(x), to_literal(y),
                         to_literal(FuzzyNumber::from_grid(raw)), c, alpha);
    };

    const ValidityReport report = validate(raw);
    if (!report.ok) return failure(cases, "generated grid is valid", fmt::format("{} ({})", report.message, intervals));
    const FuzzyNumber g = FuzzyNumber::from_grid(raw);

    for (const FuzzyNumber* other : {&y, &g}) {
      const FuzzyNumber sum = add(x, *other);
      const FuzzyNumber diff = sub(x, *other);
      const FuzzyNumber prod = mul(x, *other, 64);
      const FuzzyNumber scaled = scalar_mul(c, *other);
      for (const FuzzyNumber* r : {&sum, &diff, &prod, &scaled}) {
        if (!validate(*r).ok) return failure(cases, "closure under arithmetic", lits());
      }
      const Interval cx = alpha_cut(x, alpha);
      const Interval cy = alpha_cut(*other, alpha);
      const Interval cs = alpha_cut(sum, alpha);
      const Interval cd = alpha_cut(diff, alpha);
      const Interval cc = alpha_cut(scaled, alpha);
      if (!close(cs.lo, cx.lo + cy.lo, tolerance) || !close(cs.hi, cx.hi + cy.hi, tolerance))
        return failure(cases, "sum endpoints", lits());
      if (!close(cd.lo, cx.lo - cy.hi, tolerance) || !close(cd.hi, cx.hi - cy.lo, tolerance))
        return failure(cases, "difference endpoints", lits());
      if (!close(cc.lo, std::min(c * cy.lo, c * cy.hi), tolerance) ||
          !close(cc.hi, std::max(c * cy.lo, c * cy.hi), tolerance))
        return failure(cases, "scalar endpoints", lits());
      if (!close(cs.width(), cx.width() + cy.width(), tolerance) ||
          !close(cd.width(), cx.width() + cy.width(), tolerance))
        return failure(cases, "width law", lits());
      // Products are exact at grid levels; alpha = 0 and 1 are always grid levels.
      for (double a : {0.0, 1.0}) {
        const Interval px = alpha_cut(x, a);
        const Interval py = alpha_cut(*other, a);
        const double q[4] = {px.lo * py.lo, px.lo * py.hi, px.hi * py.lo, px.hi * py.hi};
        const Interval pp = alpha_cut(prod, a);
        if (!close(pp.lo, *std::min_element(q, q + 4), tolerance) || !close(pp.hi, *std::max_element(q, q + 4), tolerance))
          return failure(cases, "product endpoints", lits());
      }
    }

    // A grid with two levels swapped must be rejected for convexity.
    if (intervals >= 2 && raw.lo()[0] < raw.lo()[1]) {
      auto lo = raw.lo();
      std::swap(lo[0], lo[1]);
      const ValidityReport broken = validate(SampledGrid(raw.alpha(), lo, raw.hi()));
      if (broken.ok || broken.axiom != Axiom::Convexity) return failure(cases, "convexity violation detected", lits());
    }
  }
  return {true, static_cast<std::size_t>(count), "", ""};
}

}  // namespace fuzzyseq
