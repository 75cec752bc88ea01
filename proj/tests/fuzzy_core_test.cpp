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
#include <stdexcept>

#include <gtest/gtest.h>

#include "fuzzyseq/fuzzy_number.hpp"
#include "fuzzyseq/literal.hpp"
#include "fuzzyseq/properties.hpp"

namespace fuzzyseq {
namespace {

// Brute-force sup over a dense alpha grid; the exact metric must agree with it
// on trapezoids because the endpoint gaps are linear in alpha.
double grid_metric(const FuzzyNumber& x, const FuzzyNumber& y, int points = 10001) {
  double best = 0.0;
  for (int i = 0; i < points; ++i) {
    const double alpha = static_cast<double>(i) / (points - 1);
    const Interval a = alpha_cut(x, alpha), b = alpha_cut(y, alpha);
    best = std::max({best, std::abs(a.lo - b.lo), std::abs(a.hi - b.hi)});
  }
  return best;
}

TEST(AlphaCut, TriangularLevelSets) {
  const auto x = FuzzyNumber::triangular(0, 1, 2);
  const auto y = FuzzyNumber::triangular(3, 4, 5);
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    EXPECT_EQ(alpha_cut(x, alpha), (Interval{alpha, 2 - alpha}));
    EXPECT_EQ(alpha_cut(y, alpha), (Interval{3 + alpha, 5 - alpha}));
  }
}

TEST(AlphaCut, TrapezoidCoreAtOne) {
  EXPECT_EQ(alpha_cut(FuzzyNumber::trapezoidal(-1, 2, 3.5, 9), 1.0), (Interval{2, 3.5}));
}

TEST(AlphaCut, RejectsLevelsOutsideUnitInterval) {
  const auto x = FuzzyNumber::crisp(1);
  EXPECT_THROW(alpha_cut(x, -0.01), std::domain_error);
  EXPECT_THROW(alpha_cut(x, 1.5), std::domain_error);
}

TEST(Arithmetic, SubtractionUsesCrossedEndpoints) {
  const auto d = sub(FuzzyNumber::triangular(0, 1, 2), FuzzyNumber::triangular(3, 4, 5));
  for (double alpha : {0.0, 0.3, 0.5, 1.0}) EXPECT_EQ(alpha_cut(d, alpha), (Interval{2 * alpha - 5, -2 * alpha - 1}));
}

TEST(Arithmetic, SubtractionIsNotInverseOfAddition) {
  const auto x = FuzzyNumber::triangular(0, 1, 2);
  const auto self = sub(x, x);
  EXPECT_EQ(alpha_cut(self, 0.0), (Interval{-2, 2}));
  EXPECT_EQ(alpha_cut(self, 1.0), (Interval{0, 0}));
}

TEST(Arithmetic, CrispZeroIsAdditiveIdentity) {
  const auto x = FuzzyNumber::trapezoidal(-3, -1, 2, 7);
  EXPECT_EQ(add(x, FuzzyNumber::crisp(0)), x);
}

TEST(Arithmetic, NegationAgainstBruteForceEndpoints) {
  const auto x = FuzzyNumber::triangular(0, 1, 2);
  const auto neg = scalar_mul(-1, x);
  for (int i = 0; i <= 1000; ++i) {
    const double alpha = i / 1000.0;
    const Interval c = alpha_cut(x, alpha);
    const double lo = std::min(-c.lo, -c.hi), hi = std::max(-c.lo, -c.hi);
    EXPECT_EQ(alpha_cut(neg, alpha), (Interval{lo, hi}));
    EXPECT_EQ(alpha_cut(neg, alpha), (Interval{alpha - 2, -alpha}));
  }
}

TEST(Arithmetic, ProductMatchesIntervalProductAtGridLevels) {
  const auto x = FuzzyNumber::triangular(-1, 1, 2);
  const auto y = FuzzyNumber::trapezoidal(0.5, 1, 3, 4);
  const auto p = mul(x, y, 64);
  ASSERT_TRUE(validate(p).ok);
  for (int j = 0; j <= 64; ++j) {
    const double alpha = j / 64.0;
    const Interval a = alpha_cut(x, alpha), b = alpha_cut(y, alpha);
    const double c[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    const Interval got = alpha_cut(p, alpha);
    EXPECT_NEAR(got.lo, *std::min_element(c, c + 4), 1e-12);
    EXPECT_NEAR(got.hi, *std::max_element(c, c + 4), 1e-12);
  }
}

TEST(Metric, KnownDistances) {
  EXPECT_EQ(metric_d(FuzzyNumber::triangular(0, 1, 2), FuzzyNumber::triangular(3, 4, 5)), 3.0);
  EXPECT_EQ(metric_d(FuzzyNumber::crisp(0), FuzzyNumber::crisp(7)), 7.0);
  const auto x = FuzzyNumber::trapezoidal(0, 1, 2, 3);
  EXPECT_EQ(metric_d(x, x), 0.0);
}

TEST(Metric, ExactPathMatchesDenseGridOracle) {
  SeededSource src(2024);
  for (int i = 0; i < 200; ++i) {
    const FuzzyNumber x = src.trapezoid(), y = src.trapezoid();
    EXPECT_NEAR(metric_d(x, y), grid_metric(x, y), 1e-12) << to_literal(x) << " vs " << to_literal(y);
  }
}

TEST(Metric, GridPathMatchesDenseGridOracle) {
  SeededSource src(77);
  for (int i = 0; i < 50; ++i) {
    const FuzzyNumber x = FuzzyNumber::from_grid(src.grid(8));
    const FuzzyNumber y = FuzzyNumber::from_grid(src.grid(5));
    // The grid sup lies on merged breakpoints; a dense grid can only undershoot.
    const double exact = metric_d(x, y);
    const double dense = grid_metric(x, y, 4001);
    EXPECT_GE(exact + 1e-12, dense);
    EXPECT_NEAR(exact, dense, 1e-2);
  }
}

TEST(Metric, TrapezoidAndItsGridAgree) {
  const auto x = FuzzyNumber::trapezoidal(-2, 0.5, 1, 6);
  const auto g = FuzzyNumber::from_grid(to_grid(x, uniform_levels(16)));
  EXPECT_EQ(metric_d(x, g), 0.0);
}

TEST(Validity, CanonicalTrapezoidPasses) { EXPECT_TRUE(validate(FuzzyNumber::trapezoidal(0, 1, 2, 3)).ok); }

TEST(Validity, TrapezoidOrderingCheckedAtConstruction) {
  EXPECT_THROW(Trapezoid(0, 2, 1, 3), std::invalid_argument);
  EXPECT_THROW(Trapezoid(0, 1, 2, NAN), std::invalid_argument);
}

TEST(Validity, NonNestedGridNamesTheLevelPair) {
  const SampledGrid g({0.0, 0.2, 0.5, 1.0}, {0.0, 0.1, -0.5, 0.5}, {2.0, 1.9, 1.0, 0.6});
  const ValidityReport r = validate(g);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.axiom, Axiom::Convexity);
  EXPECT_EQ(r.alpha_first, 0.2);
  EXPECT_EQ(r.alpha_second, 0.5);
  EXPECT_THROW(FuzzyNumber::from_grid(g), std::invalid_argument);
}

TEST(Validity, EmptyCoreFailsNormality) {
  const SampledGrid g({0.0, 1.0}, {0.0, 1.5}, {2.0, 1.0});
  const ValidityReport r = validate(g);
  ASSERT_FALSE(r.ok);
}

TEST(Literal, RoundTrips) {
  for (const char* text : {"tri(0,1,2)", "trap(-1,0.5,2,3)", "crisp(7)", "grid([[0,0,2],[0.5,0.5,1.5],[1,1,1]])"}) {
    const FuzzyNumber x = parse_fuzzy_literal(text);
    EXPECT_EQ(parse_fuzzy_literal(to_literal(x)), x) << text;
  }
  EXPECT_EQ(parse_fuzzy_literal("tri(0,1,2)"), FuzzyNumber::triangular(0, 1, 2));
  EXPECT_EQ(parse_fuzzy_literal(" crisp( 3 ) "), FuzzyNumber::crisp(3));
}

TEST(Literal, RejectsMalformedText) {
  for (const char* text : {"", "tri(0,1)", "tri(2,1,0)", "trap(0,1,2)", "blob(1)", "tri(0,1,2", "tri(a,b,c)",
                           "grid([[0,0,2],[0.5,-1,3],[1,1,1]])"}) {
    EXPECT_THROW(parse_fuzzy_literal(text), std::invalid_argument) << text;
  }
}

}  // namespace
}  // namespace fuzzyseq
