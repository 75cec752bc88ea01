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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "fuzzyseq/catalog.hpp"
#include "fuzzyseq/estimators.hpp"
#include "fuzzyseq/kernels.hpp"
#include "fuzzyseq/lacunary.hpp"
#include "fuzzyseq/modulus.hpp"
#include "fuzzyseq/properties.hpp"
#include "fuzzyseq/sequence.hpp"

namespace fuzzyseq {
namespace {

OrderParams order(double beta, double eps = 1.0, int m = 1, double p = 1.0) {
  OrderParams o;
  o.beta = beta;
  o.epsilon = eps;
  o.m = m;
  o.p = ExponentRule(p);
  return o;
}

// Direct serial evaluation from the definitions, one metric_d per index.
double naive_block_mean(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& o, IndexRange range,
                        double divisor) {
  const FuzzySequence d = difference(x, o.m);
  double sum = 0.0;
  for (Index k = range.first; k <= range.last; ++k) sum += std::pow(metric_d(d.at(k), x0), o.p.at(k));
  return sum / divisor;
}

std::int64_t naive_count(const FuzzySequence& x, const FuzzyNumber& x0, int m, double eps, IndexRange range) {
  const FuzzySequence d = difference(x, m);
  std::int64_t n = 0;
  for (Index k = range.first; k <= range.last; ++k) n += metric_d(d.at(k), x0) >= eps ? 1 : 0;
  return n;
}

TEST(Params, ValidationGates) {
  EXPECT_NO_THROW(order(1.0).validate());
  EXPECT_THROW(order(1.5).validate(), std::invalid_argument);
  OrderParams pathology = order(1.5);
  pathology.allow_beta_gt_1 = true;
  EXPECT_NO_THROW(pathology.validate());
  EXPECT_THROW(order(0.0).validate(), std::invalid_argument);
  EXPECT_THROW(order(0.5, 0.0).validate(), std::invalid_argument);
  OrderParams g = order(0.75);
  g.gamma = 0.5;
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g.gamma = 1.0;
  EXPECT_NO_THROW(g.validate());
  EXPECT_THROW(ExponentRule(0.0), std::invalid_argument);
  EXPECT_THROW(ExponentRule(std::vector<double>{}), std::invalid_argument);
}

TEST(Exponents, PeriodicRule) {
  const ExponentRule rule(std::vector<double>{0.5, 1.0, 2.0});
  EXPECT_EQ(rule.at(1), 0.5);
  EXPECT_EQ(rule.at(3), 2.0);
  EXPECT_EQ(rule.at(4), 0.5);
  EXPECT_EQ(rule.inf(), 0.5);
  EXPECT_EQ(rule.sup(), 2.0);
  EXPECT_FALSE(rule.is_constant());
}

TEST(PrefixDensity, CubeCountOracle) {
  const FuzzySequence x = catalog_sequence(ExampleId::GrowingPeaks);
  OrderParams o = order(1.0, 0.5, 0);
  // k = 1 is a cube but X_1 coincides with the base value, so 2^3..10^3 remain.
  EXPECT_DOUBLE_EQ(prefix_density(x, FuzzyNumber::triangular(0.5, 1, 1.5), o, 1000), 9.0 / 1000.0);
}

TEST(LacunaryDensity, CubeNeighbourCountOracle) {
  const FuzzySequence x = catalog_sequence(ExampleId::GrowingPeaks);
  const FuzzyNumber x0 = dominant_limit(ExampleId::GrowingPeaks, 1);
  const auto theta = LacunaryStructure::powers(2, 18);
  const OrderParams o = order(0.5, 0.5, 1);
  for (int r = 1; r <= 18; ++r) {
    std::int64_t cubes = 0;
    for (Index k = theta.k(r - 1) + 1; k <= theta.k(r); ++k) cubes += ((k > 1 && is_cube(k)) || is_cube(k + 1)) ? 1 : 0;
    EXPECT_EQ(block_exceedances(x, x0, o, theta, r), cubes) << "r=" << r;
    EXPECT_DOUBLE_EQ(lacunary_density(x, x0, o, theta, r).value, cubes / theta.h_pow(r, 0.5));
  }
}

TEST(LacunaryDensity, HalfBlockCountForAlternatingSequence) {
  const FuzzySequence x = catalog_sequence(ExampleId::Alternating);
  const FuzzyNumber even = closed_form_limit(ExampleId::Alternating, 1, IndexClass::Even);
  const FuzzyNumber odd = closed_form_limit(ExampleId::Alternating, 1, IndexClass::Odd);
  EXPECT_EQ(metric_d(even, odd), 6.0);
  const auto theta = LacunaryStructure::powers(2, 20);
  for (int r = 2; r <= 20; ++r) {
    EXPECT_EQ(lacunary_density(x, even, order(1.0), theta, r).value, 0.5) << r;
  }
  OrderParams steep = order(1.5);
  steep.allow_beta_gt_1 = true;
  EXPECT_NEAR(lacunary_density(x, even, steep, theta, 20).value, 0.5 * std::pow(2.0, -9.5), 1e-15);
}

TEST(LacunaryDensity, BoundedByBlockSizeAndZeroAboveMaxGap) {
  const FuzzySequence x = random_sequence(31);
  const FuzzyNumber x0 = FuzzyNumber::triangular(1, 2, 3);
  const auto theta = LacunaryStructure::powers(2, 12);
  for (double beta : {0.3, 0.7, 1.0}) {
    for (int r = 1; r <= 12; ++r) {
      const double v = lacunary_density(x, x0, order(beta, 0.25, 0), theta, r).value;
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, theta.h(r) / theta.h_pow(r, beta));
      EXPECT_EQ(lacunary_density(x, x0, order(beta, 1e6, 0), theta, r).value, 0.0);
    }
  }
}

TEST(Estimators, ConstantSequenceAtItsDifferenceIsZero) {
  const FuzzySequence x = FuzzySequence::constant(FuzzyNumber::triangular(0, 1, 2));
  const FuzzyNumber x0 = difference(x, 2).at(1);
  const auto theta = LacunaryStructure::powers(2, 10);
  const OrderParams o = order(0.5, 0.1, 2);
  for (StatisticKind kind : {StatisticKind::LacunaryDensity, StatisticKind::StrongLacunaryMean,
                             StatisticKind::CesaroMean, StatisticKind::PrefixDensity}) {
    for (const auto& row : statistic_series(kind, x, x0, o, theta, 10)) EXPECT_EQ(row.value, 0.0);
  }
  for (const auto& row : statistic_series(StatisticKind::ModulusMean, x, x0, o, theta, 10, ModulusFunction::x_over_1px()))
    EXPECT_EQ(row.value, 0.0);
}

TEST(Estimators, AgreeWithNaiveDefinitions) {
  const auto theta = LacunaryStructure::powers(2, 12);
  for (std::uint64_t seed : {1, 2, 3}) {
    const FuzzySequence x = random_sequence(seed);
    const FuzzyNumber x0 = FuzzyNumber::triangular(-1, 0, 1);
    for (int m : {0, 1, 2}) {
      for (double p : {0.5, 1.0, 2.0}) {
        const OrderParams o = order(0.75, 0.5, m, p);
        for (int r = 1; r <= 12; ++r) {
          const IndexRange block = theta.block(r);
          const double strong = strong_lacunary_mean(x, x0, o, theta, r).value;
          EXPECT_NEAR(strong, naive_block_mean(x, x0, o, block, theta.h_pow(r, 0.75)), 1e-9 * (1 + strong));
          EXPECT_EQ(block_exceedances(x, x0, o, theta, r), naive_count(x, x0, m, 0.5, block));
        }
        const Index n = 3000;
        const double ces = cesaro_mean(x, x0, o, n).value;
        EXPECT_NEAR(ces, naive_block_mean(x, x0, o, {1, n}, std::pow(n, 0.75)), 1e-9 * (1 + ces));
      }
    }
  }
}

TEST(Estimators, PrefixSeriesMatchesPointEvaluations) {
  const FuzzySequence x = random_sequence(9);
  const FuzzyNumber x0 = FuzzyNumber::triangular(1, 2, 3);
  const auto theta = LacunaryStructure::powers(3, 8);
  const OrderParams o = order(0.6, 0.5, 1, 2.0);
  const auto ces = statistic_series(StatisticKind::CesaroMean, x, x0, o, theta, 8);
  const auto pre = statistic_series(StatisticKind::PrefixDensity, x, x0, o, theta, 8);
  ASSERT_EQ(ces.size(), 8u);
  for (int r = 1; r <= 8; ++r) {
    const auto i = static_cast<std::size_t>(r - 1);
    EXPECT_EQ(ces[i].k_r, theta.k(r));
    EXPECT_EQ(ces[i].h_r, theta.k(r));
    EXPECT_EQ(ces[i].value, cesaro_mean(x, x0, o, theta.k(r)).value);
    EXPECT_EQ(pre[i].value, prefix_density(x, x0, o, theta.k(r)));
  }
}

TEST(Estimators, PeriodicExponentsUseTheIndex) {
  const FuzzySequence x = random_sequence(14);
  const FuzzyNumber x0 = FuzzyNumber::triangular(1, 2, 3);
  const auto theta = LacunaryStructure::powers(2, 10);
  OrderParams o = order(1.0, 1.0, 1);
  o.p = ExponentRule(std::vector<double>{0.5, 1.0, 2.0});
  for (int r = 1; r <= 10; ++r) {
    const double v = strong_lacunary_mean(x, x0, o, theta, r).value;
    EXPECT_NEAR(v, naive_block_mean(x, x0, o, theta.block(r), static_cast<double>(theta.h(r))), 1e-9 * (1 + v));
  }
}

TEST(ModulusMean, IdentityReducesToStrongMeanBitForBit) {
  const auto theta = LacunaryStructure::powers(2, 16);
  for (ExampleId id : kAllExamples) {
    for (int m : {1, 2}) {
      const FuzzySequence x = catalog_sequence(id);
      const FuzzyNumber x0 = dominant_limit(id, m);
      const OrderParams o = order(0.75, 1.0, m);
      const auto strong = statistic_series(StatisticKind::StrongLacunaryMean, x, x0, o, theta, 16);
      const auto mod =
          statistic_series(StatisticKind::ModulusMean, x, x0, o, theta, 16, ModulusFunction::identity());
      for (std::size_t i = 0; i < strong.size(); ++i) ASSERT_EQ(mod[i].value, strong[i].value) << to_string(id);
    }
  }
}

TEST(ModulusMean, BoundedModulusCapsBlockValue) {
  const FuzzySequence x = catalog_sequence(ExampleId::GrowingSupports);
  const FuzzyNumber x0 = dominant_limit(ExampleId::GrowingSupports, 1);
  const auto theta = LacunaryStructure::powers(2, 14);
  for (double beta : {0.4, 1.0}) {
    const auto rows = statistic_series(StatisticKind::ModulusMean, x, x0, order(beta), theta, 14,
                                       ModulusFunction::x_over_1px());
    for (const auto& row : rows) EXPECT_LE(row.value, theta.h(row.r) / theta.h_pow(row.r, beta));
  }
  EXPECT_THROW(statistic_series(StatisticKind::ModulusMean, x, x0, order(1.0), theta, 4), std::invalid_argument);
}

TEST(StrongMean, CubeSequenceDecaysAtOrderOneAndGrowsAtLowOrder) {
  const FuzzySequence x = catalog_sequence(ExampleId::BoundedCubes);
  const FuzzyNumber x0 = dominant_limit(ExampleId::BoundedCubes, 1);
  const auto theta = LacunaryStructure::powers(2, 15);
  EXPECT_LT(strong_lacunary_mean(x, x0, order(1.0), theta, 15).value, 0.01);
  EXPECT_GT(strong_lacunary_mean(x, x0, order(0.3), theta, 15).value, 0.5);
}

TEST(CesaroMean, SquareSpikesGrowAndAlternatingStabilises) {
  const FuzzySequence sq = catalog_sequence(ExampleId::GrowingSupports);
  const FuzzyNumber sq0 = dominant_limit(ExampleId::GrowingSupports, 1);
  EXPECT_GT(cesaro_mean(sq, sq0, order(1.0), 1'000'000).value, cesaro_mean(sq, sq0, order(1.0), 10'000).value);

  const FuzzySequence alt = catalog_sequence(ExampleId::Alternating);
  const FuzzyNumber even = closed_form_limit(ExampleId::Alternating, 1, IndexClass::Even);
  EXPECT_NEAR(cesaro_mean(alt, even, order(1.0), 100'000).value, 3.0, 1e-3);
}

TEST(ExceedanceSet, ListsIndicesInOrder) {
  const FuzzySequence x = catalog_sequence(ExampleId::BoundedCubes);
  const auto set = exceedance_set(x, dominant_limit(ExampleId::BoundedCubes, 1), 1, 1.0, {1, 130});
  EXPECT_EQ(set, (std::vector<Index>{1, 7, 8, 26, 27, 63, 64, 124, 125}));
}

TEST(Kernels, MatchReferenceBitForBitAcrossThreadCounts) {
  const FuzzySequence d = difference(random_sequence(42), 2);
  const FuzzyNumber x0 = FuzzyNumber::triangular(-2, 0, 2);
  const IndexRange ranges[] = {{1, 1}, {5, 4}, {3, 9000}, {kernels::kWindow - 100, kernels::kWindow + 5000}};
  const TermFn term = [](Index k, double dist) { return std::pow(dist, 1.0 + 0.5 * static_cast<double>(k % 3)); };
  for (const IndexRange& range : ranges) {
    const auto ref_count = reference::count_at_least(d, x0, range, 1.5);
    const auto ref_sum = reference::sum_terms(d, x0, range, term);
    const auto ref_dist = reference::distances(d, x0, range);
    for (int threads : {1, 2, 3, 8}) {
      set_worker_threads(threads);
      EXPECT_EQ(kernels::count_at_least(d, x0, range, 1.5), ref_count) << threads;
      EXPECT_EQ(kernels::sum_terms(d, x0, range, term), ref_sum) << threads;
      EXPECT_EQ(kernels::distances(d, x0, range), ref_dist) << threads;
    }
  }
  set_worker_threads(0);
}

TEST(Kernels, SeriesIndependentOfThreadCount) {
  const FuzzySequence x = catalog_sequence(ExampleId::GrowingSupports);
  const FuzzyNumber x0 = dominant_limit(ExampleId::GrowingSupports, 1);
  const auto theta = LacunaryStructure::powers(2, 19);
  set_worker_threads(1);
  const auto one = statistic_series(StatisticKind::StrongLacunaryMean, x, x0, order(0.75), theta, 19);
  set_worker_threads(4);
  const auto four = statistic_series(StatisticKind::StrongLacunaryMean, x, x0, order(0.75), theta, 19);
  set_worker_threads(0);
  EXPECT_EQ(one, four);
}

}  // namespace
}  // namespace fuzzyseq
