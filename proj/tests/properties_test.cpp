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

#include <cstdint>

#include <gtest/gtest.h>

#include "fuzzyseq/properties.hpp"

namespace fuzzyseq {
namespace {

class SeededSuites : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SeededSuites, MetricAxiomsHold) {
  const SuiteResult r = run_metric_suite(GetParam(), 500);
  EXPECT_TRUE(r.ok) << r.property << ": " << r.witness;
  EXPECT_EQ(r.cases, 500u);
}

TEST_P(SeededSuites, FuzzyNumberAxiomsHold) {
  const SuiteResult r = run_fuzzy_axiom_suite(GetParam(), 200);
  EXPECT_TRUE(r.ok) << r.property << ": " << r.witness;
}

TEST_P(SeededSuites, GeneratedValuesAreValid) {
  SeededSource src(GetParam());
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(validate(FuzzyNumber(src.trapezoid())).ok);
    EXPECT_TRUE(validate(src.grid(1 + i % 9)).ok);
    const double x = src.dyadic(-3, 5, 16);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 5);
    EXPECT_EQ(x * 16, static_cast<double>(static_cast<std::int64_t>(x * 16)));
    const auto n = src.integer(-4, 4);
    EXPECT_GE(n, -4);
    EXPECT_LE(n, 4);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SeededSuites, ::testing::Values(1, 7, 42, 20260101, 0xdeadbeef));

TEST(SeededSource, SameSeedSameStream) {
  SeededSource a(99), b(99), c(100);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(RandomSequence, PureInSeedAndIndex) {
  const FuzzySequence a = random_sequence(5), b = random_sequence(5), c = random_sequence(6);
  bool differs = false;
  for (Index k = 1; k <= 200; ++k) {
    EXPECT_EQ(a.at(k), b.at(k));
    EXPECT_EQ(a.at(k), a.at(k));
    differs = differs || !(a.at(k) == c.at(k));
  }
  EXPECT_TRUE(differs);
}

TEST(Mix64, KnownValues) {
  EXPECT_NE(mix64(0), mix64(1));
  EXPECT_EQ(mix64(12345), mix64(12345));
}

}  // namespace
}  // namespace fuzzyseq
