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
#include <optional>
#include <string_view>
#include <vector>

#include "fuzzyseq/fuzzy_number.hpp"
#include "fuzzyseq/lacunary.hpp"
#include "fuzzyseq/modulus.hpp"
#include "fuzzyseq/sequence.hpp"

namespace fuzzyseq {

// Estimator parameters. beta must lie in (0, 1] unless allow_beta_gt_1 is set;
// gamma, when present, must satisfy beta <= gamma <= 1.
struct OrderParams {
  double beta = 1.0;
  std::optional<double> gamma;
  ExponentRule p{1.0};
  double epsilon = 1.0;
  int m = 0;
  bool allow_beta_gt_1 = false;

  // Throws std::invalid_argument.
  void validate() const;
};

enum class StatisticKind { LacunaryDensity, StrongLacunaryMean, CesaroMean, PrefixDensity, ModulusMean };

const char* to_string(StatisticKind kind);
// Accepts the full names and the short forms density/strong/cesaro/prefix/modulus.
StatisticKind parse_statistic_kind(std::string_view name);

// One row of an experiment. Prefix kinds (cesaro, prefix density) store the
// prefix length n in both k_r and h_r.
struct BlockStatistic {
  int r = 0;
  Index k_r = 0;
  Index h_r = 0;
  double value = 0.0;
  StatisticKind kind = StatisticKind::LacunaryDensity;

  friend bool operator==(const BlockStatistic&, const BlockStatistic&) = default;
};

// |{k in I_r : d((Delta^m X)_k, X0) >= eps}|; the shared numerator of the density estimators.
std::int64_t block_exceedances(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params,
                               const LacunaryStructure& theta, int r);
// Indices k in range with d((Delta^m X)_k, X0) >= eps, ascending.
std::vector<Index> exceedance_set(const FuzzySequence& x, const FuzzyNumber& x0, int m, double eps, IndexRange range);

// n^-beta |{k <= n : d((Delta^m X)_k, X0) >= eps}|
double prefix_density(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params, Index n);

// h_r^-beta |{k in I_r : d((Delta^m X)_k, X0) >= eps}|
BlockStatistic lacunary_density(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params,
                                const LacunaryStructure& theta, int r);

// h_r^-beta sum_{k in I_r} d((Delta^m X)_k, X0)^{p_k}
BlockStatistic strong_lacunary_mean(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params,
                                    const LacunaryStructure& theta, int r);

// n^-beta sum_{k <= n} d((Delta^m X)_k, X0)^{p_k}
BlockStatistic cesaro_mean(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params, Index n);

// h_r^-beta sum_{k in I_r} f(d((Delta^m X)_k, X0))^{p_k}. With f = identity this
// equals strong_lacunary_mean bit for bit.
BlockStatistic modulus_mean(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params,
                            const ModulusFunction& f, const LacunaryStructure& theta, int r);

// Block-wise sums sum_{k in I_r} f(d)^{p_k} for r = 1..r_max (f = identity when absent).
std::vector<double> block_power_sums(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params,
                                     const LacunaryStructure& theta, int r_max,
                                     const std::optional<ModulusFunction>& f = std::nullopt);

// Rows r = 1..r_max. Block kinds evaluate block r; prefix kinds evaluate n = k_r
// with one incremental scan. ModulusMean requires f.
std::vector<BlockStatistic> statistic_series(StatisticKind kind, const FuzzySequence& x, const FuzzyNumber& x0,
                                             const OrderParams& params, const LacunaryStructure& theta, int r_max,
                                             const std::optional<ModulusFunction>& f = std::nullopt);

}  // namespace fuzzyseq
