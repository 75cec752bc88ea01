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

#include "fuzzyseq/estimators.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "fuzzyseq/kernels.hpp"

namespace fuzzyseq {

namespace {

double pow_beta(Index n, double beta) { return order_power(n, beta); }

TermFn power_term(const ExponentRule& p) {
  if (p.is_constant()) {
    const double e = p.at(1);
    return [e](Index, double d) { return std::pow(d, e); };
  }
  return [p](Index k, double d) { return std::pow(d, p.at(k)); };
}

TermFn modulus_term(const ModulusFunction& f, const ExponentRule& p) {
  if (p.is_constant()) {
    const double e = p.at(1);
    return [f, e](Index, double d) { return std::pow(f(d), e); };
  }
  return [f, p](Index k, double d) { return std::pow(f(d), p.at(k)); };
}

}  // namespace

void OrderParams::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument(fmt::format("beta = {} must be > 0", beta));
  if (beta > 1.0 && !allow_beta_gt_1)
    throw std::invalid_argument(fmt::format("beta = {} > 1 requires the pathology flag", beta));
  if (gamma) {
    if (!(*gamma > 0.0 && *gamma <= 1.0)) throw std::invalid_argument(fmt::format("gamma = {} outside (0, 1]", *gamma));
    if (beta > *gamma) throw std::invalid_argument(fmt::format("need beta <= gamma, got {} > {}", beta, *gamma));
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument(fmt::format("epsilon = {} must be > 0", epsilon));
  if (m < 0) throw std::invalid_argument(fmt::format("difference order m = {} must be >= 0", m));
}

const char* to_string(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::LacunaryDensity: return "lacunary-density";
    case StatisticKind::StrongLacunaryMean: return "strong-lacunary-mean";
    case StatisticKind::CesaroMean: return "cesaro-mean";
    case StatisticKind::PrefixDensity: return "prefix-density";
    case StatisticKind::ModulusMean: return "modulus-mean";
  }
  return "?";
}

StatisticKind parse_statistic_kind(std::string_view name) {
  if (name == "density" || name == "lacunary-density") return StatisticKind::LacunaryDensity;
  if (name == "strong" || name == "strong-lacunary-mean") return StatisticKind::StrongLacunaryMean;
  if (name == "cesaro" || name == "cesaro-mean") return StatisticKind::CesaroMean;
  if (name == "prefix" || name == "prefix-density") return StatisticKind::PrefixDensity;
  if (name == "modulus" || name == "modulus-mean") return StatisticKind::ModulusMean;
  throw std::invalid_argument(fmt::format("unknown statistic kind '{}'", name));
}

std::int64_t block_exceedances(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params,
                               const LacunaryStructure& theta, int r) {
  params.validate();
  return kernels::count_at_least(difference(x, params.m), x0, theta.block(r), params.epsilon);
}

std::vector<Index> exceedance_set(const FuzzySequence& x, const FuzzyNumber& x0, int m, double eps, IndexRange range) {
  const auto d = kernels::distances(difference(x, m), x0, range);
  std::vector<Index> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= eps) out.push_back(range.first + static_cast<Index>(i));
  }
  return out;
}

double prefix_density(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params, Index n) {
  params.validate();
  if (n < 1) throw std::invalid_argument("prefix_density: n must be >= 1");
  const auto count = kernels::count_at_least(difference(x, params.m), x0, {1, n}, params.epsilon);
  return static_cast<double>(count) / pow_beta(n, params.beta);
}

BlockStatistic lacunary_density(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params,
                                const LacunaryStructure& theta, int r) {
  const auto count = block_exceedances(x, x0, params, theta, r);
  return {r, theta.k(r), theta.h(r), static_cast<double>(count) / theta.h_pow(r, params.beta),
          StatisticKind::LacunaryDensity};
}

BlockStatistic strong_lacunary_mean(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params,
                                    const LacunaryStructure& theta, int r) {
  params.validate();
  const double sum = kernels::sum_terms(difference(x, params.m), x0, theta.block(r), power_term(params.p));
  return {r, theta.k(r), theta.h(r), sum / theta.h_pow(r, params.beta), StatisticKind::StrongLacunaryMean};
}

BlockStatistic cesaro_mean(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params, Index n) {
  params.validate();
  if (n < 1) throw std::invalid_argument("cesaro_mean: n must be >= 1");
  const double sum = kernels::sum_terms(difference(x, params.m), x0, {1, n}, power_term(params.p));
  return {0, n, n, sum / pow_beta(n, params.beta), StatisticKind::CesaroMean};
}

BlockStatistic modulus_mean(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params,
                            const ModulusFunction& f, const LacunaryStructure& theta, int r) {
  params.validate();
  const double sum = kernels::sum_terms(difference(x, params.m), x0, theta.block(r), modulus_term(f, params.p));
  return {r, theta.k(r), theta.h(r), sum / theta.h_pow(r, params.beta), StatisticKind::ModulusMean};
}

std::vector<double> block_power_sums(const FuzzySequence& x, const FuzzyNumber& x0, const OrderParams& params,
                                     const LacunaryStructure& theta, int r_max,
                                     const std::optional<ModulusFunction>& f) {
  params.validate();
  const FuzzySequence dx = difference(x, params.m);
  const TermFn term = f ? modulus_term(*f, params.p) : power_term(params.p);
  std::vector<double> out;
  for (int r = 1; r <= r_max; ++r) out.push_back(kernels::sum_terms(dx, x0, theta.block(r), term));
  return out;
}

std::vector<BlockStatistic> statistic_series(StatisticKind kind, const FuzzySequence& x, const FuzzyNumber& x0,
                                             const OrderParams& params, const LacunaryStructure& theta, int r_max,
                                             const std::optional<ModulusFunction>& f) {
  params.validate();
  if (r_max < 1 || r_max > theta.r_max())
    throw std::invalid_argument(fmt::format("r_max = {} outside 1..{}", r_max, theta.r_max()));
  std::vector<BlockStatistic> out;
  out.reserve(static_cast<std::size_t>(r_max));
  switch (kind) {
    case StatisticKind::LacunaryDensity:
      for (int r = 1; r <= r_max; ++r) out.push_back(lacunary_density(x, x0, params, theta, r));
      break;
    case StatisticKind::StrongLacunaryMean:
      for (int r = 1; r <= r_max; ++r) out.push_back(strong_lacunary_mean(x, x0, params, theta, r));
      break;
    case StatisticKind::ModulusMean:
      if (!f) throw std::invalid_argument("modulus-mean series needs a modulus function");
      for (int r = 1; r <= r_max; ++r) out.push_back(modulus_mean(x, x0, params, *f, theta, r));
      break;
    case StatisticKind::CesaroMean: {
      const auto sums = block_power_sums(x, x0, params, theta, r_max);
      double prefix = 0.0;
      for (int r = 1; r <= r_max; ++r) {
        prefix += sums[static_cast<std::size_t>(r - 1)];
        const Index n = theta.k(r);
        out.push_back({r, n, n, prefix / pow_beta(n, params.beta), StatisticKind::CesaroMean});
      }
      break;
    }
    case StatisticKind::PrefixDensity: {
      const FuzzySequence dx = difference(x, params.m);
      std::int64_t prefix = 0;
      for (int r = 1; r <= r_max; ++r) {
        prefix += kernels::count_at_least(dx, x0, theta.block(r), params.epsilon);
        const Index n = theta.k(r);
        out.push_back({r, n, n, static_cast<double>(prefix) / pow_beta(n, params.beta), StatisticKind::PrefixDensity});
      }
      break;
    }
  }
  return out;
}

}  // namespace fuzzyseq
