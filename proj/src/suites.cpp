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

#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "check_builder.hpp"
#include "fuzzyseq/kernels.hpp"
#include "fuzzyseq/lacunary.hpp"
#include "fuzzyseq/literal.hpp"
#include "fuzzyseq/modulus.hpp"
#include "fuzzyseq/properties.hpp"

namespace fuzzyseq::detail {

namespace {

using Series = std::vector<BlockStatistic>;

// A sequence together with the limit candidate the checks measure against.
struct Subject {
  std::string label;
  FuzzySequence seq;
  FuzzyNumber x0;
  int m = 1;
};

const FuzzyNumber& random_center() {
  static const FuzzyNumber center = FuzzyNumber::trapezoidal(1.5, 2, 2, 2.5);
  return center;
}

Subject random_subject(std::uint64_t seed, int m) {
  return {fmt::format("random-{}/m={}", seed, m), random_sequence(seed),
          difference(FuzzySequence::constant(random_center()), m).at(1), m};
}

Subject example_subject(ExampleId id, int m) {
  return {fmt::format("{}/m={}", to_string(id), m), catalog_sequence(id), dominant_limit(id, m), m};
}

OrderParams order_params(double beta, double eps, const ExponentRule& p, int m) {
  OrderParams params;
  params.beta = beta;
  params.epsilon = eps;
  params.p = p;
  params.m = m;
  return params;
}

Series series_of(StatisticKind kind, const Subject& s, double beta, double eps, const ExponentRule& p,
                 const LacunaryStructure& theta, const std::optional<ModulusFunction>& f = std::nullopt) {
  return statistic_series(kind, s.seq, s.x0, order_params(beta, eps, p, s.m), theta, theta.r_max(), f);
}

struct NamedTheta {
  std::string name;
  LacunaryStructure theta;
};

LacunaryStructure polynomial_theta(int power, int r_max) {
  std::vector<Index> terms;
  for (Index r = 0; r <= r_max; ++r) terms.push_back(power == 2 ? r * r : r * (r + 1) / 2);
  return LacunaryStructure::from_terms(std::move(terms), ShrinkPolicy::Reject);
}

// Least-squares slope of ln y against ln x over the back half of the points.
double tail_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t from = x.size() / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(x.size() - from);
  for (std::size_t i = from; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  return den == 0.0 ? 0.0 : (n * sxy - sx * sy) / den;
}

constexpr double kRatioMargin = 0.1;
constexpr double kFlatSlope = 0.05;

struct ThetaLabels {
  double inf_q = 0, sup_q = 0, tail_inf_q = 0;
  bool ratio_above_one = false;   // lim inf q_r > 1
  bool ratio_bounded = false;     // lim sup q_r < infinity
};

ThetaLabels label_theta(const LacunaryStructure& theta) {
  ThetaLabels out;
  const RatioStats all = ratio_stats(theta, theta.r_max());
  out.inf_q = all.inf_q;
  out.sup_q = all.sup_q;
  out.tail_inf_q = std::numeric_limits<double>::infinity();
  for (int r = std::max(2, theta.r_max() / 2); r <= theta.r_max(); ++r) out.tail_inf_q = std::min(out.tail_inf_q, theta.q(r));
  out.ratio_above_one = out.tail_inf_q >= 1.0 + kRatioMargin;
  // Bounded when the ratios do not trend upward over the tail.
  std::vector<double> ks, qs;
  for (int r = 2; r <= theta.r_max(); ++r) {
    ks.push_back(static_cast<double>(theta.k(r)));
    qs.push_back(theta.q(r));
  }
  out.ratio_bounded = tail_log_slope(ks, qs) <= kFlatSlope;
  return out;
}

// lim inf h_r^beta / k_r > 0, read as a non-decreasing trend over the tail.
bool block_share_bounded_below(const LacunaryStructure& theta, double beta) {
  std::vector<double> ks, v;
  for (int r = 1; r <= theta.r_max(); ++r) {
    ks.push_back(static_cast<double>(theta.k(r)));
    v.push_back(theta.h_pow(r, beta) / static_cast<double>(theta.k(r)));
  }
  return tail_log_slope(ks, v) >= -kFlatSlope;
}

// lim sup k_r / k_{r-1}^beta < infinity, read as a non-increasing trend over the tail.
bool growth_ratio_bounded(const LacunaryStructure& theta, double beta) {
  std::vector<double> ks, v;
  for (int r = 2; r <= theta.r_max(); ++r) {
    ks.push_back(static_cast<double>(theta.k(r)));
    v.push_back(static_cast<double>(theta.k(r)) / order_power(theta.k(r - 1), beta));
  }
  return tail_log_slope(ks, v) <= kFlatSlope;
}

std::vector<NamedTheta> condition_thetas() {
  std::vector<NamedTheta> out;
  out.push_back({"powers2", LacunaryStructure::powers(2, 16)});
  out.push_back({"powers3", LacunaryStructure::powers(3, 10)});
  out.push_back({"triangular", polynomial_theta(1, 180)});
  out.push_back({"squares", polynomial_theta(2, 128)});
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CellResult make_cell(std::string key, StatisticKind kind, double beta, const std::string& limit, const FuzzyNumber& x0,
                     Series series) {
  CellResult out;
  out.cell = Cell{std::move(key), kind, "beta", beta, 1.0, 1.0, 1, limit};
  out.limit_literal = to_literal(x0);
  out.series = std::move(series);
  out.expected = "any";
  if (out.series.size() >= 8) {
    out.verdict = verdict(out.series);
    out.outcome = Outcome::Pass;
  }
  return out;
}

}  // namespace

std::vector<std::string> inclusion_claims() {
  return {"density-order-monotone", "linearity", "order-to-lacunary-statistical", "strong-to-density-same-limit",
          "strong-order-to-lacunary-mean"};
}

std::vector<std::string> theta_claims() {
  return {"prefix-to-lacunary-ratio", "prefix-to-lacunary-block-share", "lacunary-to-prefix", "cesaro-to-strong",
          "strong-to-cesaro"};
}

std::vector<std::string> uniqueness_claims() { return {"cesaro-strong-limits-agree", "modulus-limit-unique"}; }

std::vector<std::string> modulus_claims() { return {"modulus-to-density", "density-to-modulus-bounded"}; }

Report run_inclusions() {
  Report report;
  report.experiment = "exp-inclusions";
  report.claims = inclusion_claims();

  const std::vector<double> orders = {0.3, 0.5, 0.75, 1.0};
  const std::vector<double> ps = {0.5, 1.0, 2.0};
  const std::vector<double> epsilons = {0.25, 1.0};
  std::vector<NamedTheta> thetas;
  thetas.push_back({"powers2", LacunaryStructure::powers(2, 14)});
  thetas.push_back({"explicit", LacunaryStructure::from_terms({0, 3, 8, 20, 50, 120, 300, 700, 1600, 3600, 8000, 17000},
                                                              ShrinkPolicy::Reject)});

  std::vector<Subject> subjects;
  for (std::uint64_t seed : {1, 2, 3}) {
    for (int m : {0, 1, 2}) subjects.push_back(random_subject(seed, m));
  }
  for (ExampleId id : kAllExamples) {
    for (int m : {1, 2}) subjects.push_back(example_subject(id, m));
  }

  CheckBuilder density_monotone("density-order-monotone", "density-order-monotone");
  CheckBuilder to_statistical("density-below-order-one", "order-to-lacunary-statistical");
  CheckBuilder same_order_bridge("chebyshev-same-order", "strong-to-density-same-limit");
  CheckBuilder cross_order_bridge("chebyshev-cross-order", "");
  CheckBuilder mean_monotone("mean-order-monotone", "");
  CheckBuilder mean_to_one("mean-below-order-one", "strong-order-to-lacunary-mean");

  for (const auto& s : subjects) {
    for (const auto& [tname, theta] : thetas) {
      std::map<std::pair<double, double>, Series> strong;  // (order, p)
      for (double o : orders) {
        for (double p : ps) strong[{o, p}] = series_of(StatisticKind::StrongLacunaryMean, s, o, 1.0, ExponentRule(p), theta);
      }
      for (double eps : epsilons) {
        std::map<double, Series> density;
        for (double o : orders) density[o] = series_of(StatisticKind::LacunaryDensity, s, o, eps, ExponentRule(1.0), theta);
        const auto ctx = [&](double a, double b, int r) {
          return fmt::format("{} theta={} eps={} orders ({}, {}) r={}", s.label, tname, eps, a, b, r);
        };
        for (double a : orders) {
          for (double b : orders) {
            if (a > b) continue;
            for (std::size_t i = 0; i < density[a].size(); ++i) {
              const int r = density[a][i].r;
              if (a < b) density_monotone.geq(density[a][i].value, density[b][i].value, 0.0, ctx(a, b, r));
              if (b == 1.0) to_statistical.geq(density[a][i].value, density[b][i].value, 0.0, ctx(a, b, r));
              for (double p : ps) {
                const double floor = std::pow(eps, p) * density[b][i].value;
                const double lhs = strong[{a, p}][i].value;
                if (a == b) same_order_bridge.geq(lhs, floor, 1e-12, ctx(a, b, r) + fmt::format(" p={}", p));
                else cross_order_bridge.geq(lhs, floor, 1e-12, ctx(a, b, r) + fmt::format(" p={}", p));
              }
            }
          }
        }
      }
      for (double a : orders) {
        for (double b : orders) {
          if (!(a < b)) continue;
          for (double p : ps) {
            const Series& lo = strong[{a, p}];
            const Series& hi = strong[{b, p}];
            for (std::size_t i = 0; i < lo.size(); ++i) {
              const auto c = fmt::format("{} theta={} p={} orders ({}, {}) r={}", s.label, tname, p, a, b, lo[i].r);
              mean_monotone.geq(lo[i].value, hi[i].value, 0.0, c);
              if (b == 1.0) mean_to_one.geq(lo[i].value, hi[i].value, 0.0, c);
            }
          }
        }
      }
    }
  }

  // Scalar and sum rules on exceedance sets over a common prefix.
  CheckBuilder scalar_rule("scalar-exceedance-sets-equal", "linearity");
  CheckBuilder sum_rule("sum-exceedance-set-covered", "linearity");
  const IndexRange prefix{1, 4096};
  for (const auto& s : subjects) {
    const FuzzySequence dx = difference(s.seq, s.m);
    for (double c : {-2.0, 0.5, 3.0}) {
      const FuzzySequence scaled = scale(c, dx);
      const FuzzyNumber scaled_limit = scalar_mul(c, s.x0);
      for (double eps : epsilons) {
        const auto lhs = exceedance_set(scaled, scaled_limit, 0, eps, prefix);
        const auto rhs = exceedance_set(s.seq, s.x0, s.m, eps / std::abs(c), prefix);
        scalar_rule.expect(lhs == rhs, fmt::format("{} c={} eps={}: {} vs {} indices", s.label, c, eps, lhs.size(),
                                                   rhs.size()));
      }
    }
    const Subject other = random_subject(1000 + s.m, s.m);
    const FuzzySequence sum = add(s.seq, other.seq);
    const FuzzyNumber sum_limit = add(s.x0, other.x0);
    for (double eps : epsilons) {
      const auto both = exceedance_set(sum, sum_limit, s.m, eps, prefix);
      const auto first = exceedance_set(s.seq, s.x0, s.m, eps / 2, prefix);
      const auto second = exceedance_set(other.seq, other.x0, s.m, eps / 2, prefix);
      std::vector<Index> covered;
      std::set_union(first.begin(), first.end(), second.begin(), second.end(), std::back_inserter(covered));
      const bool ok = std::includes(covered.begin(), covered.end(), both.begin(), both.end());
      sum_rule.expect(ok, fmt::format("{} + {} eps={}", s.label, other.label, eps));
    }
  }

  for (CheckBuilder* b : {&density_monotone, &to_statistical, &same_order_bridge, &cross_order_bridge, &mean_monotone,
                          &mean_to_one, &scalar_rule, &sum_rule})
    report.checks.push_back(b->finish());
  report.notes.push_back(fmt::format("{} subjects, orders {{0.3, 0.5, 0.75, 1}}, p in {{0.5, 1, 2}}, eps in {{0.25, 1}}",
                                     subjects.size()));
  return report;
}

Report run_theta_conditions() {
  Report report;
  report.experiment = "exp-theta-conditions";
  report.claims = theta_claims();

  const auto thetas = condition_thetas();
  std::vector<Subject> subjects;
  for (ExampleId id : kAllExamples) subjects.push_back(example_subject(id, 1));
  for (std::uint64_t seed : {11, 12}) subjects.push_back(random_subject(seed, 1));
  const std::vector<double> betas = {0.5, 0.75, 1.0};
  const double eps = 0.5;

  CheckBuilder ratio_rule("prefix-dominates-scaled-block-density", "prefix-to-lacunary-ratio");
  CheckBuilder share_rule("prefix-dominates-block-share", "prefix-to-lacunary-block-share");
  CheckBuilder lacunary_to_prefix("lacunary-zero-implies-prefix-zero", "lacunary-to-prefix");
  CheckBuilder tau_identity("block-mean-from-cesaro-identity", "cesaro-to-strong");
  CheckBuilder tau_bound("block-mean-below-scaled-cesaro", "cesaro-to-strong");
  CheckBuilder cesaro_bound("cesaro-below-scaled-block-means", "strong-to-cesaro");

  for (const auto& [tname, theta] : thetas) {
    const ThetaLabels labels = label_theta(theta);
    const double delta = labels.inf_q - 1.0;
    std::string growth_labels, share_labels;
    for (double beta : betas) {
      growth_labels += fmt::format(" {}:{}", beta, yes_no(growth_ratio_bounded(theta, beta)));
      share_labels += fmt::format(" {}:{}", beta, yes_no(block_share_bounded_below(theta, beta)));
    }
    report.notes.push_back(fmt::format(
        "theta {} (r <= {}): inf q = {}, sup q = {}, tail inf q = {}; ratio above one: {}; ratio bounded: {}; "
        "block share bounded below by beta:{}; growth ratio bounded by beta:{}",
        tname, theta.r_max(), labels.inf_q, labels.sup_q, labels.tail_inf_q, yes_no(labels.ratio_above_one),
        yes_no(labels.ratio_bounded), share_labels, growth_labels));

    for (const auto& s : subjects) {
      const Index n_max = theta.k(theta.r_max());
      const auto d = kernels::distances(difference(s.seq, s.m), s.x0, {1, n_max});
      for (double beta : betas) {
        const auto ctx = [&](int r) { return fmt::format("{} theta={} beta={} r={}", s.label, tname, beta, r); };
        const Series dens = series_of(StatisticKind::LacunaryDensity, s, beta, eps, ExponentRule(1.0), theta);
        const Series prefix = series_of(StatisticKind::PrefixDensity, s, beta, eps, ExponentRule(1.0), theta);
        if (labels.ratio_above_one) {
          const double factor = std::pow(delta / (1.0 + delta), beta);
          for (int r = 2; r <= theta.r_max(); ++r) {
            const auto i = static_cast<std::size_t>(r - 1);
            ratio_rule.geq(prefix[i].value, factor * dens[i].value, 1e-12, ctx(r));
          }
        }
        if (block_share_bounded_below(theta, beta)) {
          const Series prefix_one = series_of(StatisticKind::PrefixDensity, s, 1.0, eps, ExponentRule(1.0), theta);
          for (int r = 1; r <= theta.r_max(); ++r) {
            const auto i = static_cast<std::size_t>(r - 1);
            const double share = theta.h_pow(r, beta) / static_cast<double>(theta.k(r));
            share_rule.geq(prefix_one[i].value, share * dens[i].value, 1e-12, ctx(r));
          }
        }
        if (tname == "powers2" && labels.ratio_bounded) {
          const Series prefix_one = series_of(StatisticKind::PrefixDensity, s, 1.0, eps, ExponentRule(1.0), theta);
          const Verdict lac = verdict(dens);
          if (lac.kind == VerdictKind::TendsToZero) {
            const Verdict pre = verdict(prefix_one);
            lacunary_to_prefix.expect(pre.kind == VerdictKind::TendsToZero,
                                      fmt::format("{}: prefix density verdict {}", ctx(theta.r_max()), to_string(pre.kind)));
          }
          if (beta == 0.75 && s.label.rfind("random", 0) != 0) {
            lacunary_to_prefix.add_rows(dens);
            lacunary_to_prefix.add_rows(prefix_one);
          }
        }

        for (double p : {1.0, 2.0}) {
          const ExponentRule rule(p);
          const Series tau = series_of(StatisticKind::StrongLacunaryMean, s, beta, eps, rule, theta);
          const Series ces = series_of(StatisticKind::CesaroMean, s, beta, eps, rule, theta);
          const auto pb = [&](Index n) { return order_power(n, beta); };
          for (int r = 1; r <= theta.r_max(); ++r) {
            const auto i = static_cast<std::size_t>(r - 1);
            const double hb = theta.h_pow(r, beta);
            const double prev = r >= 2 ? pb(theta.k(r - 1)) / hb * ces[i - 1].value : 0.0;
            const double whole = pb(theta.k(r)) / hb * ces[i].value;
            tau_identity.near(tau[i].value, whole - prev, 1e-9, ctx(r) + fmt::format(" p={}", p), whole);
            if (labels.ratio_above_one && r >= 2) {
              tau_bound.leq(tau[i].value, std::pow((1.0 + delta) / delta, beta) * ces[i].value, 1e-12,
                            ctx(r) + fmt::format(" p={}", p));
            }
          }
          if (growth_ratio_bounded(theta, beta)) {
            // Prefix sums of d^p in index order, then C(t) = S(t) / t^beta at a few t per block.
            std::vector<double> prefix_sum(d.size() + 1, 0.0);
            for (std::size_t k = 0; k < d.size(); ++k) prefix_sum[k + 1] = prefix_sum[k] + std::pow(d[k], p);
            const Series tau_one = series_of(StatisticKind::StrongLacunaryMean, s, 1.0, eps, rule, theta);
            double tau_max = 0.0;
            for (int r = 1; r <= theta.r_max(); ++r) {
              const auto i = static_cast<std::size_t>(r - 1);
              tau_max = std::max(tau_max, tau_one[i].value);
              if (r < 2) continue;
              const Index lo = theta.k(r - 1), hi = theta.k(r);
              const double bound = static_cast<double>(hi) / pb(lo) * tau_max;
              for (Index t : {lo + 1, lo + (hi - lo) / 2, hi}) {
                const double c = prefix_sum[static_cast<std::size_t>(t)] / pb(t);
                cesaro_bound.leq(c, bound, 1e-12, ctx(r) + fmt::format(" p={} t={}", p, t));
              }
            }
          }
        }
      }
    }
  }

  for (CheckBuilder* b : {&ratio_rule, &share_rule, &lacunary_to_prefix, &tau_identity, &tau_bound, &cesaro_bound})
    report.checks.push_back(b->finish());
  return report;
}

Report run_uniqueness() {
  Report report;
  report.experiment = "exp-uniqueness";
  report.claims = uniqueness_claims();
  const LacunaryStructure theta = LacunaryStructure::powers(2, 18);
  const std::vector<double> betas = {0.5, 1.0};
  const ExponentRule one(1.0);
  const std::vector<std::string> moduli = {"sqrt", "xover1px"};

  CheckBuilder mean_agree("converging-mean-limits-agree", "cesaro-strong-limits-agree");
  CheckBuilder modulus_agree("converging-modulus-limits-agree", "modulus-limit-unique");
  CheckBuilder chain("candidate-gap-below-modulus-means", "modulus-limit-unique");

  for (ExampleId id : kAllExamples) {
    const FuzzySequence seq = catalog_sequence(id);
    std::vector<std::pair<std::string, FuzzyNumber>> candidates = {{"auto", dominant_limit(id, 1)}};
    for (IndexClass cls : closed_form_classes(id))
      candidates.emplace_back(fmt::format("class:{}", to_string(cls)), closed_form_limit(id, 1, cls));

    for (double beta : betas) {
      struct Entry {
        std::string family;
        std::size_t candidate;
        std::size_t cell;
      };
      std::vector<Entry> entries;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        const auto& [token, x0] = candidates[c];
        const Subject s{to_string(id), seq, x0, 1};
        const auto key = [&](const std::string& est) {
          return fmt::format("{}/{}/beta={}/limit={}", to_string(id), est, beta, token);
        };
        report.cells.push_back(make_cell(key("strong-lacunary-mean"), StatisticKind::StrongLacunaryMean, beta, token, x0,
                                         series_of(StatisticKind::StrongLacunaryMean, s, beta, 1.0, one, theta)));
        entries.push_back({"mean", c, report.cells.size() - 1});
        report.cells.push_back(make_cell(key("cesaro-mean"), StatisticKind::CesaroMean, beta, token, x0,
                                         series_of(StatisticKind::CesaroMean, s, beta, 1.0, one, theta)));
        entries.push_back({"mean", c, report.cells.size() - 1});
        for (const auto& name : moduli) {
          const ModulusFunction f = modulus_by_name(name);
          report.cells.push_back(make_cell(key("modulus-mean:" + name), StatisticKind::ModulusMean, beta, token, x0,
                                           series_of(StatisticKind::ModulusMean, s, beta, 1.0, one, theta, f)));
          entries.push_back({"modulus:" + name, c, report.cells.size() - 1});
        }
      }
      for (std::size_t a = 0; a < entries.size(); ++a) {
        for (std::size_t b = a + 1; b < entries.size(); ++b) {
          const auto& ea = entries[a];
          const auto& eb = entries[b];
          if (ea.family != eb.family || ea.candidate == eb.candidate) continue;
          const auto& ca = report.cells[ea.cell];
          const auto& cb = report.cells[eb.cell];
          if (!ca.verdict || !cb.verdict) continue;
          if (ca.verdict->kind != VerdictKind::TendsToZero || cb.verdict->kind != VerdictKind::TendsToZero) continue;
          const double gap = metric_d(candidates[ea.candidate].second, candidates[eb.candidate].second);
          CheckBuilder& target = ea.family == "mean" ? mean_agree : modulus_agree;
          target.leq(gap, 1e-6, 0.0, fmt::format("{} and {} both tend to zero", ca.cell.key, cb.cell.key));
        }
      }
    }

    // Per-block chain: gap term <= D (mean to X' + mean to X'').
    const LacunaryStructure short_theta = LacunaryStructure::powers(2, 14);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      for (std::size_t b = a + 1; b < candidates.size(); ++b) {
        const double gap = metric_d(candidates[a].second, candidates[b].second);
        for (const char* name : {"identity", "sqrt", "xover1px"}) {
          const ModulusFunction f = modulus_by_name(name);
          for (const ExponentRule& rule : {ExponentRule(1.0), ExponentRule(std::vector<double>{0.5, 1.0, 2.0})}) {
            const double D = std::max(1.0, std::pow(2.0, rule.sup() - 1.0));
            for (double beta : betas) {
              const Subject sa{to_string(id), seq, candidates[a].second, 1};
              const Subject sb{to_string(id), seq, candidates[b].second, 1};
              const Series ma = series_of(StatisticKind::ModulusMean, sa, beta, 1.0, rule, short_theta, f);
              const Series mb = series_of(StatisticKind::ModulusMean, sb, beta, 1.0, rule, short_theta, f);
              for (int r = 1; r <= short_theta.r_max(); ++r) {
                const auto i = static_cast<std::size_t>(r - 1);
                double lhs = 0.0;
                const IndexRange block = short_theta.block(r);
                for (Index k = block.first; k <= block.last; ++k) lhs += std::pow(f(gap), rule.at(k));
                lhs /= short_theta.h_pow(r, beta);
                chain.leq(lhs, D * (ma[i].value + mb[i].value), 1e-12,
                          fmt::format("{} {} vs {} f={} p={} beta={} r={}", to_string(id), candidates[a].first,
                                      candidates[b].first, name, rule.is_constant() ? "const" : "periodic", beta, r));
              }
            }
          }
        }
      }
    }
  }

  for (CheckBuilder* b : {&mean_agree, &modulus_agree, &chain}) report.checks.push_back(b->finish());
  report.notes.push_back("candidate limits: the computed dominant-class value and every published closed form");
  report.notes.push_back("orders above one are excluded: there two distinct limits can both tend to zero");
  return report;
}

Report run_modulus() {
  Report report;
  report.experiment = "exp-modulus";
  report.claims = modulus_claims();

  CheckBuilder axioms("modulus-axioms-hold", "");
  for (const char* name : {"identity", "sqrt", "xover1px"}) {
    const ModulusReport r = check_modulus(modulus_by_name(name), 10'000);
    axioms.expect(r.ok, fmt::format("{}: {}", name, r.message));
  }
  CheckBuilder rejects("non-subadditive-gauge-rejected", "");
  {
    const ModulusReport r = check_modulus(ModulusFunction::square(), 10'000);
    rejects.expect(!r.ok && r.axiom == ModulusAxiom::Subadditive && r.x == 1.0 && r.y == 1.0,
                   fmt::format("xsq: ok={} witness ({}, {})", r.ok, r.x, r.y));
    rejects.note(fmt::format("xsq witness ({}, {}): {}", r.x, r.y, r.message));
  }

  const LacunaryStructure theta = LacunaryStructure::powers(2, 16);
  std::vector<Subject> subjects;
  for (ExampleId id : kAllExamples) subjects.push_back(example_subject(id, 1));
  for (std::uint64_t seed : {21, 22}) subjects.push_back(random_subject(seed, 1));
  const std::vector<std::pair<double, double>> orders = {{0.5, 0.5}, {0.5, 1.0}, {1.0, 1.0}};
  const std::vector<ExponentRule> rules = {ExponentRule(1.0), ExponentRule(std::vector<double>{0.5, 1.0, 2.0})};

  CheckBuilder lower("modulus-mean-above-density", "modulus-to-density");
  CheckBuilder upper("modulus-mean-below-density-bound", "density-to-modulus-bounded");
  for (const auto& s : subjects) {
    std::map<std::pair<double, double>, Series> density;  // (order, eps)
    for (double eps : {0.5, 1.0}) {
      for (double o : {0.5, 1.0}) density[{o, eps}] = series_of(StatisticKind::LacunaryDensity, s, o, eps, ExponentRule(1.0), theta);
    }
    for (const char* name : {"identity", "sqrt", "xover1px"}) {
      const ModulusFunction f = modulus_by_name(name);
      for (std::size_t ri = 0; ri < rules.size(); ++ri) {
        const ExponentRule& rule = rules[ri];
        const double h = rule.inf(), H = rule.sup();
        std::map<double, Series> mean;
        for (double o : {0.5, 1.0}) mean[o] = series_of(StatisticKind::ModulusMean, s, o, 1.0, rule, theta, f);
        for (double eps : {0.5, 1.0}) {
          const double fe = f(eps);
          const double min_f = std::min(std::pow(fe, h), std::pow(fe, H));
          const double max_f = std::max(std::pow(fe, h), std::pow(fe, H));
          for (const auto& [beta, gamma] : orders) {
            const Series& mb = mean[beta];
            const Series& dg = density[{gamma, eps}];
            const Series& db = density[{beta, eps}];
            for (int r = 1; r <= theta.r_max(); ++r) {
              const auto i = static_cast<std::size_t>(r - 1);
              const auto ctx = fmt::format("{} f={} p={} eps={} beta={} gamma={} r={}", s.label, name,
                                           ri == 0 ? "const" : "periodic", eps, beta, gamma, r);
              lower.geq(mb[i].value, dg[i].value * min_f, 1e-12, ctx);
              if (f.bounded() && beta == gamma) {
                const double K = *f.sup();
                const double max_k = std::max(std::pow(K, h), std::pow(K, H));
                const double share = static_cast<double>(theta.h(r)) / theta.h_pow(r, beta);
                upper.leq(mb[i].value, max_k * db[i].value + share * max_f, 1e-12, ctx);
              }
            }
          }
        }
      }
    }
  }
  for (CheckBuilder* b : {&axioms, &rejects, &lower, &upper}) report.checks.push_back(b->finish());
  report.notes.push_back("bounded chain uses K = sup f = 1 for x/(1+x); p_k constant 1 or periodic (0.5, 1, 2)");
  return report;
}

}  // namespace fuzzyseq::detail
