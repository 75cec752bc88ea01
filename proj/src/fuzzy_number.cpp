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

#include "fuzzyseq/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include <fmt/format.h>

namespace fuzzyseq {

namespace {

bool finite(double x) { return std::isfinite(x); }

std::vector<double> merge_levels(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> out;
  out.reserve(x.size() + y.size());
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

template <class Op>
FuzzyNumber combine_on_grid(const FuzzyNumber& x, const FuzzyNumber& y, std::vector<double> levels, Op op) {
  const SampledGrid gx = to_grid(x, levels);
  const SampledGrid gy = to_grid(y, levels);
  std::vector<double> lo(levels.size()), hi(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto [l, h] = op(gx.lo()[i], gx.hi()[i], gy.lo()[i], gy.hi()[i]);
    lo[i] = l;
    hi[i] = h;
  }
  return FuzzyNumber::from_grid(SampledGrid(std::move(levels), std::move(lo), std::move(hi)));
}

}  // namespace

Interval Interval::make(double lo, double hi) {
  if (!finite(lo) || !finite(hi)) throw std::invalid_argument("Interval: bounds must be finite");
  if (lo > hi) throw std::invalid_argument(fmt::format("Interval: lo {} exceeds hi {}", lo, hi));
  return Interval{lo, hi};
}

Trapezoid::Trapezoid(double a, double b, double c, double e) : a_(a), b_(b), c_(c), e_(e) {
  if (!finite(a) || !finite(b) || !finite(c) || !finite(e))
    throw std::invalid_argument("Trapezoid: parameters must be finite");
  if (!(a <= b && b <= c && c <= e))
    throw std::invalid_argument(fmt::format("Trapezoid: need a <= b <= c <= e, got ({}, {}, {}, {})", a, b, c, e));
}

SampledGrid::SampledGrid(std::vector<double> alpha, std::vector<double> lo, std::vector<double> hi)
    : alpha_(std::move(alpha)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (alpha_.size() < 2) throw std::invalid_argument("SampledGrid: need at least the levels 0 and 1");
  if (lo_.size() != alpha_.size() || hi_.size() != alpha_.size())
    throw std::invalid_argument("SampledGrid: endpoint arrays must match the level count");
  if (alpha_.front() != 0.0 || alpha_.back() != 1.0)
    throw std::invalid_argument("SampledGrid: levels must start at 0 and end at 1");
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (!finite(lo_[i]) || !finite(hi_[i])) throw std::invalid_argument("SampledGrid: endpoints must be finite");
    if (i > 0 && !(alpha_[i - 1] < alpha_[i]))
      throw std::invalid_argument("SampledGrid: levels must be strictly increasing");
  }
}

std::pair<double, double> SampledGrid::endpoints(double alpha) const {
  const auto it = std::lower_bound(alpha_.begin(), alpha_.end(), alpha);
  const auto j = static_cast<std::size_t>(it - alpha_.begin());
  if (j < alpha_.size() && alpha_[j] == alpha) return {lo_[j], hi_[j]};
  // alpha_[j - 1] < alpha < alpha_[j]
  const double t = (alpha - alpha_[j - 1]) / (alpha_[j] - alpha_[j - 1]);
  return {lo_[j - 1] + t * (lo_[j] - lo_[j - 1]), hi_[j - 1] + t * (hi_[j] - hi_[j - 1])};
}

FuzzyNumber FuzzyNumber::from_grid(SampledGrid grid) {
  const ValidityReport report = validate(grid);
  if (!report.ok) throw std::invalid_argument("not a fuzzy number: " + report.message);
  return FuzzyNumber(std::move(grid));
}

std::vector<double> uniform_levels(int intervals) {
  if (intervals < 1) throw std::invalid_argument("uniform_levels: need at least one interval");
  std::vector<double> out(static_cast<std::size_t>(intervals) + 1);
  for (int j = 0; j <= intervals; ++j) out[static_cast<std::size_t>(j)] = static_cast<double>(j) / intervals;
  return out;
}

std::vector<double> levels_of(const FuzzyNumber& x) {
  if (const auto* g = x.grid()) return g->alpha();
  return {0.0, 1.0};
}

SampledGrid to_grid(const FuzzyNumber& x, const std::vector<double>& levels) {
  std::vector<double> lo(levels.size()), hi(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Interval cut = alpha_cut(x, levels[i]);
    lo[i] = cut.lo;
    hi[i] = cut.hi;
  }
  return SampledGrid(levels, std::move(lo), std::move(hi));
}

Interval alpha_cut(const FuzzyNumber& x, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error(fmt::format("alpha_cut: level {} outside [0, 1]", alpha));
  if (const auto* t = x.trapezoid()) return Interval{t->lower(alpha), t->upper(alpha)};
  const auto [lo, hi] = x.grid()->endpoints(alpha);
  return Interval{lo, hi};
}

FuzzyNumber add(const FuzzyNumber& x, const FuzzyNumber& y) {
  const auto* tx = x.trapezoid();
  const auto* ty = y.trapezoid();
  if (tx && ty) return Trapezoid(tx->a() + ty->a(), tx->b() + ty->b(), tx->c() + ty->c(), tx->e() + ty->e());
  return combine_on_grid(x, y, merge_levels(levels_of(x), levels_of(y)),
                         [](double u1, double v1, double u2, double v2) { return std::pair{u1 + u2, v1 + v2}; });
}

FuzzyNumber sub(const FuzzyNumber& x, const FuzzyNumber& y) {
  const auto* tx = x.trapezoid();
  const auto* ty = y.trapezoid();
  if (tx && ty) return Trapezoid(tx->a() - ty->e(), tx->b() - ty->c(), tx->c() - ty->b(), tx->e() - ty->a());
  return combine_on_grid(x, y, merge_levels(levels_of(x), levels_of(y)),
                         [](double u1, double v1, double u2, double v2) { return std::pair{u1 - v2, v1 - u2}; });
}

FuzzyNumber scalar_mul(double c, const FuzzyNumber& x) {
  if (!finite(c)) throw std::invalid_argument("scalar_mul: factor must be finite");
  if (const auto* t = x.trapezoid()) {
    if (c >= 0.0) return Trapezoid(c * t->a(), c * t->b(), c * t->c(), c * t->e());
    return Trapezoid(c * t->e(), c * t->c(), c * t->b(), c * t->a());
  }
  const SampledGrid& g = *x.grid();
  std::vector<double> lo(g.size()), hi(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    lo[i] = c >= 0.0 ? c * g.lo()[i] : c * g.hi()[i];
    hi[i] = c >= 0.0 ? c * g.hi()[i] : c * g.lo()[i];
  }
  return FuzzyNumber::from_grid(SampledGrid(g.alpha(), std::move(lo), std::move(hi)));
}

FuzzyNumber mul(const FuzzyNumber& x, const FuzzyNumber& y, int levels) {
  auto grid = merge_levels(uniform_levels(levels), merge_levels(levels_of(x), levels_of(y)));
  return combine_on_grid(x, y, std::move(grid), [](double u1, double v1, double u2, double v2) {
    const double p[4] = {u1 * u2, u1 * v2, v1 * u2, v1 * v2};
    return std::pair{*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  });
}

double metric_d(const FuzzyNumber& x, const FuzzyNumber& y) {
  const auto* tx = x.trapezoid();
  const auto* ty = y.trapezoid();
  if (tx && ty) {
    // Endpoint gaps are affine in alpha, so the sup sits at alpha = 0 or 1.
    return std::max({std::abs(tx->a() - ty->a()), std::abs(tx->e() - ty->e()), std::abs(tx->b() - ty->b()),
                     std::abs(tx->c() - ty->c())});
  }
  const auto levels = merge_levels(levels_of(x), levels_of(y));
  const SampledGrid gx = to_grid(x, levels);
  const SampledGrid gy = to_grid(y, levels);
  double d = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i)
    d = std::max({d, std::abs(gx.lo()[i] - gy.lo()[i]), std::abs(gx.hi()[i] - gy.hi()[i])});
  return d;
}

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Convexity: return "convexity";
    case Axiom::Normality: return "normality";
    case Axiom::CompactSupport: return "compact-support";
  }
  return "?";
}

ValidityReport validate(const SampledGrid& grid) {
  const auto& alpha = grid.alpha();
  const auto& lo = grid.lo();
  const auto& hi = grid.hi();
  // Nestedness between adjacent levels implies it for every pair under linear interpolation.
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (lo[i] > lo[i + 1] || hi[i] < hi[i + 1]) {
      return {false, Axiom::Convexity, alpha[i], alpha[i + 1],
              fmt::format("cut({}) is not contained in cut({})", alpha[i + 1], alpha[i])};
    }
  }
  if (lo.back() > hi.back()) {
    return {false, Axiom::Normality, 1.0, 1.0, fmt::format("cut(1) = [{}, {}] is empty", lo.back(), hi.back())};
  }
  if (!finite(lo.front()) || !finite(hi.front())) {
    return {false, Axiom::CompactSupport, 0.0, 0.0, "support cut(0) is unbounded"};
  }
  return {};
}

ValidityReport validate(const FuzzyNumber& x) {
  if (const auto* g = x.grid()) return validate(*g);
  return {};
}

}  // namespace fuzzyseq
