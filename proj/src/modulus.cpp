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

#include "fuzzyseq/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace fuzzyseq {

namespace {

double halton(std::size_t index, unsigned base) {
  double f = 1.0, r = 0.0;
  for (std::size_t i = index; i > 0; i /= base) {
    f /= base;
    r += f * static_cast<double>(i % base);
  }
  return r;
}

bool exceeds(double lhs, double rhs) { return lhs > rhs + 1e-12 * std::max(1.0, std::abs(rhs)); }

}  // namespace

ModulusFunction::ModulusFunction(std::string name, std::function<double(double)> f, bool bounded,
                                 std::optional<double> sup)
    : name_(std::move(name)), f_(std::move(f)), bounded_(bounded), sup_(sup) {
  if (!f_) throw std::invalid_argument("ModulusFunction: empty evaluator");
}

ModulusFunction ModulusFunction::identity() {
  return {"identity", [](double x) { return x; }, false};
}

ModulusFunction ModulusFunction::power(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("power modulus needs p > 0");
  if (p == 0.5) return {"sqrt", [](double x) { return std::sqrt(x); }, false};
  return {fmt::format("pow:{}", p), [p](double x) { return std::pow(x, p); }, false};
}

ModulusFunction ModulusFunction::x_over_1px() {
  return {"xover1px", [](double x) { return x / (1.0 + x); }, true, 1.0};
}

ModulusFunction ModulusFunction::square() {
  return {"xsq", [](double x) { return x * x; }, false};
}

ModulusFunction modulus_by_name(std::string_view name) {
  if (name == "identity") return ModulusFunction::identity();
  if (name == "sqrt") return ModulusFunction::power(0.5);
  if (name == "xover1px") return ModulusFunction::x_over_1px();
  if (name == "xsq") return ModulusFunction::square();
  if (name.rfind("pow:", 0) == 0) {
    const std::string tail(name.substr(4));
    char* end = nullptr;
    const double p = std::strtod(tail.c_str(), &end);
    if (!tail.empty() && end == tail.c_str() + tail.size()) return ModulusFunction::power(p);
  }
  throw std::invalid_argument(fmt::format("unknown modulus '{}'", name));
}

const char* to_string(ModulusAxiom axiom) {
  switch (axiom) {
    case ModulusAxiom::ZeroOnlyAtZero: return "zero-only-at-zero";
    case ModulusAxiom::Subadditive: return "subadditivity";
    case ModulusAxiom::Increasing: return "monotonicity";
    case ModulusAxiom::RightContinuousAtZero: return "right-continuity-at-zero";
  }
  return "?";
}

ModulusReport check_modulus(const ModulusFunction& f, int sample_count) {
  if (sample_count < 1) throw std::invalid_argument("check_modulus: sample_count must be >= 1");
  ModulusReport report;
  report.bounded = f.bounded();
  auto fail = [&](ModulusAxiom axiom, double x, double y, std::string msg) {
    report.ok = false;
    report.axiom = axiom;
    report.x = x;
    report.y = y;
    report.message = std::move(msg);
    return report;
  };

  if (f(0.0) != 0.0) return fail(ModulusAxiom::ZeroOnlyAtZero, 0.0, 0.0, fmt::format("f(0) = {}", f(0.0)));

  std::vector<std::pair<double, double>> pairs;
  for (int i = 1; i <= 10; ++i)
    for (int j = 1; j <= 10; ++j) pairs.emplace_back(i, j);
  for (int s = 1; s <= sample_count; ++s)
    pairs.emplace_back(100.0 * halton(static_cast<std::size_t>(s), 2), 100.0 * halton(static_cast<std::size_t>(s), 3));

  std::vector<double> points;
  points.reserve(pairs.size() * 2);
  for (const auto& [x, y] : pairs) {
    points.push_back(x);
    points.push_back(y);
    for (double v : {x, y}) {
      if (v > 0.0 && !(f(v) > 0.0)) return fail(ModulusAxiom::ZeroOnlyAtZero, v, 0.0, fmt::format("f({}) = {}", v, f(v)));
    }
    const double lhs = f(x + y);
    const double rhs = f(x) + f(y);
    ++report.pairs_checked;
    if (exceeds(lhs, rhs))
      return fail(ModulusAxiom::Subadditive, x, y, fmt::format("f({} + {}) = {} > f({}) + f({}) = {}", x, y, lhs, x, y, rhs));
  }

  std::sort(points.begin(), points.end());
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (f(points[i - 1]) > f(points[i]))
      return fail(ModulusAxiom::Increasing, points[i - 1], points[i],
                  fmt::format("f({}) = {} > f({}) = {}", points[i - 1], f(points[i - 1]), points[i], f(points[i])));
  }

  // f(10^-j) must keep shrinking instead of levelling off at a positive value.
  const double first = f(1e-1);
  const double last = f(1e-12);
  double prev = first;
  for (int j = 2; j <= 12; ++j) {
    const double v = f(std::pow(10.0, -j));
    if (v > prev) return fail(ModulusAxiom::Increasing, std::pow(10.0, -j), std::pow(10.0, 1 - j), "f grows toward 0");
    prev = v;
  }
  if (last > 1e-6 && last > 0.5 * first)
    return fail(ModulusAxiom::RightContinuousAtZero, 1e-12, 0.0,
                fmt::format("f(1e-12) = {} does not approach f(0) = 0", last));
  return report;
}

ExponentRule::ExponentRule(double constant) : values_{constant} {
  if (!(constant > 0.0) || !std::isfinite(constant)) throw std::invalid_argument("exponent p must be finite and > 0");
}

ExponentRule::ExponentRule(std::vector<double> periodic) : values_(std::move(periodic)) {
  if (values_.empty()) throw std::invalid_argument("exponent list is empty");
  for (double p : values_) {
    if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("exponents p_k must be finite and > 0");
  }
}

double ExponentRule::at(long long k) const {
  return values_[static_cast<std::size_t>((k - 1) % static_cast<long long>(values_.size()))];
}

double ExponentRule::inf() const { return *std::min_element(values_.begin(), values_.end()); }
double ExponentRule::sup() const { return *std::max_element(values_.begin(), values_.end()); }

}  // namespace fuzzyseq
