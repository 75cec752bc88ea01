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

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fuzzyseq {

// Closed real interval [lo, hi] with lo <= hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  // Throws std::invalid_argument when lo > hi or either bound is not finite.
  static Interval make(double lo, double hi);

  double width() const { return hi - lo; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Fuzzy number whose alpha-cuts are [a + alpha(b - a), e - alpha(e - c)].
// Triangular when b == c, crisp when all four coincide.
class Trapezoid {
 public:
  Trapezoid() = default;
  // Throws std::invalid_argument unless a <= b <= c <= e, all finite.
  Trapezoid(double a, double b, double c, double e);

  static Trapezoid triangular(double a, double b, double c) { return {a, b, b, c}; }
  static Trapezoid crisp(double x) { return {x, x, x, x}; }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double e() const { return e_; }

  double lower(double alpha) const { return a_ + alpha * (b_ - a_); }
  double upper(double alpha) const { return e_ - alpha * (e_ - c_); }

  friend bool operator==(const Trapezoid&, const Trapezoid&) = default;

 private:
  double a_ = 0.0, b_ = 0.0, c_ = 0.0, e_ = 0.0;
};

// Piecewise-linear endpoint functions sampled on 0 = alpha_0 < ... < alpha_G = 1.
//
// Construction only checks the grid structure. The fuzzy-number axioms are
// checked by validate(); FuzzyNumber::from_grid refuses grids that fail them.
class SampledGrid {
 public:
  SampledGrid(std::vector<double> alpha, std::vector<double> lo, std::vector<double> hi);

  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& lo() const { return lo_; }
  const std::vector<double>& hi() const { return hi_; }
  std::size_t size() const { return alpha_.size(); }

  // Linearly interpolated endpoints; no ordering guarantee on an unvalidated grid.
  std::pair<double, double> endpoints(double alpha) const;

  friend bool operator==(const SampledGrid&, const SampledGrid&) = default;

 private:
  std::vector<double> alpha_, lo_, hi_;
};

class FuzzyNumber {
 public:
  using Representation = std::variant<Trapezoid, SampledGrid>;

  FuzzyNumber() = default;
  FuzzyNumber(Trapezoid t) : rep_(t) {}  // NOLINT(google-explicit-constructor)

  static FuzzyNumber triangular(double a, double b, double c) { return Trapezoid::triangular(a, b, c); }
  static FuzzyNumber trapezoidal(double a, double b, double c, double e) { return Trapezoid(a, b, c, e); }
  static FuzzyNumber crisp(double x) { return Trapezoid::crisp(x); }
  // Throws std::invalid_argument carrying the validity report when the grid is not a fuzzy number.
  static FuzzyNumber from_grid(SampledGrid grid);

  bool is_trapezoid() const { return std::holds_alternative<Trapezoid>(rep_); }
  const Trapezoid* trapezoid() const { return std::get_if<Trapezoid>(&rep_); }
  const SampledGrid* grid() const { return std::get_if<SampledGrid>(&rep_); }
  const Representation& representation() const { return rep_; }

  // Representation equality; use metric_d for alpha-cut agreement across representations.
  friend bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;

 private:
  explicit FuzzyNumber(SampledGrid g) : rep_(std::move(g)) {}
  Representation rep_;
};

inline constexpr int kDefaultGridLevels = 256;

// Throws std::domain_error for alpha outside [0, 1].
Interval alpha_cut(const FuzzyNumber& x, double alpha);

FuzzyNumber add(const FuzzyNumber& x, const FuzzyNumber& y);
// [u1 - v2, v1 - u2]; not an inverse of add.
FuzzyNumber sub(const FuzzyNumber& x, const FuzzyNumber& y);
FuzzyNumber scalar_mul(double c, const FuzzyNumber& x);
// Endpoints are exact at grid points and linearly interpolated between them,
// so the interpolation error is O(levels^-2).
FuzzyNumber mul(const FuzzyNumber& x, const FuzzyNumber& y, int levels = kDefaultGridLevels);

// sup over alpha of max(|u1 - u2|, |v1 - v2|).
double metric_d(const FuzzyNumber& x, const FuzzyNumber& y);

// alpha levels of x (just {0, 1} for a trapezoid).
std::vector<double> levels_of(const FuzzyNumber& x);
// x resampled on the given levels (which must start at 0 and end at 1).
SampledGrid to_grid(const FuzzyNumber& x, const std::vector<double>& levels);
// {j / intervals : j = 0..intervals}.
std::vector<double> uniform_levels(int intervals);

enum class Axiom { Convexity, Normality, CompactSupport };

const char* to_string(Axiom axiom);

struct ValidityReport {
  bool ok = true;
  Axiom axiom = Axiom::Convexity;
  // Witness levels: the offending pair for convexity, (1, 1) for normality.
  double alpha_first = 0.0;
  double alpha_second = 0.0;
  std::string message;
};

ValidityReport validate(const SampledGrid& grid);
ValidityReport validate(const FuzzyNumber& x);

}  // namespace fuzzyseq
