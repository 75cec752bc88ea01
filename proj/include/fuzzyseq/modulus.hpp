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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzyseq {

// A gauge f : [0, inf) -> [0, inf). Whether f really is a modulus is checked
// on samples by check_modulus, not at construction.
class ModulusFunction {
 public:
  ModulusFunction(std::string name, std::function<double(double)> f, bool bounded,
                  std::optional<double> sup = std::nullopt);

  double operator()(double x) const { return f_(x); }
  const std::string& name() const { return name_; }
  bool bounded() const { return bounded_; }
  // Least upper bound of f when bounded.
  std::optional<double> sup() const { return sup_; }

  static ModulusFunction identity();
  static ModulusFunction power(double p);  // x^p
  static ModulusFunction x_over_1px();     // x / (1 + x), bounded by 1
  static ModulusFunction square();         // x^2, not subadditive

 private:
  std::string name_;
  std::function<double(double)> f_;
  bool bounded_;
  std::optional<double> sup_;
};

// identity, sqrt, xover1px, xsq, or pow:<p>. Throws std::invalid_argument otherwise.
ModulusFunction modulus_by_name(std::string_view name);

enum class ModulusAxiom { ZeroOnlyAtZero, Subadditive, Increasing, RightContinuousAtZero };

const char* to_string(ModulusAxiom axiom);

struct ModulusReport {
  bool ok = true;
  bool bounded = false;
  ModulusAxiom axiom = ModulusAxiom::ZeroOnlyAtZero;
  double x = 0.0;
  double y = 0.0;
  std::string message;
  std::size_t pairs_checked = 0;
};

// Sampled axiom check: f(0) = 0 and f > 0 on samples, subadditivity on the
// integer lattice {1..10}^2 first and then on sample_count Halton(2,3) pairs
// over [0,100]^2, monotonicity along the sorted sample coordinates, and decay
// of f(10^-j), j = 1..12. Reports the first violation.
ModulusReport check_modulus(const ModulusFunction& f, int sample_count);

// Exponent sequence p_k: constant, or a periodic list (p_k = list[(k-1) % n]).
class ExponentRule {
 public:
  explicit ExponentRule(double constant = 1.0);
  explicit ExponentRule(std::vector<double> periodic);

  double at(long long k) const;
  bool is_constant() const { return values_.size() == 1; }
  // inf_k p_k and sup_k p_k (exact for the periodic rule).
  double inf() const;
  double sup() const;
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

}  // namespace fuzzyseq
