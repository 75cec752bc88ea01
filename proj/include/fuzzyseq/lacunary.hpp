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

#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzyseq/sequence.hpp"

namespace fuzzyseq {

// Integer range first..last, both inclusive.
struct IndexRange {
  Index first = 1;
  Index last = 0;

  Index size() const { return last >= first ? last - first + 1 : 0; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

class LacunaryError : public std::invalid_argument {
 public:
  LacunaryError(const std::string& what, int r) : std::invalid_argument(what), r_(r) {}
  // Offending block index.
  int r() const { return r_; }

 private:
  int r_;
};

// What to do when block lengths h_r decrease somewhere in the validated prefix.
enum class ShrinkPolicy { Warn, Reject };

// theta = (k_r) with k_0 = 0, blocks I_r = (k_{r-1}, k_r], h_r = k_r - k_{r-1},
// q_r = k_r / k_{r-1} (r >= 2). Only a finite prefix r = 0..r_max is held;
// non-decreasing h_r over that prefix stands in for h_r -> infinity.
class LacunaryStructure {
 public:
  // k_r = base^r for r >= 1. Throws LacunaryError on base < 2 or overflow.
  static LacunaryStructure powers(Index base, int r_max);
  // Terms k_0 .. k_R. Throws LacunaryError naming r for k_0 != 0 or a
  // non-increasing step, and for shrinking h_r under ShrinkPolicy::Reject.
  static LacunaryStructure from_terms(std::vector<Index> terms, ShrinkPolicy policy = ShrinkPolicy::Warn);

  int r_max() const { return static_cast<int>(terms_.size()) - 1; }
  // r in 0..r_max
  Index k(int r) const;
  // r in 1..r_max
  Index h(int r) const;
  // r in 2..r_max
  double q(int r) const;
  // exp(beta ln h_r)
  double h_pow(int r, double beta) const;

  // Throws std::out_of_range outside 1..r_max.
  IndexRange block(int r) const;

  const std::vector<Index>& terms() const { return terms_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::string& label() const { return label_; }

 private:
  LacunaryStructure(std::vector<Index> terms, ShrinkPolicy policy, std::string label);
  void check_r(int r, int lowest) const;

  std::vector<Index> terms_;
  std::vector<std::string> warnings_;
  std::string label_;
};

IndexRange block_indices(const LacunaryStructure& theta, int r);

// n^beta as exp(beta ln n); exactly n when beta = 1.
double order_power(Index n, double beta);

// Finite-prefix proxies for lim inf / lim sup of q_r over r = 2..r_max.
struct RatioStats {
  double inf_q = 0.0;
  double sup_q = 0.0;
};

// Throws std::invalid_argument unless 2 <= r_max <= theta.r_max().
RatioStats ratio_stats(const LacunaryStructure& theta, int r_max);

// Theta text forms: "powers2", "powers:<base>", "explicit:0,2,6,...", or the
// JSON objects {"rule":"powers","base":b} / {"explicit":[0,...]}.
LacunaryStructure parse_theta(const std::string& text, int r_max);

}  // namespace fuzzyseq
