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
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fuzzyseq/fuzzy_number.hpp"

namespace fuzzyseq {

// 1-based term index.
using Index = std::int64_t;

// A lazily evaluated sequence (Delta^m X)_k, k >= 1.
//
// The sequence keeps the base generator X and the difference order m
// separately, so consumers scanning consecutive indices can stream the
// m-fold difference with a window of m + 1 base terms (see DifferenceCursor).
// Generators must be pure: the same k always yields the same fuzzy number.
class FuzzySequence {
 public:
  using Generator = std::function<FuzzyNumber(Index)>;

  explicit FuzzySequence(Generator generator, std::string name = "sequence");

  static FuzzySequence constant(const FuzzyNumber& value, std::string name = "constant");

  // (Delta^order X)_k; evaluates base terms k .. k + order.
  FuzzyNumber at(Index k) const;
  // X_k of the undifferenced base.
  FuzzyNumber base_at(Index k) const;

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  const Generator& generator() const { return *generator_; }

  // Same base, difference order increased by m.
  FuzzySequence differenced(int m) const;

 private:
  FuzzySequence(std::shared_ptr<const Generator> g, int order, std::string name);

  std::shared_ptr<const Generator> generator_;
  int order_ = 0;
  std::string name_;
};

// (Delta^m X), m >= 0; Delta^0 is the identity transform.
FuzzySequence difference(const FuzzySequence& x, int m);

// Term-wise combinators (the result has order 0 and evaluates operands via at()).
FuzzySequence add(const FuzzySequence& x, const FuzzySequence& y);
FuzzySequence scale(double c, const FuzzySequence& x);

// Streams (Delta^m X)_k for k = first, first + 1, ... holding the last m + 1
// diagonal entries of the difference table. Owned by a single consumer.
class DifferenceCursor {
 public:
  DifferenceCursor(const FuzzySequence& seq, Index first);

  Index index() const { return index_; }
  const FuzzyNumber& value() const { return diagonal_.back(); }
  void advance();

 private:
  void feed(FuzzyNumber x);

  const FuzzySequence::Generator* generator_;
  Index index_;
  Index next_base_;
  // diagonal_[j] = (Delta^j X)_{index_ + m - j}
  std::vector<FuzzyNumber> diagonal_;
};

}  // namespace fuzzyseq
