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

#include "fuzzyseq/sequence.hpp"

#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace fuzzyseq {

FuzzySequence::FuzzySequence(Generator generator, std::string name)
    : generator_(std::make_shared<const Generator>(std::move(generator))), name_(std::move(name)) {
  if (!*generator_) throw std::invalid_argument("FuzzySequence: empty generator");
}

FuzzySequence::FuzzySequence(std::shared_ptr<const Generator> g, int order, std::string name)
    : generator_(std::move(g)), order_(order), name_(std::move(name)) {}

FuzzySequence FuzzySequence::constant(const FuzzyNumber& value, std::string name) {
  return FuzzySequence([value](Index) { return value; }, std::move(name));
}

FuzzyNumber FuzzySequence::base_at(Index k) const {
  if (k < 1) throw std::out_of_range(fmt::format("sequence index {} is not >= 1", k));
  return (*generator_)(k);
}

FuzzyNumber FuzzySequence::at(Index k) const {
  if (k < 1) throw std::out_of_range(fmt::format("sequence index {} is not >= 1", k));
  if (order_ == 0) return (*generator_)(k);
  return DifferenceCursor(*this, k).value();
}

FuzzySequence FuzzySequence::differenced(int m) const {
  if (m < 0) throw std::invalid_argument("difference order must be >= 0");
  if (m == 0) return *this;
  return FuzzySequence(generator_, order_ + m, name_);
}

FuzzySequence difference(const FuzzySequence& x, int m) { return x.differenced(m); }

FuzzySequence add(const FuzzySequence& x, const FuzzySequence& y) {
  return FuzzySequence([x, y](Index k) { return add(x.at(k), y.at(k)); }, x.name() + "+" + y.name());
}

FuzzySequence scale(double c, const FuzzySequence& x) {
  return FuzzySequence([c, x](Index k) { return scalar_mul(c, x.at(k)); }, fmt::format("{}*{}", c, x.name()));
}

DifferenceCursor::DifferenceCursor(const FuzzySequence& seq, Index first)
    : generator_(&seq.generator()), index_(first), next_base_(first) {
  if (first < 1) throw std::out_of_range(fmt::format("sequence index {} is not >= 1", first));
  diagonal_.resize(static_cast<std::size_t>(seq.order()) + 1);
  for (int j = 0; j <= seq.order(); ++j) feed((*generator_)(next_base_++));
}

void DifferenceCursor::feed(FuzzyNumber x) {
  // new[j] = old[j-1] - new[j-1]
  FuzzyNumber carry = std::move(x);
  for (std::size_t j = 0; j < diagonal_.size(); ++j) {
    FuzzyNumber old = std::move(diagonal_[j]);
    diagonal_[j] = std::move(carry);
    if (j + 1 < diagonal_.size()) carry = sub(old, diagonal_[j]);
  }
}

void DifferenceCursor::advance() {
  feed((*generator_)(next_base_++));
  ++index_;
}

}  // namespace fuzzyseq
