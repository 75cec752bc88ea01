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

// Serial block scans, kept as the oracle for the parallel kernels.

#include "fuzzyseq/kernels.hpp"

namespace fuzzyseq::reference {

std::int64_t count_at_least(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range, double eps) {
  std::int64_t count = 0;
  if (range.size() == 0) return 0;
  DifferenceCursor cursor(seq, range.first);
  for (Index k = range.first; k <= range.last; ++k) {
    if (metric_d(cursor.value(), limit) >= eps) ++count;
    if (k < range.last) cursor.advance();
  }
  return count;
}

double sum_terms(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range, const TermFn& term) {
  double sum = 0.0;
  if (range.size() == 0) return 0.0;
  DifferenceCursor cursor(seq, range.first);
  for (Index k = range.first; k <= range.last; ++k) {
    sum += term(k, metric_d(cursor.value(), limit));
    if (k < range.last) cursor.advance();
  }
  return sum;
}

std::vector<double> distances(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range) {
  std::vector<double> out;
  if (range.size() == 0) return out;
  DifferenceCursor cursor(seq, range.first);
  for (Index k = range.first; k <= range.last; ++k) {
    out.push_back(metric_d(cursor.value(), limit));
    if (k < range.last) cursor.advance();
  }
  return out;
}

}  // namespace fuzzyseq::reference
