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

#include "fuzzyseq/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace fuzzyseq {

namespace {

int g_default_threads = 0;

// Fills out[i] = transform(first + i, d_{first + i}) for i < out.size(), in parallel over fixed chunks.
template <class Transform>
void fill_window(const FuzzySequence& seq, const FuzzyNumber& limit, Index first, std::vector<double>& out,
                 Transform transform) {
  const auto n = static_cast<Index>(out.size());
  const Index chunks = (n + kernels::kChunk - 1) / kernels::kChunk;
#pragma omp parallel for schedule(static)
  for (Index c = 0; c < chunks; ++c) {
    const Index lo = c * kernels::kChunk;
    const Index hi = std::min(n, lo + kernels::kChunk);
    DifferenceCursor cursor(seq, first + lo);
    for (Index i = lo; i < hi; ++i) {
      out[static_cast<std::size_t>(i)] = transform(first + i, metric_d(cursor.value(), limit));
      if (i + 1 < hi) cursor.advance();
    }
  }
}

template <class Transform, class Consume>
void scan(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range, Transform transform, Consume consume) {
  std::vector<double> buffer;
  for (Index start = range.first; start <= range.last; start += kernels::kWindow) {
    const Index stop = std::min(range.last, start + kernels::kWindow - 1);
    buffer.resize(static_cast<std::size_t>(stop - start + 1));
    fill_window(seq, limit, start, buffer, transform);
    for (double v : buffer) consume(v);
  }
}

}  // namespace

namespace kernels {

std::int64_t count_at_least(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range, double eps) {
  std::int64_t count = 0;
  scan(
      seq, limit, range, [eps](Index, double d) { return d >= eps ? 1.0 : 0.0; },
      [&count](double v) { count += v != 0.0; });
  return count;
}

double sum_terms(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range, const TermFn& term) {
  double sum = 0.0;
  scan(seq, limit, range, term, [&sum](double v) { sum += v; });
  return sum;
}

std::vector<double> distances(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(range.size()));
  scan(
      seq, limit, range, [](Index, double d) { return d; }, [&out](double v) { out.push_back(v); });
  return out;
}

}  // namespace kernels

void set_worker_threads(int n) {
  if (g_default_threads == 0) g_default_threads = omp_get_max_threads();
  omp_set_num_threads(n > 0 ? n : g_default_threads);
}

int worker_threads() { return omp_get_max_threads(); }

}  // namespace fuzzyseq
