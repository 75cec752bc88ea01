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
#include <vector>

#include "fuzzyseq/fuzzy_number.hpp"
#include "fuzzyseq/lacunary.hpp"
#include "fuzzyseq/sequence.hpp"

namespace fuzzyseq {

// Contribution of index k with distance d = metric_d((Delta^m X)_k, X0).
using TermFn = std::function<double(Index k, double d)>;

// Block scans over d_k = metric_d(seq.at(k), limit), k in range.
//
// kernels:: evaluates distances in parallel (OpenMP, fixed chunks with one
// DifferenceCursor each) into a bounded window buffer and then accumulates the
// window sequentially in k. Results are therefore bit-identical to the serial
// reference:: versions and independent of the thread count.
namespace kernels {

inline constexpr Index kChunk = 4096;
inline constexpr Index kWindow = Index{1} << 18;

std::int64_t count_at_least(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range, double eps);
double sum_terms(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range, const TermFn& term);
std::vector<double> distances(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range);

}  // namespace kernels

namespace reference {

std::int64_t count_at_least(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range, double eps);
double sum_terms(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range, const TermFn& term);
std::vector<double> distances(const FuzzySequence& seq, const FuzzyNumber& limit, IndexRange range);

}  // namespace reference

// Caps OpenMP worker threads; n <= 0 restores the runtime default.
void set_worker_threads(int n);
int worker_threads();

}  // namespace fuzzyseq
