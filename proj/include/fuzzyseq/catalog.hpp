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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyseq/fuzzy_number.hpp"
#include "fuzzyseq/sequence.hpp"

namespace fuzzyseq {

bool is_square(Index k);
bool is_cube(Index k);

enum class IndexClass { All, Even, Odd, Square, Cube, NonSquare, NonCube };

bool in_class(IndexClass cls, Index k);
const char* to_string(IndexClass cls);
// Throws std::invalid_argument for unknown names.
IndexClass parse_index_class(std::string_view name);

// The four explicit counterexample sequences.
//   Alternating     "order-gt-one"    tri(0,1,2) at even k, tri(3,4,5) at odd k
//   GrowingPeaks    "thm-2.5-strict"  tri(k-1/2,k,k+1/2) at cubes, tri(1/2,1,3/2) otherwise
//   GrowingSupports "thm-2.7-strict"  tri(-k,0,k) at squares, tri(2,4,6) otherwise
//   BoundedCubes    "thm-2.12-strict" tri(2,3,4) at cubes, tri(5,8,11) otherwise
enum class ExampleId { Alternating, GrowingPeaks, GrowingSupports, BoundedCubes };

inline constexpr std::array<ExampleId, 4> kAllExamples = {ExampleId::Alternating, ExampleId::GrowingPeaks,
                                                          ExampleId::GrowingSupports, ExampleId::BoundedCubes};

const char* to_string(ExampleId id);
// Throws std::invalid_argument (lookup error) for unknown ids.
ExampleId parse_example_id(std::string_view name);

FuzzySequence catalog_sequence(ExampleId id);

// Index classes for which a published closed form of (Delta^m X)_k exists.
// Alternating: {Even, Odd}; the others: {NonCube} or {NonSquare}.
std::vector<IndexClass> closed_form_classes(ExampleId id);
// The class that holds all but a density-zero set of indices.
IndexClass dominant_class(ExampleId id);

// True when k .. k + m all lie in cls (for Even/Odd: k lies in cls).
bool pure_in_class(ExampleId id, IndexClass cls, int m, Index k);

// Published alpha-cut of (Delta^m X)_k, m >= 1, or nullopt when k is not in a
// pure closed-form class. Values are reproduced as published, including the
// GrowingSupports right endpoint 2^m (1 - alpha), which differs from the
// computed 2^(m+1) (1 - alpha).
std::optional<Interval> closed_form_oracle(ExampleId id, int m, Index k, double alpha);
// The same closed form as a fuzzy number, for a pure class.
FuzzyNumber closed_form_limit(ExampleId id, int m, IndexClass cls);

// Smallest k >= from such that k .. k + m all lie in cls; throws if none below 10^6.
Index first_pure_index(ExampleId id, IndexClass cls, int m, Index from = 2);

// (Delta^m X)_k computed at the first pure index of the dominant class.
FuzzyNumber dominant_limit(ExampleId id, int m);

// First-match-wins rule list with a mandatory terminal All rule.
struct SequenceRule {
  IndexClass index_class = IndexClass::All;
  FuzzyNumber value;
};

// Rules may use all/even/odd/square/cube. Throws std::invalid_argument when the
// list is empty, uses a complement class, or does not end in an All rule.
FuzzySequence rule_sequence(std::vector<SequenceRule> rules, std::string name = "rules");

}  // namespace fuzzyseq
