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
#include <string_view>

#include "fuzzyseq/fuzzy_number.hpp"

namespace fuzzyseq {

// Fuzzy-number literals: tri(a,b,c), trap(a,b,c,e), crisp(x), grid([[alpha,lo,hi],...]).
// Throws std::invalid_argument on malformed text or an invalid fuzzy number.
FuzzyNumber parse_fuzzy_literal(std::string_view text);

// Shortest literal that parses back to the same representation.
std::string to_literal(const FuzzyNumber& x);

}  // namespace fuzzyseq
