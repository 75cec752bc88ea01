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

#include "fuzzyseq/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace fuzzyseq {

bool is_square(Index k) {
  if (k < 0) return false;
  using Wide = __int128;
  auto r = static_cast<Wide>(std::sqrt(static_cast<double>(k)));
  while (r * r > k) --r;
  while ((r + 1) * (r + 1) <= k) ++r;
  return r * r == k;
}

bool is_cube(Index k) {
  if (k < 0) return false;
  using Wide = __int128;
  auto r = static_cast<Wide>(std::cbrt(static_cast<double>(k)));
  while (r * r * r > k) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= k) ++r;
  return r * r * r == k;
}

bool in_class(IndexClass cls, Index k) {
  switch (cls) {
    case IndexClass::All: return true;
    case IndexClass::Even: return k % 2 == 0;
    case IndexClass::Odd: return k % 2 != 0;
    case IndexClass::Square: return is_square(k);
    case IndexClass::Cube: return is_cube(k);
    case IndexClass::NonSquare: return !is_square(k);
    case IndexClass::NonCube: return !is_cube(k);
  }
  return false;
}

const char* to_string(IndexClass cls) {
  switch (cls) {
    case IndexClass::All: return "all";
    case IndexClass::Even: return "even";
    case IndexClass::Odd: return "odd";
    case IndexClass::Square: return "square";
    case IndexClass::Cube: return "cube";
    case IndexClass::NonSquare: return "non-square";
    case IndexClass::NonCube: return "non-cube";
  }
  return "?";
}

IndexClass parse_index_class(std::string_view name) {
  for (auto cls : {IndexClass::All, IndexClass::Even, IndexClass::Odd, IndexClass::Square, IndexClass::Cube,
                   IndexClass::NonSquare, IndexClass::NonCube}) {
    if (name == to_string(cls)) return cls;
  }
  throw std::invalid_argument(fmt::format("unknown index class '{}'", name));
}

const char* to_string(ExampleId id) {
  switch (id) {
    case ExampleId::Alternating: return "order-gt-one";
    case ExampleId::GrowingPeaks: return "thm-2.5-strict";
    case ExampleId::GrowingSupports: return "thm-2.7-strict";
    case ExampleId::BoundedCubes: return "thm-2.12-strict";
  }
  return "?";
}

ExampleId parse_example_id(std::string_view name) {
  for (auto id : kAllExamples) {
    if (name == to_string(id)) return id;
  }
  throw std::invalid_argument(fmt::format("unknown example id '{}'", name));
}

FuzzySequence catalog_sequence(ExampleId id) {
  switch (id) {
    case ExampleId::Alternating:
      return FuzzySequence(
          [](Index k) { return k % 2 == 0 ? FuzzyNumber::triangular(0, 1, 2) : FuzzyNumber::triangular(3, 4, 5); },
          to_string(id));
    case ExampleId::GrowingPeaks:
      return FuzzySequence(
          [](Index k) {
            const auto x = static_cast<double>(k);
            return is_cube(k) ? FuzzyNumber::triangular(x - 0.5, x, x + 0.5) : FuzzyNumber::triangular(0.5, 1, 1.5);
          },
          to_string(id));
    case ExampleId::GrowingSupports:
      return FuzzySequence(
          [](Index k) {
            const auto x = static_cast<double>(k);
            return is_square(k) ? FuzzyNumber::triangular(-x, 0, x) : FuzzyNumber::triangular(2, 4, 6);
          },
          to_string(id));
    case ExampleId::BoundedCubes:
      return FuzzySequence(
          [](Index k) { return is_cube(k) ? FuzzyNumber::triangular(2, 3, 4) : FuzzyNumber::triangular(5, 8, 11); },
          to_string(id));
  }
  throw std::invalid_argument("unknown example id");
}

std::vector<IndexClass> closed_form_classes(ExampleId id) {
  switch (id) {
    case ExampleId::Alternating: return {IndexClass::Even, IndexClass::Odd};
    case ExampleId::GrowingSupports: return {IndexClass::NonSquare};
    case ExampleId::GrowingPeaks:
    case ExampleId::BoundedCubes: return {IndexClass::NonCube};
  }
  return {};
}

IndexClass dominant_class(ExampleId id) { return closed_form_classes(id).front(); }

bool pure_in_class(ExampleId id, IndexClass cls, int m, Index k) {
  if (id == ExampleId::Alternating) return in_class(cls, k);
  for (Index j = k; j <= k + m; ++j) {
    if (!in_class(cls, j)) return false;
  }
  return true;
}

namespace {

struct AffineCut {
  // lower = lo0 + lo1 * alpha, upper = hi0 + hi1 * alpha
  double lo0, lo1, hi0, hi1;
};

std::optional<AffineCut> closed_form(ExampleId id, int m, IndexClass cls) {
  if (m < 1) throw std::invalid_argument("closed forms are published for m >= 1 only");
  const double p = std::ldexp(1.0, m);       // 2^m
  const double half = std::ldexp(1.0, m - 1);  // 2^(m-1)
  switch (id) {
    case ExampleId::Alternating:
      if (cls == IndexClass::Even) return AffineCut{-half * 5, p, -half, -p};
      if (cls == IndexClass::Odd) return AffineCut{half, p, half * 5, -p};
      break;
    case ExampleId::GrowingPeaks:
      if (cls == IndexClass::NonCube) return AffineCut{-half, half, half, -half};
      break;
    case ExampleId::GrowingSupports:
      if (cls == IndexClass::NonSquare) return AffineCut{-2 * p, 2 * p, p, -p};
      break;
    case ExampleId::BoundedCubes:
      if (cls == IndexClass::NonCube) return AffineCut{-3 * p, 3 * p, 3 * p, -3 * p};
      break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Interval> closed_form_oracle(ExampleId id, int m, Index k, double alpha) {
  for (IndexClass cls : closed_form_classes(id)) {
    if (!pure_in_class(id, cls, m, k)) continue;
    const AffineCut f = *closed_form(id, m, cls);
    return Interval{f.lo0 + f.lo1 * alpha, f.hi0 + f.hi1 * alpha};
  }
  return std::nullopt;
}

FuzzyNumber closed_form_limit(ExampleId id, int m, IndexClass cls) {
  const auto f = closed_form(id, m, cls);
  if (!f) throw std::invalid_argument(fmt::format("no closed form for {} on class {}", to_string(id), to_string(cls)));
  return FuzzyNumber::trapezoidal(f->lo0, f->lo0 + f->lo1, f->hi0 + f->hi1, f->hi0);
}

Index first_pure_index(ExampleId id, IndexClass cls, int m, Index from) {
  for (Index k = std::max<Index>(from, 1); k < 1'000'000; ++k) {
    if (pure_in_class(id, cls, m, k)) return k;
  }
  throw std::runtime_error(fmt::format("no pure {} window of length {} for {}", to_string(cls), m + 1, to_string(id)));
}

FuzzyNumber dominant_limit(ExampleId id, int m) {
  const IndexClass cls = dominant_class(id);
  return difference(catalog_sequence(id), m).at(first_pure_index(id, cls, m));
}

FuzzySequence rule_sequence(std::vector<SequenceRule> rules, std::string name) {
  if (rules.empty()) throw std::invalid_argument("rule list is empty");
  for (const auto& rule : rules) {
    switch (rule.index_class) {
      case IndexClass::All:
      case IndexClass::Even:
      case IndexClass::Odd:
      case IndexClass::Square:
      case IndexClass::Cube: break;
      default:
        throw std::invalid_argument(fmt::format("index class '{}' is not allowed in rules", to_string(rule.index_class)));
    }
  }
  if (rules.back().index_class != IndexClass::All)
    throw std::invalid_argument("rule list must end with an \"all\" rule");
  return FuzzySequence(
      [rules = std::move(rules)](Index k) {
        for (const auto& rule : rules) {
          if (in_class(rule.index_class, k)) return rule.value;
        }
        return rules.back().value;
      },
      std::move(name));
}

}  // namespace fuzzyseq
