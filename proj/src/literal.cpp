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

#include "fuzzyseq/literal.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

namespace fuzzyseq {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view token, std::string_view literal) {
  const std::string s(trim(token));
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw std::invalid_argument(fmt::format("malformed number '{}' in fuzzy literal '{}'", s, literal));
  return v;
}

std::vector<double> parse_args(std::string_view body, std::string_view literal) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    out.push_back(parse_real(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start), literal));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

FuzzyNumber parse_fuzzy_literal(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t open = s.find('(');
  if (open == std::string_view::npos || s.back() != ')')
    throw std::invalid_argument(fmt::format("malformed fuzzy literal '{}'", text));
  const std::string_view head = trim(s.substr(0, open));
  const std::string_view body = s.substr(open + 1, s.size() - open - 2);

  if (head == "grid") {
    nlohmann::json rows;
    try {
      rows = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(fmt::format("malformed grid literal '{}': {}", text, e.what()));
    }
    if (!rows.is_array()) throw std::invalid_argument("grid literal must hold an array of [alpha,lo,hi] rows");
    std::vector<double> alpha, lo, hi;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != 3 || !row[0].is_number() || !row[1].is_number() || !row[2].is_number())
        throw std::invalid_argument("grid literal rows must be [alpha,lo,hi] numbers");
      alpha.push_back(row[0].get<double>());
      lo.push_back(row[1].get<double>());
      hi.push_back(row[2].get<double>());
    }
    return FuzzyNumber::from_grid(SampledGrid(std::move(alpha), std::move(lo), std::move(hi)));
  }

  const std::vector<double> args = parse_args(body, text);
  if (head == "tri" && args.size() == 3) return FuzzyNumber::triangular(args[0], args[1], args[2]);
  if (head == "trap" && args.size() == 4) return FuzzyNumber::trapezoidal(args[0], args[1], args[2], args[3]);
  if (head == "crisp" && args.size() == 1) return FuzzyNumber::crisp(args[0]);
  throw std::invalid_argument(fmt::format("unknown fuzzy literal form '{}'", text));
}

std::string to_literal(const FuzzyNumber& x) {
  if (const auto* t = x.trapezoid()) {
    if (t->a() == t->b() && t->b() == t->c() && t->c() == t->e()) return fmt::format("crisp({})", t->a());
    if (t->b() == t->c()) return fmt::format("tri({},{},{})", t->a(), t->b(), t->e());
    return fmt::format("trap({},{},{},{})", t->a(), t->b(), t->c(), t->e());
  }
  const SampledGrid& g = *x.grid();
  std::string out = "grid([";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ',';
    out += fmt::format("[{},{},{}]", g.alpha()[i], g.lo()[i], g.hi()[i]);
  }
  return out + "])";
}

}  // namespace fuzzyseq
