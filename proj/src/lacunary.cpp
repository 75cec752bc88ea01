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

#include "fuzzyseq/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>
#include <json.hpp>

namespace fuzzyseq {

LacunaryStructure::LacunaryStructure(std::vector<Index> terms, ShrinkPolicy policy, std::string label)
    : terms_(std::move(terms)), label_(std::move(label)) {
  if (terms_.size() < 2) throw LacunaryError("lacunary sequence needs k_0 and at least k_1", 1);
  if (terms_[0] != 0) throw LacunaryError(fmt::format("k_0 must be 0, got {}", terms_[0]), 0);
  for (std::size_t r = 1; r < terms_.size(); ++r) {
    if (terms_[r] <= terms_[r - 1]) {
      throw LacunaryError(
          fmt::format("k_r must be strictly increasing: k_{} = {} after k_{} = {}", r, terms_[r], r - 1, terms_[r - 1]),
          static_cast<int>(r));
    }
  }
  for (int r = 2; r <= r_max(); ++r) {
    if (h(r) < h(r - 1)) {
      const std::string msg = fmt::format("block length shrinks at r = {}: h = {} after {}", r, h(r), h(r - 1));
      if (policy == ShrinkPolicy::Reject) throw LacunaryError(msg, r);
      warnings_.push_back(msg);
    }
  }
  if (r_max() >= 3 && h(r_max()) <= h(1)) {
    throw LacunaryError(fmt::format("block lengths do not grow over r = 1..{}", r_max()), r_max());
  }
}

LacunaryStructure LacunaryStructure::powers(Index base, int r_max) {
  if (base < 2) throw LacunaryError(fmt::format("powers rule needs base >= 2, got {}", base), 1);
  if (r_max < 1) throw LacunaryError("powers rule needs r_max >= 1", 1);
  std::vector<Index> terms{0};
  Index k = 1;
  for (int r = 1; r <= r_max; ++r) {
    if (k > std::numeric_limits<Index>::max() / base)
      throw LacunaryError(fmt::format("k_{} = {}^{} overflows", r, base, r), r);
    k *= base;
    terms.push_back(k);
  }
  return LacunaryStructure(std::move(terms), ShrinkPolicy::Reject, fmt::format("powers{}", base));
}

LacunaryStructure LacunaryStructure::from_terms(std::vector<Index> terms, ShrinkPolicy policy) {
  return LacunaryStructure(std::move(terms), policy, "explicit");
}

void LacunaryStructure::check_r(int r, int lowest) const {
  if (r < lowest || r > r_max())
    throw std::out_of_range(fmt::format("block index r = {} outside {}..{}", r, lowest, r_max()));
}

Index LacunaryStructure::k(int r) const {
  check_r(r, 0);
  return terms_[static_cast<std::size_t>(r)];
}

Index LacunaryStructure::h(int r) const {
  check_r(r, 1);
  return terms_[static_cast<std::size_t>(r)] - terms_[static_cast<std::size_t>(r) - 1];
}

double LacunaryStructure::q(int r) const {
  check_r(r, 2);
  return static_cast<double>(k(r)) / static_cast<double>(k(r - 1));
}

double LacunaryStructure::h_pow(int r, double beta) const {
  return order_power(h(r), beta);
}

IndexRange LacunaryStructure::block(int r) const {
  check_r(r, 1);
  return {k(r - 1) + 1, k(r)};
}

double order_power(Index n, double beta) {
  const auto x = static_cast<double>(n);
  if (beta == 1.0) return x;
  return std::exp(beta * std::log(x));
}

IndexRange block_indices(const LacunaryStructure& theta, int r) { return theta.block(r); }

RatioStats ratio_stats(const LacunaryStructure& theta, int r_max) {
  if (r_max < 2 || r_max > theta.r_max())
    throw std::invalid_argument(fmt::format("ratio_stats: r_max = {} outside 2..{}", r_max, theta.r_max()));
  RatioStats out{std::numeric_limits<double>::infinity(), 0.0};
  for (int r = 2; r <= r_max; ++r) {
    out.inf_q = std::min(out.inf_q, theta.q(r));
    out.sup_q = std::max(out.sup_q, theta.q(r));
  }
  return out;
}

namespace {

LacunaryStructure theta_from_json(const nlohmann::json& j, int r_max) {
  if (!j.is_object()) throw std::invalid_argument("theta must be a JSON object");
  if (j.contains("explicit")) {
    const auto terms = j.at("explicit").get<std::vector<Index>>();
    const bool strict = j.value("shrink", std::string("warn")) == "reject";
    return LacunaryStructure::from_terms(terms, strict ? ShrinkPolicy::Reject : ShrinkPolicy::Warn);
  }
  if (j.value("rule", std::string()) == "powers") return LacunaryStructure::powers(j.value("base", Index{2}), r_max);
  throw std::invalid_argument("theta needs either \"explicit\" or \"rule\": \"powers\"");
}

}  // namespace

LacunaryStructure parse_theta(const std::string& text, int r_max) {
  if (!text.empty() && text.front() == '{') {
    try {
      return theta_from_json(nlohmann::json::parse(text), r_max);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(fmt::format("malformed theta '{}': {}", text, e.what()));
    }
  }
  if (text.rfind("powers:", 0) == 0) return LacunaryStructure::powers(std::stoll(text.substr(7)), r_max);
  if (text.rfind("powers", 0) == 0 && text.size() > 6) return LacunaryStructure::powers(std::stoll(text.substr(6)), r_max);
  if (text.rfind("explicit:", 0) == 0) {
    std::vector<Index> terms;
    std::string rest = text.substr(9);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const std::size_t comma = rest.find(',', pos);
      terms.push_back(std::stoll(rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return LacunaryStructure::from_terms(std::move(terms));
  }
  throw std::invalid_argument(fmt::format("unknown theta spec '{}'", text));
}

}  // namespace fuzzyseq
