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
#include <vector>

#include "fuzzyseq/experiments.hpp"

// Catalog experiments made of per-block inequality suites rather than a grid.
namespace fuzzyseq::detail {

std::vector<std::string> inclusion_claims();
std::vector<std::string> theta_claims();
std::vector<std::string> uniqueness_claims();
std::vector<std::string> modulus_claims();

Report run_inclusions();
Report run_theta_conditions();
Report run_uniqueness();
Report run_modulus();

}  // namespace fuzzyseq::detail
