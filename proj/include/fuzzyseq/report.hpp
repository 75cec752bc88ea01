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

#include "fuzzyseq/experiments.hpp"

namespace fuzzyseq {

inline constexpr std::string_view kVersion = "0.1.0";

// Column order of every CSV the tools write.
inline constexpr std::string_view kCsvHeader = "experiment,cell,r,k_r,h_r,kind,value,verdict,expected,pass";

// Quotes a field when it holds a comma, quote or newline.
std::string csv_field(std::string_view text);

// Everything except the "meta" object is a pure function of the report body,
// so two runs of the same spec serialize identically with with_meta = false.
std::string to_json(const Report& report, bool with_meta = true);

// Cell rows, then check rows and summaries, then oracle deviation rows. With
// with_meta the file starts with '#' comment lines carrying run metadata.
std::string to_csv(const Report& report, bool with_meta = true);

}  // namespace fuzzyseq
