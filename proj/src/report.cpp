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

#include "fuzzyseq/report.hpp"

#include <json.hpp>

#include <fmt/format.h>

namespace fuzzyseq {

namespace {

using ojson = nlohmann::ordered_json;

ojson rows_json(const std::vector<BlockStatistic>& rows) {
  ojson out = ojson::array();
  for (const auto& row : rows) {
    out.push_back({{"r", row.r}, {"k_r", row.k_r}, {"h_r", row.h_r}, {"kind", to_string(row.kind)}, {"value", row.value}});
  }
  return out;
}

std::string verdict_text(const CellResult& c) {
  if (!c.error.empty()) return "error";
  return c.verdict ? to_string(c.verdict->kind) : "none";
}

std::string number(double x) { return fmt::format("{}", x); }

void csv_line(std::string& out, std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (auto f : fields) {
    if (!first) out += ',';
    out += csv_field(f);
    first = false;
  }
  out += '\n';
}

}  // namespace

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_json(const Report& report, bool with_meta) {
  ojson j;
  j["experiment"] = report.experiment;
  j["outcome"] = to_string(report.outcome);
  j["claims"] = report.claims;
  ojson cells = ojson::array();
  for (const auto& c : report.cells) {
    ojson cell;
    cell["key"] = c.cell.key;
    cell["estimator"] = to_string(c.cell.kind);
    cell["order_name"] = c.cell.order_name;
    cell["order"] = c.cell.order;
    cell["p"] = c.cell.p;
    cell["epsilon"] = c.cell.epsilon;
    cell["m"] = c.cell.m;
    cell["limit"] = c.cell.limit;
    cell["limit_value"] = c.limit_literal;
    cell["expected"] = c.expected;
    if (c.verdict) {
      cell["verdict"] = {{"kind", to_string(c.verdict->kind)},  {"head_max", c.verdict->head_max},
                         {"tail_min", c.verdict->tail_min},     {"tail_max", c.verdict->tail_max},
                         {"slope", c.verdict->slope},           {"fitted_points", c.verdict->fitted_points}};
    } else {
      cell["verdict"] = nullptr;
    }
    cell["outcome"] = to_string(c.outcome);
    if (!c.error.empty()) cell["error"] = c.error;
    cell["series"] = rows_json(c.series);
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  ojson checks = ojson::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"claim", c.claim},
                      {"evaluated", c.evaluated},
                      {"violations", c.violations},
                      {"worst_margin", c.worst_margin},
                      {"pass", c.pass()},
                      {"detail", c.detail},
                      {"rows", rows_json(c.rows)}});
  }
  j["checks"] = std::move(checks);
  ojson deviations = ojson::array();
  for (const auto& d : report.deviations) {
    deviations.push_back({{"example", d.example},
                          {"m", d.m},
                          {"index_class", d.index_class},
                          {"alpha", d.alpha},
                          {"lower", d.lower},
                          {"upper", d.upper},
                          {"samples", d.samples}});
  }
  j["deviations"] = std::move(deviations);
  j["notes"] = report.notes;
  if (with_meta) {
    j["meta"] = {{"version", kVersion},
                 {"started", report.meta.started},
                 {"seconds", report.meta.seconds},
                 {"threads", report.meta.threads}};
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const Report& report, bool with_meta) {
  std::string out;
  if (with_meta) {
    out += fmt::format("# fuzzyseq {} experiment={} started={} seconds={:.3f} threads={}\n", kVersion,
                       report.experiment, report.meta.started, report.meta.seconds, report.meta.threads);
  }
  out += kCsvHeader;
  out += '\n';
  for (const auto& c : report.cells) {
    const std::string verdict = verdict_text(c);
    const char* pass = to_string(c.outcome);
    for (const auto& row : c.series) {
      csv_line(out, {report.experiment, c.cell.key, std::to_string(row.r), std::to_string(row.k_r),
                     std::to_string(row.h_r), to_string(row.kind), number(row.value), verdict, c.expected, pass});
    }
  }
  for (const auto& c : report.checks) {
    const std::string cell = "check:" + c.name;
    const char* pass = c.pass() ? "pass" : "fail";
    for (const auto& row : c.rows) {
      csv_line(out, {report.experiment, cell, std::to_string(row.r), std::to_string(row.k_r), std::to_string(row.h_r),
                     to_string(row.kind), number(row.value), "", "holds", pass});
    }
    csv_line(out, {report.experiment, cell, "", "", "", "check", number(c.worst_margin),
                   fmt::format("{}/{} violated", c.violations, c.evaluated), "holds", pass});
  }
  for (const auto& d : report.deviations) {
    const std::string cell = fmt::format("deviation:{}/m={}/{}/alpha={}", d.example, d.m, d.index_class, d.alpha);
    csv_line(out, {report.experiment, cell, "", "", "", "oracle-deviation-lower", number(d.lower), "", "", ""});
    csv_line(out, {report.experiment, cell, "", "", "", "oracle-deviation-upper", number(d.upper), "", "", ""});
  }
  return out;
}

}  // namespace fuzzyseq
