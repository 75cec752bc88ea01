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

// fuzzyseq command-line driver.
//
//   fuzzyseq analyze --sequence order-gt-one --limit auto --beta 1 --rmax 12 --kind density
//   fuzzyseq reproduce all --out-dir reports --no-meta
//   fuzzyseq check metric --seed 42 --count 1000
//
// Exit codes: 0 pass, 1 expectation or property failure, 2 usage or config error.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fuzzyseq/estimators.hpp"
#include "fuzzyseq/experiment_spec.hpp"
#include "fuzzyseq/experiments.hpp"
#include "fuzzyseq/kernels.hpp"
#include "fuzzyseq/lacunary.hpp"
#include "fuzzyseq/literal.hpp"
#include "fuzzyseq/modulus.hpp"
#include "fuzzyseq/properties.hpp"
#include "fuzzyseq/report.hpp"
#include "fuzzyseq/verdict.hpp"

namespace {

using namespace fuzzyseq;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct AnalyzeOptions {
  std::string sequence;
  std::string limit = "auto";
  int m = 1;
  double beta = 1.0;
  std::optional<double> gamma;
  double epsilon = 1.0;
  std::string theta = "powers2";
  int r_max = 24;
  std::string kind = "density";
  std::vector<double> p{1.0};
  std::string modulus = "identity";
  bool allow_beta_gt_1 = false;
  VerdictThresholds thresholds;
  std::string output;
};

struct ReproduceOptions {
  std::string id;
  std::string out_dir = ".";
  bool no_meta = false;
};

struct CheckOptions {
  std::string target;
  std::uint64_t seed = 1;
  int count = 1000;
  std::string name;
};

void apply_thread_cap() {
  if (const char* env = std::getenv("FUZZYSEQ_THREADS")) {
    try {
      set_worker_threads(std::stoi(env));
    } catch (const std::exception&) {
      std::cerr << "fuzzyseq: ignoring non-numeric FUZZYSEQ_THREADS='" << env << "'\n";
    }
  }
}

// Opens `path` for writing, or returns std::cout when path is empty.
std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::invalid_argument(fmt::format("cannot write '{}'", path));
  return file;
}

int cmd_analyze(const AnalyzeOptions& o) {
  SequenceSpec seq;
  FuzzyNumber limit;
  OrderParams params;
  std::optional<LacunaryStructure> theta;
  std::optional<ModulusFunction> modulus;
  StatisticKind kind{};
  try {
    seq = parse_sequence_arg(o.sequence);
    if (o.m < 0) throw std::invalid_argument("--m must be non-negative");
    if (o.r_max < 1) throw std::invalid_argument("--rmax must be positive");
    kind = parse_statistic_kind(o.kind);
    params.beta = o.beta;
    params.gamma = o.gamma;
    params.epsilon = o.epsilon;
    params.m = o.m;
    params.allow_beta_gt_1 = o.allow_beta_gt_1;
    params.p = o.p.size() == 1 ? ExponentRule(o.p.front()) : ExponentRule(o.p);
    params.validate();
    theta = parse_theta(o.theta, o.r_max);
    if (kind == StatisticKind::ModulusMean) modulus = modulus_by_name(o.modulus);
    limit = resolve_limit(o.limit, seq, o.m).value;
  } catch (const std::exception& e) {
    std::cerr << "fuzzyseq analyze: " << e.what() << "\n";
    return kExitUsage;
  }

  const FuzzySequence x = seq.build();
  const int r_max = theta->r_max();
  const auto series = statistic_series(kind, x, limit, params, *theta, r_max, modulus);

  std::ofstream file;
  std::ostream* out = nullptr;
  try {
    out = &open_output(o.output, file);
  } catch (const std::exception& e) {
    std::cerr << "fuzzyseq analyze: " << e.what() << "\n";
    return kExitUsage;
  }

  *out << "r,k_r,h_r,kind,value,verdict\n";
  for (const auto& row : series) {
    *out << fmt::format("{},{},{},{},{},\n", row.r, row.k_r, row.h_r, to_string(row.kind), row.value);
  }
  if (series.size() < 8) {
    *out << fmt::format("verdict,,,{},,{}\n", to_string(kind), to_string(VerdictKind::Inconclusive));
    std::cerr << "fuzzyseq analyze: fewer than 8 rows, no verdict\n";
    return kExitPass;
  }
  const Verdict v = verdict(series, o.thresholds);
  *out << fmt::format("verdict,,,{},{},{}\n", to_string(kind), series.back().value, to_string(v.kind));
  std::cerr << fmt::format("limit {} | head max {} tail [{}, {}] slope {} over {} points\n", to_literal(limit),
                           v.head_max, v.tail_min, v.tail_max, v.slope, v.fitted_points);
  return kExitPass;
}

bool write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  file << text;
  return static_cast<bool>(file);
}

int cmd_reproduce(const ReproduceOptions& o) {
  std::vector<std::string> ids;
  if (o.id == "all") {
    ids = experiment_ids();
  } else if (is_experiment_id(o.id)) {
    ids.push_back(o.id);
  } else {
    std::cerr << "fuzzyseq reproduce: unknown experiment '" << o.id << "'; known:";
    for (const auto& id : experiment_ids()) std::cerr << " " << id;
    std::cerr << "\n";
    return kExitUsage;
  }

  std::error_code ec;
  std::filesystem::create_directories(o.out_dir, ec);
  if (ec) {
    std::cerr << "fuzzyseq reproduce: cannot create '" << o.out_dir << "': " << ec.message() << "\n";
    return kExitUsage;
  }

  bool failed = false;
  for (const auto& id : ids) {
    const Report report = run_catalog_experiment(id);
    const std::filesystem::path base = std::filesystem::path(o.out_dir) / id;
    const bool ok = write_file(base.string() + ".json", to_json(report, !o.no_meta)) &&
                    write_file(base.string() + ".csv", to_csv(report, !o.no_meta));
    if (!ok) {
      std::cerr << "fuzzyseq reproduce: cannot write reports under '" << o.out_dir << "'\n";
      return kExitUsage;
    }
    std::size_t failed_checks = 0;
    for (const auto& c : report.checks) failed_checks += c.pass() ? 0 : 1;
    std::size_t failed_cells = 0;
    for (const auto& c : report.cells) failed_cells += c.outcome == Outcome::Fail ? 1 : 0;
    std::string line = fmt::format("{}: {} ({} cells, {} failed; {} checks, {} failed)", id, to_string(report.outcome),
                                   report.cells.size(), failed_cells, report.checks.size(), failed_checks);
    if (!o.no_meta) line += fmt::format(" in {:.2f} s", report.meta.seconds);
    std::cout << line << "\n";
    for (const auto& c : report.checks) {
      if (!c.pass()) std::cout << "  " << c.name << ": " << c.detail << "\n";
    }
    for (const auto& c : report.cells) {
      if (c.outcome == Outcome::Fail)
        std::cout << "  " << c.cell.key << ": expected " << c.expected << ", got "
                  << (c.verdict ? to_string(c.verdict->kind) : "none") << (c.error.empty() ? "" : " " + c.error)
                  << "\n";
    }
    failed = failed || report.outcome == Outcome::Fail;
  }
  return failed ? kExitFail : kExitPass;
}

int cmd_check(const CheckOptions& o) {
  std::cout << "seed " << o.seed << "\n";
  if (o.target == "modulus") {
    std::vector<std::string> names;
    if (o.name.empty()) {
      names = {"identity", "sqrt", "xover1px"};
    } else {
      names.push_back(o.name);
    }
    bool ok = true;
    for (const auto& name : names) {
      std::optional<ModulusFunction> f;
      try {
        f = modulus_by_name(name);
      } catch (const std::exception& e) {
        std::cerr << "fuzzyseq check: " << e.what() << "\n";
        return kExitUsage;
      }
      const ModulusReport r = check_modulus(*f, o.count);
      if (r.ok) {
        std::cout << fmt::format("{}: pass ({} pairs, {})\n", name, r.pairs_checked, r.bounded ? "bounded" : "unbounded");
      } else {
        std::cout << fmt::format("{}: fail {} witness ({}, {}): {}\n", name, to_string(r.axiom), r.x, r.y, r.message);
        ok = false;
      }
    }
    return ok ? kExitPass : kExitFail;
  }

  SuiteResult r;
  if (o.target == "metric") {
    r = run_metric_suite(o.seed, o.count);
  } else if (o.target == "fuzzy-axioms") {
    r = run_fuzzy_axiom_suite(o.seed, o.count);
  } else {
    std::cerr << "fuzzyseq check: unknown target '" << o.target << "'\n";
    return kExitUsage;
  }
  if (r.ok) {
    std::cout << fmt::format("{}: pass ({} cases)\n", o.target, r.cases);
    return kExitPass;
  }
  std::cout << fmt::format("{}: fail {} after {} cases\nwitness: {}\n", o.target, r.property, r.cases, r.witness);
  return kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy-number sequences: lacunary statistical convergence and strong summability of order beta"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Evaluate one estimator series and its verdict");
  a->add_option("--sequence", analyze.sequence, "Example id or JSON rule list")->required();
  a->add_option("--limit", analyze.limit, "Fuzzy literal, auto, oracle or class:<name>")->capture_default_str();
  a->add_option("--m", analyze.m, "Difference order")->capture_default_str();
  a->add_option("--beta", analyze.beta, "Order beta")->capture_default_str();
  a->add_option("--gamma", analyze.gamma, "Order gamma (beta <= gamma <= 1)");
  a->add_option("--epsilon", analyze.epsilon, "Exceedance threshold")->capture_default_str();
  a->add_option("--theta", analyze.theta, "powers2, powers:<b>, explicit:0,... or JSON")->capture_default_str();
  a->add_option("--rmax", analyze.r_max, "Number of blocks")->capture_default_str();
  a->add_option("--kind", analyze.kind, "density, strong, cesaro, prefix or modulus")->capture_default_str();
  a->add_option("--p", analyze.p, "Exponent p, or a periodic list p_1 p_2 ...")->capture_default_str();
  a->add_option("--modulus", analyze.modulus, "identity, sqrt, xover1px, xsq or pow:<p>")->capture_default_str();
  a->add_flag("--allow-beta-gt-1", analyze.allow_beta_gt_1, "Permit beta > 1");
  a->add_option("--zero-threshold", analyze.thresholds.zero, "Tail values below this count as zero")
      ->capture_default_str();
  a->add_option("--growth", analyze.thresholds.growth, "Growing when tail min exceeds this times head max")
      ->capture_default_str();
  a->add_option("--flat-slope", analyze.thresholds.flat_slope, "Log-log slope band read as flat")
      ->capture_default_str();
  a->add_option("-o,--output", analyze.output, "Write the table here instead of standard output");

  ReproduceOptions reproduce;
  auto* r = app.add_subcommand("reproduce", "Run catalog experiments and write JSON and CSV reports");
  r->add_option("id", reproduce.id, "Experiment id or 'all'")->required();
  r->add_option("--out-dir", reproduce.out_dir, "Report directory")->capture_default_str();
  r->add_flag("--no-meta", reproduce.no_meta, "Omit timestamps and timings from reports");

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Run a seeded property suite");
  c->add_option("target", check.target, "metric, modulus or fuzzy-axioms")->required();
  c->add_option("--seed", check.seed, "Random seed")->capture_default_str();
  c->add_option("--count", check.count, "Cases (modulus: sample pairs)")->capture_default_str();
  c->add_option("--name", check.name, "Modulus function to check (default: all valid ones)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  apply_thread_cap();
  try {
    if (*a) return cmd_analyze(analyze);
    if (*r) return cmd_reproduce(reproduce);
    if (check.target == "modulus" && c->count("--count") == 0) check.count = 10000;
    return cmd_check(check);
  } catch (const std::exception& e) {
    std::cerr << "fuzzyseq: " << e.what() << "\n";
    return kExitFail;
  }
}
