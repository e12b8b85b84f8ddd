// Copyright 2026 The Dynconn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dynconn: run traces, generate workloads and run Monte Carlo experiments.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dynconn/connectivity.h"
#include "dynconn/errors.h"
#include "dynconn/harness/experiments.h"
#include "dynconn/harness/runner.h"
#include "dynconn/harness/trace.h"
#include "dynconn/harness/workload.h"

namespace {

using namespace dynconn;
using namespace dynconn::harness;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitThreshold = 2;

const std::map<std::string, VerifyMode> kModes = {
    {"sublinear", VerifyMode::kSketch}, {"edge-list", VerifyMode::kEdgeList}};
const std::map<std::string, SearchScan> kScans = {
    {"first", SearchScan::kFirstNonzero}, {"all", SearchScan::kAllLevels}};

struct EngineFlags {
  std::size_t n = 0;
  std::uint64_t seed = 1;
  double c = 1.0;
  std::string top;
  std::optional<std::size_t> tag_pairs;
  VerifyMode mode = VerifyMode::kSketch;
  SearchScan scan = SearchScan::kFirstNonzero;

  void add_to(CLI::App* app, bool with_n) {
    if (with_n) app->add_option("--n", n, "Vertex count");
    app->add_option("--seed", seed, "Random seed");
    app->add_option("--c", c, "Failure exponent c (error < 1/n^c)")
        ->check(CLI::PositiveNumber);
    app->add_option("--top", top, "Tier count: an integer or 'theoretical'");
    app->add_option("--tag-pairs", tag_pairs, "Tag pairs per sketch level");
    app->add_option("--mode", mode, "Verification mode")
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
    app->add_option("--search-scan", scan,
                    "Search levels after a rejected candidate")
        ->transform(CLI::CheckedTransformer(kScans, CLI::ignore_case));
  }

  ConnectivityConfig config(std::size_t vertices) const {
    ConnectivityConfig cfg = ConnectivityConfig::defaults(vertices, mode, seed, c);
    if (top == "theoretical") {
      cfg.top = theoretical_top(vertices, c);
    } else if (!top.empty()) {
      std::size_t pos = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(top, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != top.size()) {
        throw ParameterError("--top must be an integer or 'theoretical'");
      }
      cfg.top = value;
    }
    if (tag_pairs) cfg.tag_pairs = *tag_pairs;
    cfg.scan = scan;
    cfg.validate();
    return cfg;
  }
};

// Writes to `path`, or standard output when it is empty or "-".
template <typename Fn>
void emit(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open " + path + " for writing");
  fn(out);
}

Trace read_trace(const std::string& path) {
  if (path.empty() || path == "-") return parse_trace(std::cin);
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open trace " + path);
  return parse_trace(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic connectivity trace harness"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "Execute a trace");
  EngineFlags run_flags;
  run_flags.add_to(run_cmd, true);
  std::string trace_path, report_path;
  bool verify = false, two_edge = false, answers_only = false;
  double max_rate = 0.01;
  run_cmd->add_option("--trace", trace_path, "Trace file ('-' for stdin)");
  run_cmd->add_option("--report", report_path, "Report file (default stdout)");
  run_cmd->add_flag("--verify", verify, "Shadow an exact oracle");
  run_cmd->add_flag("--two-edge", two_edge, "Enable 2-edge queries");
  run_cmd->add_flag("--answers-only", answers_only, "Print only Y/N lines");
  run_cmd->add_option("--max-mismatch-rate", max_rate,
                      "Exit 2 when verification exceeds this rate")
      ->check(CLI::Range(0.0, 1.0));

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a workload trace");
  std::string kind_name = "random-evolve", query_name = "connectivity";
  WorkloadParams wp;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen_cmd->add_option("kind", kind_name,
                      "random-evolve | path-churn | clique-bridge | mixed");
  gen_cmd->add_option("--n", wp.n, "Vertex count");
  gen_cmd->add_option("--seed", gen_seed, "Random seed");
  gen_cmd->add_option("--updates", wp.updates, "Update count");
  gen_cmd->add_option("--queries", wp.queries, "Query count");
  gen_cmd->add_option("--insert-prob", wp.insert_prob,
                      "random-evolve insert probability");
  gen_cmd->add_option("--query-kind", query_name,
                      "connectivity | two-edge | both");
  gen_cmd->add_option("--clique", wp.clique, "clique-bridge clique size");
  gen_cmd->add_option("--segment", wp.segment, "mixed segment length");
  gen_cmd->add_option("--trace", gen_out, "Output file (default stdout)");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo estimate");
  std::string exp_name;
  ExperimentParams ep;
  std::optional<std::size_t> exp_tags;
  double exp_c = 1.0;
  std::string exp_report;
  std::optional<double> at_least, at_most;
  exp_cmd->add_option("name", exp_name,
                      "odd-hash | isolation | search-rate | tier-contraction | "
                      "false-accept")
      ->required();
  exp_cmd->add_option("--trials", ep.trials, "Trial count (>= 100)");
  exp_cmd->add_option("--seed", ep.seed, "Random seed");
  exp_cmd->add_option("--n", ep.n, "Vertex count");
  exp_cmd->add_option("--c", exp_c, "Failure exponent for default tag pairs")
      ->check(CLI::PositiveNumber);
  exp_cmd->add_option("--set-size", ep.set_size, "|S|, |W| or |C|");
  exp_cmd->add_option("--width", ep.width, "odd-hash universe bits");
  exp_cmd->add_option("--side", ep.side, "search-rate |T|");
  exp_cmd->add_option("--edges", ep.edges, "tier-contraction edge count");
  exp_cmd->add_option("--mode", ep.mode, "Verification mode")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  exp_cmd->add_option("--tag-pairs", exp_tags, "Tag pairs per sketch level");
  exp_cmd->add_option("--report", exp_report, "Report file (default stdout)");
  exp_cmd->add_option("--expect-at-least", at_least,
                      "Exit 2 when the estimate is lower");
  exp_cmd->add_option("--expect-at-most", at_most,
                      "Exit 2 when the estimate is higher");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run_cmd) {
      const Trace trace = read_trace(trace_path);
      if (run_flags.n != 0 && run_flags.n != trace.n) {
        throw ParameterError("--n disagrees with the trace header");
      }
      const RunOptions options{run_flags.config(trace.n), verify, two_edge};
      const RunReport report = run(options, trace);
      emit(report_path, [&](std::ostream& out) {
        answers_only ? write_answers(out, report) : write_report(out, report);
      });
      if (verify) {
        const bool unsound = options.config.mode == VerifyMode::kEdgeList &&
                             report.false_yes > 0;
        if (unsound || report.mismatch_rate() > max_rate) {
          std::cerr << "verification failed: " << report.mismatches.size()
                    << " mismatches (" << report.false_yes
                    << " wrong yes) over " << report.answers.size()
                    << " queries\n";
          return kExitThreshold;
        }
      }
      return kExitOk;
    }
    if (*gen_cmd) {
      const auto kind = parse_workload_kind(kind_name);
      if (!kind) throw ParameterError("unknown workload '" + kind_name + "'");
      const auto qk = parse_query_kind(query_name);
      if (!qk) throw ParameterError("unknown query kind '" + query_name + "'");
      wp.query_kind = *qk;
      const Trace trace = gen_workload(*kind, wp, gen_seed);
      emit(gen_out, [&](std::ostream& out) { write_trace(out, trace); });
      return kExitOk;
    }
    const auto kind = parse_experiment_kind(exp_name);
    if (!kind) throw ParameterError("unknown experiment '" + exp_name + "'");
    ep.tag_pairs = exp_tags ? *exp_tags
                   : ep.mode == VerifyMode::kSketch ? default_tag_pairs(ep.n, exp_c)
                                                    : 0;
    const Estimate est = run_experiment(*kind, ep);
    emit(exp_report, [&](std::ostream& out) { write_estimate(out, est, ep); });
    if ((at_least && est.estimate() < *at_least) ||
        (at_most && est.estimate() > *at_most)) {
      std::cerr << "estimate " << est.estimate() << " outside expected range\n";
      return kExitThreshold;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const TraceError& e) {
    std::cerr << "invalid trace: " << e.what() << '\n';
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
