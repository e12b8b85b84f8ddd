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

#include "dynconn/harness/runner.h"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>

#include "dynconn/errors.h"
#include "dynconn/hashing.h"
#include "dynconn/oracle.h"
#include "dynconn/two_edge.h"

namespace dynconn::harness {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ns(Clock::time_point since) {
  return std::chrono::duration<double, std::nano>(Clock::now() - since).count();
}

const char* mode_name(VerifyMode mode) {
  return mode == VerifyMode::kSketch ? "sublinear" : "edge-list";
}

SpaceTally operator+(const SpaceTally& a, const SpaceTally& b) {
  return {a.sketch_words + b.sketch_words, a.aggregate_words + b.aggregate_words,
          a.forest_nodes + b.forest_nodes, a.edge_list_words + b.edge_list_words};
}

void timing_row(std::ostream& out, const char* name, const OpTiming& t) {
  const double mean = t.count ? t.total_ns / static_cast<double>(t.count) : 0.0;
  out << std::left << std::setw(8) << name << std::right << std::setw(10)
      << t.count << std::fixed << std::setprecision(3) << std::setw(14)
      << t.total_ns / 1e6 << std::setw(12) << mean / 1e3 << std::setw(12)
      << t.max_ns / 1e3 << '\n';
  out.unsetf(std::ios::floatfield);
}

}  // namespace

void OpTiming::add(double ns) {
  ++count;
  total_ns += ns;
  max_ns = std::max(max_ns, ns);
}

double RunReport::mismatch_rate() const {
  const std::size_t q = queries + two_edge_queries;
  return q == 0 ? 0.0 : static_cast<double>(mismatches.size()) / q;
}

std::uint64_t second_seed(std::uint64_t seed) {
  return SplitMix64(seed ^ 0x2ec2ec2ec2ec2ec2ULL).next();
}

RunReport run(const RunOptions& options, const Trace& trace) {
  const ConnectivityConfig& config = options.config;
  if (trace.n != config.n) {
    throw ParameterError("trace has n = " + std::to_string(trace.n) +
                         " but config has n = " + std::to_string(config.n));
  }
  validate_trace(trace);
  if (!options.two_edge) {
    for (std::size_t i = 0; i < trace.ops.size(); ++i) {
      if (trace.ops[i].kind == OpKind::kTwoEdgeQuery) {
        throw UsageError("operation " + std::to_string(i) +
                         ": 2-edge query needs the 2-edge layer");
      }
    }
  }

  RunReport report;
  report.options = options;
  std::optional<DynamicConnectivity> plain;
  std::optional<TwoEdgeConnectivity> layered;
  if (options.two_edge) {
    layered.emplace(config, config.seed, second_seed(config.seed));
  } else {
    plain.emplace(config);
  }
  DynamicConnectivity& conn = layered ? layered->first() : *plain;
  std::optional<OracleGraph> oracle;
  if (options.verify) oracle.emplace(config.n);

  report.answers.reserve(trace.query_count());
  for (std::size_t i = 0; i < trace.ops.size(); ++i) {
    const Op& op = trace.ops[i];
    const auto start = Clock::now();
    if (op.is_update()) {
      const EdgeKey e = EdgeKey::canonical(op.u, op.v);
      const bool insert = op.kind == OpKind::kInsert;
      if (layered) {
        insert ? layered->insert(e) : layered->erase(e);
      } else {
        insert ? conn.insert(e) : conn.erase(e);
      }
      (insert ? report.insert_time : report.delete_time).add(elapsed_ns(start));
      if (oracle) insert ? oracle->insert(e) : oracle->erase(e);
      ++report.updates;
      continue;
    }
    const bool two = op.kind == OpKind::kTwoEdgeQuery;
    const bool got = two ? layered->two_edge_connected(op.u, op.v)
                         : conn.connected(op.u, op.v);
    (two ? report.two_edge_time : report.query_time).add(elapsed_ns(start));
    ++(two ? report.two_edge_queries : report.queries);
    report.answers.push_back(got ? 'Y' : 'N');
    if (!oracle) continue;
    const bool want = two ? oracle->two_edge_connected(op.u, op.v)
                          : oracle->connected(op.u, op.v);
    if (got == want) continue;
    report.mismatches.push_back({i, op, got});
    if (two) {
      ++(got ? report.false_yes_two_edge : report.false_no_two_edge);
    } else {
      ++(got ? report.false_yes : report.false_no);
    }
  }
  report.space = layered ? layered->first().space() + layered->second().space()
                         : conn.space();
  return report;
}

void write_report(std::ostream& out, const RunReport& r) {
  const ConnectivityConfig& c = r.options.config;
  out << "[config]\n"
      << "n = " << c.n << '\n'
      << "mode = " << mode_name(c.mode) << '\n'
      << "top = " << c.top << '\n'
      << "tag_pairs = " << c.tag_pairs << '\n'
      << "c = " << c.c << '\n'
      << "search_scan = "
      << (c.scan == SearchScan::kFirstNonzero ? "first" : "all") << '\n'
      << "seed = " << c.seed << '\n'
      << "verify = " << (r.options.verify ? "true" : "false") << '\n'
      << "two_edge = " << (r.options.two_edge ? "true" : "false") << "\n\n";

  out << "[summary]\n"
      << "updates = " << r.updates << '\n'
      << "queries = " << r.queries << '\n'
      << "two_edge_queries = " << r.two_edge_queries << '\n';
  if (r.options.verify) {
    out << "mismatches = " << r.mismatches.size() << '\n'
        << "mismatch_rate = " << r.mismatch_rate() << '\n'
        << "false_yes = " << r.false_yes << '\n'
        << "false_no = " << r.false_no << '\n'
        << "false_yes_two_edge = " << r.false_yes_two_edge << '\n'
        << "false_no_two_edge = " << r.false_no_two_edge << '\n';
  }
  out << '\n';

  out << "[timing]\n"
      << "# class       count      total_ms     mean_us      max_us\n";
  timing_row(out, "insert", r.insert_time);
  timing_row(out, "delete", r.delete_time);
  timing_row(out, "query", r.query_time);
  timing_row(out, "query2", r.two_edge_time);
  out << '\n';

  out << "[space]\n"
      << "sketch_words = " << r.space.sketch_words << '\n'
      << "aggregate_words = " << r.space.aggregate_words << '\n'
      << "forest_nodes = " << r.space.forest_nodes << '\n'
      << "edge_list_words = " << r.space.edge_list_words << "\n\n";

  if (r.options.verify) {
    out << "[mismatches]\n# op kind u v got\n";
    for (const Mismatch& m : r.mismatches) {
      out << m.op_index << ' ' << static_cast<char>(m.op.kind) << ' ' << m.op.u
          << ' ' << m.op.v << ' ' << (m.got ? 'Y' : 'N') << '\n';
    }
    out << '\n';
  }

  out << "[answers]\n";
  write_answers(out, r);
}

void write_answers(std::ostream& out, const RunReport& r) {
  for (char a : r.answers) out << a << '\n';
}

}  // namespace dynconn::harness
