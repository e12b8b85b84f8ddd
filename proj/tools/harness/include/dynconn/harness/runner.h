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

#ifndef DYNCONN_HARNESS_RUNNER_H_
#define DYNCONN_HARNESS_RUNNER_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dynconn/connectivity.h"
#include "dynconn/harness/trace.h"

namespace dynconn::harness {

struct RunOptions {
  ConnectivityConfig config;
  bool verify = false;
  bool two_edge = false;
};

struct Mismatch {
  std::size_t op_index;
  Op op;
  bool got;
};

struct OpTiming {
  std::size_t count = 0;
  double total_ns = 0;
  double max_ns = 0;

  void add(double ns);
};

struct RunReport {
  RunOptions options;
  std::size_t updates = 0;
  std::size_t queries = 0;
  std::size_t two_edge_queries = 0;
  // One 'Y' or 'N' per query, in trace order.
  std::string answers;
  std::vector<Mismatch> mismatches;
  // Wrong "yes" / wrong "no" answers, connectivity and 2-edge separately.
  std::size_t false_yes = 0;
  std::size_t false_no = 0;
  std::size_t false_yes_two_edge = 0;
  std::size_t false_no_two_edge = 0;
  OpTiming insert_time, delete_time, query_time, two_edge_time;
  SpaceTally space;

  double mismatch_rate() const;
};

// Derived seed for the second connectivity engine of the 2-edge layer.
std::uint64_t second_seed(std::uint64_t seed);

// Throws TraceError if the trace is not applicable, ParameterError if the
// trace and config disagree on n, and UsageError on a 2-edge query without
// the 2-edge layer.
RunReport run(const RunOptions& options, const Trace& trace);

// Sections [config], [summary], [timing], [space], [mismatches], [answers].
void write_report(std::ostream& out, const RunReport& report);
void write_answers(std::ostream& out, const RunReport& report);

}  // namespace dynconn::harness

#endif  // DYNCONN_HARNESS_RUNNER_H_
