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

#ifndef DYNCONN_HARNESS_WORKLOAD_H_
#define DYNCONN_HARNESS_WORKLOAD_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "dynconn/harness/trace.h"

namespace dynconn::harness {

enum class WorkloadKind {
  kRandomEvolve,  // uniform random inserts and deletes
  kPathChurn,     // a Hamiltonian path repeatedly cut and re-linked
  kCliqueBridge,  // two cliques joined by a bridge that keeps moving
  kMixed,         // random-evolve alternating with clique-bridge segments
};

std::optional<WorkloadKind> parse_workload_kind(std::string_view name);
std::string_view workload_name(WorkloadKind kind);

enum class QueryKind { kConnectivity, kTwoEdge, kBoth };

std::optional<QueryKind> parse_query_kind(std::string_view name);

struct WorkloadParams {
  std::size_t n = 64;
  std::size_t updates = 10000;
  std::size_t queries = 1000;
  // random-evolve: probability that a step inserts rather than deletes.
  double insert_prob = 0.5;
  QueryKind query_kind = QueryKind::kConnectivity;
  // clique-bridge: clique size; 0 picks min(n / 2, 8).
  std::size_t clique = 0;
  // mixed: updates per segment; 0 picks max(1, updates / 8).
  std::size_t segment = 0;

  // Throws ParameterError.
  void validate() const;
};

// Queries are spread evenly between updates. The result always passes
// validate_trace and has exactly updates + queries operations.
Trace gen_workload(WorkloadKind kind, const WorkloadParams& params,
                   std::uint64_t seed);

}  // namespace dynconn::harness

#endif  // DYNCONN_HARNESS_WORKLOAD_H_
