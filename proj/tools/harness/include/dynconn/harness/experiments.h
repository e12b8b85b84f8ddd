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

#ifndef DYNCONN_HARNESS_EXPERIMENTS_H_
#define DYNCONN_HARNESS_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "dynconn/cutset.h"

namespace dynconn::harness {

enum class ExperimentKind {
  kOddHash,          // P[f(S) is odd] for a fixed set S
  kIsolation,        // P[some level holds exactly one element of W]
  kSearchRate,       // P[Search(T) returns a crossing edge]
  kTierContraction,  // P[successful searches >= (p/2) * fragments] per tier
  kFalseAccept,      // P[tags accept the XOR of two distinct names]
};

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name);
std::string_view experiment_name(ExperimentKind kind);

inline constexpr std::size_t kMinTrials = 100;

struct ExperimentParams {
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  std::size_t n = 64;
  // odd-hash: |S|; isolation: |W|; search-rate: |C|.
  std::size_t set_size = 10;
  // odd-hash universe width.
  unsigned width = 16;
  // search-rate: |T|, spanned by a path.
  std::size_t side = 4;
  // tier-contraction: edges of the frozen random graph; 0 picks 2n.
  std::size_t edges = 0;
  VerifyMode mode = VerifyMode::kSketch;
  std::size_t tag_pairs = 0;

  // Throws ParameterError; trials below kMinTrials are rejected.
  void validate(ExperimentKind kind) const;
};

struct Estimate {
  std::string name;
  std::size_t trials = 0;
  std::size_t successes = 0;

  double estimate() const;
  // Normal-approximation 95% half-width, 1.96 sqrt(p (1 - p) / trials).
  double half_width() const;
};

Estimate run_experiment(ExperimentKind kind, const ExperimentParams& params);

Estimate odd_hash_experiment(const ExperimentParams& params);
Estimate isolation_experiment(const ExperimentParams& params);
Estimate search_rate_experiment(const ExperimentParams& params);
Estimate tier_contraction_experiment(const ExperimentParams& params);
Estimate false_accept_experiment(const ExperimentParams& params);

void write_estimate(std::ostream& out, const Estimate& e,
                    const ExperimentParams& params);

}  // namespace dynconn::harness

#endif  // DYNCONN_HARNESS_EXPERIMENTS_H_
