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

#include <gtest/gtest.h>

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

#include "dynconn/errors.h"
#include "dynconn/harness/experiments.h"
#include "dynconn/harness/runner.h"
#include "dynconn/harness/trace.h"
#include "dynconn/harness/workload.h"

namespace dynconn::harness {

void PrintTo(WorkloadKind kind, std::ostream* os) { *os << workload_name(kind); }

namespace {

TEST(TraceTest, ParsesExample) {
  const Trace t = parse_trace("N 4\nI 0 1\nQ 0 1\n");
  EXPECT_EQ(t.n, 4u);
  ASSERT_EQ(t.ops.size(), 2u);
  EXPECT_EQ(t.ops[0], (Op{OpKind::kInsert, 0, 1}));
  EXPECT_EQ(t.ops[1], (Op{OpKind::kQuery, 0, 1}));
}

TEST(TraceTest, CommentsAndBlankLines) {
  const Trace t = parse_trace("# header next\n\nN 3\n  # note\nB 2 1\r\nD 0 1\n");
  ASSERT_EQ(t.ops.size(), 2u);
  EXPECT_EQ(t.ops[0].kind, OpKind::kTwoEdgeQuery);
}

void expect_error_at(const std::string& text, std::size_t line) {
  try {
    parse_trace(text);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
  }
}

TEST(TraceTest, Errors) {
  expect_error_at("N 4\nI 4 1\n", 2);
  expect_error_at("I 0 1\n", 1);
  expect_error_at("", 1);
  expect_error_at("N 4\nI 0\n", 2);
  expect_error_at("N 4\nX 0 1\n", 2);
  expect_error_at("N 4\n# c\nI 0 -1\n", 3);
  expect_error_at("N 4\nI 2 2\n", 2);
  expect_error_at("N 4\nI 0 1 2\n", 2);
  expect_error_at("N x\n", 1);
}

TEST(TraceTest, RoundTrip) {
  for (auto kind : {WorkloadKind::kRandomEvolve, WorkloadKind::kPathChurn,
                    WorkloadKind::kCliqueBridge, WorkloadKind::kMixed}) {
    WorkloadParams p;
    p.n = 12;
    p.updates = 300;
    p.queries = 40;
    p.query_kind = QueryKind::kBoth;
    const Trace t = gen_workload(kind, p, 5);
    EXPECT_EQ(parse_trace(serialize(t)), t);
  }
}

TEST(TraceTest, Validation) {
  EXPECT_NO_THROW(validate_trace(parse_trace("N 3\nI 0 1\nD 1 0\nI 0 1\n")));
  try {
    validate_trace(parse_trace("N 3\nI 0 1\nQ 0 1\nI 1 0\n"));
    ADD_FAILURE();
  } catch (const TraceError& e) {
    EXPECT_EQ(e.index(), 2u);
  }
  EXPECT_THROW(validate_trace(parse_trace("N 3\nD 0 1\n")), TraceError);
}

class WorkloadTest : public ::testing::TestWithParam<WorkloadKind> {};

TEST_P(WorkloadTest, DeterministicCountedAndValid) {
  WorkloadParams p;
  p.n = 16;
  p.updates = 500;
  p.queries = 77;
  const Trace a = gen_workload(GetParam(), p, 9);
  const Trace b = gen_workload(GetParam(), p, 9);
  const Trace c = gen_workload(GetParam(), p, 10);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(a.update_count(), 500u);
  EXPECT_EQ(a.query_count(), 77u);
  EXPECT_NO_THROW(validate_trace(a));
}

INSTANTIATE_TEST_SUITE_P(Kinds, WorkloadTest,
                         ::testing::Values(WorkloadKind::kRandomEvolve,
                                           WorkloadKind::kPathChurn,
                                           WorkloadKind::kCliqueBridge,
                                           WorkloadKind::kMixed),
                         [](const auto& info) {
                           std::string name(workload_name(info.param));
                           std::erase(name, '-');
                           return name;
                         });

TEST(WorkloadTest, InvalidParams) {
  WorkloadParams p;
  p.n = 1;
  EXPECT_THROW(gen_workload(WorkloadKind::kRandomEvolve, p, 1), ParameterError);
  p.n = 8;
  p.insert_prob = 1.5;
  EXPECT_THROW(gen_workload(WorkloadKind::kRandomEvolve, p, 1), ParameterError);
  p.insert_prob = 0.5;
  p.clique = 5;
  EXPECT_THROW(gen_workload(WorkloadKind::kCliqueBridge, p, 1), ParameterError);
}

TEST(WorkloadTest, Names) {
  for (auto kind : {WorkloadKind::kRandomEvolve, WorkloadKind::kPathChurn,
                    WorkloadKind::kCliqueBridge, WorkloadKind::kMixed}) {
    EXPECT_EQ(parse_workload_kind(workload_name(kind)), kind);
  }
  EXPECT_FALSE(parse_workload_kind("nope"));
}

RunOptions options(std::size_t n, VerifyMode mode, bool verify, bool two) {
  return {ConnectivityConfig::defaults(n, mode, 4), verify, two};
}

TEST(RunTest, EmptyTrace) {
  const RunReport r = run(options(4, VerifyMode::kEdgeList, true, false),
                          parse_trace("N 4\n"));
  EXPECT_TRUE(r.answers.empty());
  EXPECT_TRUE(r.mismatches.empty());
}

TEST(RunTest, InsertThenQuery) {
  const RunReport r = run(options(4, VerifyMode::kSketch, true, false),
                          parse_trace("N 4\nI 0 1\nQ 0 1\nQ 0 2\nQ 3 3\n"));
  EXPECT_EQ(r.answers, "YNY");
  EXPECT_EQ(r.updates, 1u);
  EXPECT_EQ(r.queries, 3u);
}

TEST(RunTest, RefusesBadInput) {
  EXPECT_THROW(run(options(4, VerifyMode::kEdgeList, false, false),
                   parse_trace("N 4\nD 0 1\n")),
               TraceError);
  EXPECT_THROW(run(options(5, VerifyMode::kEdgeList, false, false),
                   parse_trace("N 4\n")),
               ParameterError);
  EXPECT_THROW(run(options(4, VerifyMode::kEdgeList, false, false),
                   parse_trace("N 4\nB 0 1\n")),
               UsageError);
}

TEST(RunTest, TwoEdgeAnswers) {
  const RunReport r = run(options(4, VerifyMode::kEdgeList, true, true),
                          parse_trace("N 4\nI 0 1\nI 1 2\nB 0 2\nI 0 2\n"
                                      "B 0 2\nQ 0 2\nD 1 2\nB 0 1\n"));
  EXPECT_EQ(r.answers, "NYYN");
  EXPECT_EQ(r.two_edge_queries, 3u);
  EXPECT_TRUE(r.mismatches.empty());
}

TEST(RunTest, VerifiedRandomEvolve) {
  WorkloadParams p;
  p.n = 64;
  p.updates = 3000;
  p.queries = 300;
  const Trace t = gen_workload(WorkloadKind::kRandomEvolve, p, 2);
  const RunReport r = run(options(64, VerifyMode::kEdgeList, true, false), t);
  EXPECT_EQ(r.false_yes, 0u);
  EXPECT_LE(r.mismatch_rate(), 0.01);
  EXPECT_EQ(r.answers.size(), 300u);
}

TEST(RunTest, ReportSectionsAndReproducibility) {
  WorkloadParams p;
  p.n = 16;
  p.updates = 200;
  p.queries = 50;
  const Trace t = gen_workload(WorkloadKind::kPathChurn, p, 3);
  const auto opt = options(16, VerifyMode::kSketch, true, false);
  const RunReport a = run(opt, t);
  const RunReport b = run(opt, t);
  EXPECT_EQ(a.answers, b.answers);
  std::ostringstream out;
  write_report(out, a);
  const std::string text = out.str();
  for (const char* section : {"[config]", "[summary]", "[timing]", "[space]",
                              "[mismatches]", "[answers]"}) {
    EXPECT_NE(text.find(section), std::string::npos) << section;
  }
  std::ostringstream ans_a, ans_b;
  write_answers(ans_a, a);
  write_answers(ans_b, b);
  EXPECT_EQ(ans_a.str(), ans_b.str());
}

TEST(ExperimentTest, RejectsFewTrials) {
  ExperimentParams p;
  p.trials = 99;
  EXPECT_THROW(odd_hash_experiment(p), ParameterError);
  EXPECT_THROW(run_experiment(ExperimentKind::kFalseAccept, p), ParameterError);
}

TEST(ExperimentTest, OddHashMeetsGuarantee) {
  ExperimentParams p;
  p.set_size = 10;
  p.trials = 10000;
  const Estimate e = odd_hash_experiment(p);
  EXPECT_EQ(e.trials, 10000u);
  EXPECT_GE(e.estimate(), 0.105);
}

TEST(ExperimentTest, SingleCutEdgeIsAlwaysFound) {
  ExperimentParams p;
  p.n = 32;
  p.set_size = 1;
  p.trials = 200;
  p.tag_pairs = 64;
  EXPECT_EQ(search_rate_experiment(p).estimate(), 1.0);
}

TEST(ExperimentTest, NoTagsAcceptEverything) {
  ExperimentParams p;
  p.trials = 500;
  p.tag_pairs = 0;
  EXPECT_EQ(false_accept_experiment(p).estimate(), 1.0);
  p.tag_pairs = 256;
  EXPECT_LE(false_accept_experiment(p).estimate(), 0.05);
}

TEST(ExperimentTest, IsolationAndContraction) {
  ExperimentParams p;
  p.trials = 1000;
  p.set_size = 5;
  EXPECT_GE(isolation_experiment(p).estimate(), 0.105);
  p.n = 24;
  p.trials = 100;
  p.mode = VerifyMode::kEdgeList;
  const Estimate c = tier_contraction_experiment(p);
  EXPECT_GT(c.trials, 0u);
  EXPECT_GE(c.estimate(), 0.5);
}

TEST(ExperimentTest, HalfWidth) {
  const Estimate e{"x", 400, 100};
  EXPECT_DOUBLE_EQ(e.estimate(), 0.25);
  EXPECT_NEAR(e.half_width(), 1.96 * std::sqrt(0.25 * 0.75 / 400), 1e-12);
}

}  // namespace
}  // namespace dynconn::harness
