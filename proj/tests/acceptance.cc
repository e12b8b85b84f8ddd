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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dynconn/connectivity.h"
#include "dynconn/cutset.h"
#include "dynconn/hashing.h"
#include "dynconn/harness/experiments.h"
#include "dynconn/harness/runner.h"
#include "dynconn/harness/workload.h"
#include "dynconn/oracle.h"
#include "dynconn/two_edge.h"

namespace {

using namespace dynconn;
using namespace dynconn::harness;
using Clock = std::chrono::steady_clock;

constexpr double kRateFloor = 1.0 / 8.0 - 0.02;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Trace evolve_trace(std::size_t n, std::size_t updates, std::size_t queries,
                   std::uint64_t seed) {
  WorkloadParams p;
  p.n = n;
  p.updates = updates;
  p.queries = queries;
  return gen_workload(WorkloadKind::kRandomEvolve, p, seed);
}

// 1. Edge-list mode: no wrong "yes", wrong "no" rate <= 1%, under 2 minutes.
Outcome edge_list_equivalence() {
  const auto start = Clock::now();
  std::size_t false_yes = 0, false_no = 0, no_answers = 0, queries = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Trace t = evolve_trace(64, 10000, 1000, seed);
    const RunOptions opt{
        ConnectivityConfig::defaults(64, VerifyMode::kEdgeList, seed), true,
        false};
    const RunReport r = run(opt, t);
    false_yes += r.false_yes;
    false_no += r.false_no;
    queries += r.queries;
    no_answers += std::count(r.answers.begin(), r.answers.end(), 'N');
  }
  const double secs = seconds_since(start);
  const double rate = no_answers ? double(false_no) / no_answers : 0.0;
  return {false_yes == 0 && rate <= 0.01 && secs < 120.0,
          fmt("queries=%zu wrong_yes=%zu wrong_no=%zu/%zu (rate %.4f) %.1fs",
              queries, false_yes, false_no, no_answers, rate, secs)};
}

// 2. Sublinear mode: total mismatch rate <= 1%.
Outcome sublinear_equivalence() {
  const auto start = Clock::now();
  std::size_t wrong = 0, queries = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Trace t = evolve_trace(64, 10000, 1000, seed);
    const RunOptions opt{
        ConnectivityConfig::defaults(64, VerifyMode::kSketch, seed), true,
        false};
    const RunReport r = run(opt, t);
    wrong += r.mismatches.size();
    queries += r.queries;
  }
  const double rate = double(wrong) / queries;
  return {rate <= 0.01, fmt("queries=%zu mismatches=%zu (rate %.4f) %.1fs",
                            queries, wrong, rate, seconds_since(start))};
}

// 3. Full invariant scan after every update.
Outcome invariant_scan() {
  const auto start = Clock::now();
  std::size_t scans = 0;
  std::string first_violation;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Trace t = evolve_trace(32, 2000, 0, 100 + seed);
    DynamicConnectivity dc(
        ConnectivityConfig::defaults(32, VerifyMode::kEdgeList, seed));
    OracleGraph g(32);
    for (const Op& op : t.ops) {
      const EdgeKey e = EdgeKey::canonical(op.u, op.v);
      if (op.kind == OpKind::kInsert) {
        g.insert(e);
        dc.insert(e);
      } else {
        g.erase(e);
        dc.erase(e);
      }
      const auto edges = g.edge_list();
      const InvariantReport rep = dc.check_invariants(&edges);
      ++scans;
      if (!rep.ok() && first_violation.empty()) {
        first_violation = rep.violations.front();
      }
    }
  }
  const double secs = seconds_since(start);
  return {first_violation.empty() && secs < 120.0,
          fmt("scans=%zu %.1fs%s%s", scans, secs,
              first_violation.empty() ? "" : " first violation: ",
              first_violation.c_str())};
}

// 4. Every tree on every vertex subset of n = 8, with every single crossing
// edge: Search returns exactly that edge.
Outcome single_edge_recovery() {
  constexpr Vertex kN = 8;
  const auto start = Clock::now();
  std::size_t configs = 0, wrong = 0;
  std::uint64_t seed = 0;
  for (unsigned mask = 1; mask + 1 < (1u << kN); ++mask) {
    std::vector<Vertex> side, rest;
    for (Vertex v = 0; v < kN; ++v) ((mask >> v) & 1 ? side : rest).push_back(v);
    const std::size_t k = side.size();
    // Labelled trees on `side` via Pruefer sequences.
    std::size_t trees = 1;
    for (std::size_t i = 2; i < k; ++i) trees *= k;
    std::vector<std::size_t> code(k >= 2 ? k - 2 : 0, 0);
    for (std::size_t tree = 0; tree < trees; ++tree) {
      std::size_t x = tree;
      for (auto& c : code) {
        c = x % k;
        x /= k;
      }
      std::vector<EdgeKey> edges;
      if (k >= 2) {
        std::vector<std::size_t> degree(k, 1);
        for (auto c : code) ++degree[c];
        for (auto c : code) {
          std::size_t leaf = 0;
          while (degree[leaf] != 1) ++leaf;
          edges.push_back(EdgeKey::canonical(side[leaf], side[c]));
          --degree[leaf];
          --degree[c];
        }
        std::size_t a = 0;
        while (degree[a] != 1) ++a;
        std::size_t b = a + 1;
        while (degree[b] != 1) ++b;
        edges.push_back(EdgeKey::canonical(side[a], side[b]));
      }
      CutsetStructure cd(kN, ++seed, {default_tag_pairs(kN, 1.0),
                                      VerifyMode::kSketch});
      for (const EdgeKey& e : edges) {
        cd.insert_edge(e);
        cd.make_tree_edge(e);
      }
      for (Vertex a : side) {
        for (Vertex b : rest) {
          const EdgeKey cut = EdgeKey::canonical(a, b);
          cd.insert_edge(cut);
          const SearchResult r = cd.search(cd.find_tree(side.front()));
          wrong += !(r.edge && *r.edge == cut);
          ++configs;
          cd.delete_edge(cut);
        }
      }
    }
  }
  return {wrong == 0, fmt("configurations=%zu failures=%zu %.1fs", configs,
                          wrong, seconds_since(start))};
}

std::string estimates_line(const std::vector<std::pair<std::size_t, Estimate>>& rows,
                           const char* label) {
  std::ostringstream os;
  for (const auto& [size, e] : rows) {
    os << label << size << ": " << fmt("%.4f", e.estimate()) << " +- "
       << fmt("%.4f", e.half_width()) << "  ";
  }
  return os.str();
}

// 5. Search success rate for larger cutsets.
Outcome search_rate() {
  const auto start = Clock::now();
  bool pass = true;
  std::vector<std::pair<std::size_t, Estimate>> rows;
  for (std::size_t c : {2u, 4u, 16u, 64u}) {
    ExperimentParams p;
    p.n = 128;
    p.set_size = c;
    p.side = 4;
    p.trials = 10000;
    p.seed = 500 + c;
    p.mode = VerifyMode::kSketch;
    p.tag_pairs = default_tag_pairs(128, 1.0);
    const Estimate e = search_rate_experiment(p);
    pass = pass && e.estimate() >= kRateFloor;
    rows.emplace_back(c, e);
  }
  return {pass, estimates_line(rows, "|C|=") +
                    fmt("%.1fs", seconds_since(start))};
}

// 6. Odd hash parity.
Outcome odd_hash() {
  bool pass = true;
  std::vector<std::pair<std::size_t, Estimate>> rows;
  for (std::size_t s : {1u, 2u, 3u, 10u, 100u}) {
    ExperimentParams p;
    p.set_size = s;
    p.width = 16;
    p.trials = 10000;
    p.seed = 600 + s;
    const Estimate e = odd_hash_experiment(p);
    pass = pass && e.estimate() >= kRateFloor;
    rows.emplace_back(s, e);
  }
  return {pass, estimates_line(rows, "|S|=")};
}

// 7. Some level isolates exactly one element.
Outcome isolation() {
  bool pass = true;
  std::vector<std::pair<std::size_t, Estimate>> rows;
  for (std::size_t w : {2u, 5u, 32u}) {
    ExperimentParams p;
    p.n = 64;
    p.set_size = w;
    p.trials = 10000;
    p.seed = 700 + w;
    const Estimate e = isolation_experiment(p);
    pass = pass && e.estimate() >= kRateFloor;
    rows.emplace_back(w, e);
  }
  return {pass, estimates_line(rows, "|W|=")};
}

// 8. Tags accepting the XOR of two names.
Outcome false_accept() {
  const auto start = Clock::now();
  ExperimentParams p;
  p.n = 64;
  p.tag_pairs = static_cast<std::size_t>(std::ceil(128 * std::log2(64.0)));
  p.trials = 100000;
  p.seed = 800;
  const Estimate e = false_accept_experiment(p);
  return {e.successes <= 10,
          fmt("tag_pairs=%zu trials=%zu accepts=%zu %.1fs", p.tag_pairs,
              e.trials, e.successes, seconds_since(start))};
}

// 9. 2-edge connectivity through the certificate, and the bridge backend
// against the single-edge-removal definition.
Outcome two_edge() {
  const auto start = Clock::now();
  std::size_t wrong = 0, queries = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    WorkloadParams p;
    p.n = 32;
    p.updates = 3000;
    p.queries = 500;
    p.query_kind = QueryKind::kTwoEdge;
    const Trace t = gen_workload(WorkloadKind::kMixed, p, 900 + seed);
    const RunOptions opt{
        ConnectivityConfig::defaults(32, VerifyMode::kSketch, seed), true, true};
    const RunReport r = run(opt, t);
    wrong += r.mismatches.size();
    queries += r.two_edge_queries;
  }
  SplitMix64 rng(999);
  std::size_t pairs = 0, disagree = 0;
  for (int graph = 0; graph < 1000; ++graph) {
    OracleGraph g(16);
    const std::size_t m = rng.below(41);
    while (g.edges().size() < m) {
      const auto u = static_cast<Vertex>(rng.below(16));
      const auto v = static_cast<Vertex>(rng.below(16));
      if (u != v && !g.contains(EdgeKey::canonical(u, v))) {
        g.insert(EdgeKey::canonical(u, v));
      }
    }
    const auto edges = g.edge_list();
    for (Vertex u = 0; u < 16; ++u) {
      for (Vertex v = u + 1; v < 16; ++v) {
        disagree += bridge_backend_query(16, edges, u, v) !=
                    g.two_edge_connected(u, v);
        ++pairs;
      }
    }
  }
  const double rate = double(wrong) / queries;
  return {rate <= 0.01 && disagree == 0,
          fmt("queries=%zu mismatches=%zu (rate %.4f); bridge pairs=%zu "
              "disagreements=%zu %.1fs",
              queries, wrong, rate, pairs, disagree, seconds_since(start))};
}

// 10. Identical inputs give byte-identical answer streams.
Outcome reproducibility() {
  WorkloadParams p;
  p.n = 48;
  p.updates = 3000;
  p.queries = 400;
  p.query_kind = QueryKind::kBoth;
  const Trace t = gen_workload(WorkloadKind::kMixed, p, 1010);
  const RunOptions opt{ConnectivityConfig::defaults(48, VerifyMode::kSketch, 77),
                       false, true};
  std::string streams[2];
  for (auto& s : streams) {
    std::ostringstream out;
    write_answers(out, run(opt, t));
    s = out.str();
  }
  return {!streams[0].empty() && streams[0] == streams[1],
          fmt("answers=%zu bytes=%zu identical=%s", streams[0].size() / 2,
              streams[0].size(), streams[0] == streams[1] ? "yes" : "no")};
}

// 11. Reported sketch words equal the closed form
// top * n * (levelNum + 1) * ceil((2 ceil(lg n) + 2 tagPairs) / 64).
Outcome space_accounting() {
  bool pass = true;
  std::ostringstream os;
  for (std::size_t n : {16u, 64u, 256u}) {
    std::size_t lg = 0;
    while ((std::size_t{1} << lg) < n) ++lg;
    std::size_t lg_sq = 0;
    while ((std::size_t{1} << lg_sq) < n * n) ++lg_sq;
    const auto cfg = ConnectivityConfig::defaults(n, VerifyMode::kSketch, 1);
    const std::size_t bits = 2 * lg + 2 * cfg.tag_pairs;
    const std::size_t expect =
        cfg.top * n * (lg_sq + 1) * ((bits + 63) / 64);
    Trace empty;
    empty.n = n;
    const RunReport r = run({cfg, false, false}, empty);
    pass = pass && r.space.sketch_words == expect;
    os << "n=" << n << ": " << r.space.sketch_words << "/" << expect << "  ";
  }
  return {pass, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"edge-list oracle equivalence", edge_list_equivalence},
      {"sublinear oracle equivalence", sublinear_equivalence},
      {"invariant scan after every update", invariant_scan},
      {"single-edge cutset recovery", single_edge_recovery},
      {"search success rate", search_rate},
      {"odd hash parity", odd_hash},
      {"isolation", isolation},
      {"false accept bound", false_accept},
      {"2-edge connectivity", two_edge},
      {"reproducibility", reproducibility},
      {"space accounting", space_accounting},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
