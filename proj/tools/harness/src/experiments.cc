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

#include "dynconn/harness/experiments.h"

#include <cmath>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "dynconn/connectivity.h"
#include "dynconn/errors.h"
#include "dynconn/hashing.h"
#include "dynconn/oracle.h"

namespace dynconn::harness {

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name) {
  if (name == "odd-hash") return ExperimentKind::kOddHash;
  if (name == "isolation") return ExperimentKind::kIsolation;
  if (name == "search-rate") return ExperimentKind::kSearchRate;
  if (name == "tier-contraction") return ExperimentKind::kTierContraction;
  if (name == "false-accept") return ExperimentKind::kFalseAccept;
  return std::nullopt;
}

std::string_view experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kOddHash: return "odd-hash";
    case ExperimentKind::kIsolation: return "isolation";
    case ExperimentKind::kSearchRate: return "search-rate";
    case ExperimentKind::kTierContraction: return "tier-contraction";
    case ExperimentKind::kFalseAccept: return "false-accept";
  }
  return "?";
}

void ExperimentParams::validate(ExperimentKind kind) const {
  if (trials < kMinTrials) {
    throw ParameterError("experiments need at least " +
                         std::to_string(kMinTrials) + " trials, got " +
                         std::to_string(trials));
  }
  if (kind != ExperimentKind::kOddHash && n < 2) {
    throw ParameterError("experiment needs n >= 2");
  }
  const std::size_t names = n * (n - 1) / 2;
  switch (kind) {
    case ExperimentKind::kOddHash:
      if (width < 2 || width > 61) throw ParameterError("width must be in [2, 61]");
      if (set_size < 1 || set_size >= (std::size_t{1} << std::min(width, 40u))) {
        throw ParameterError("set size must be in [1, 2^width)");
      }
      break;
    case ExperimentKind::kIsolation:
      if (set_size < 1 || set_size > names) {
        throw ParameterError("set size must be in [1, n(n-1)/2]");
      }
      break;
    case ExperimentKind::kSearchRate:
      if (side < 1 || side >= n) throw ParameterError("side must be in [1, n)");
      if (set_size < 1 || set_size > side * (n - side)) {
        throw ParameterError("cut size must be in [1, side * (n - side)]");
      }
      break;
    case ExperimentKind::kTierContraction:
      if (edges > names) throw ParameterError("too many edges for n");
      break;
    case ExperimentKind::kFalseAccept:
      if (names < 2) throw ParameterError("false-accept needs n >= 3");
      break;
  }
}

double Estimate::estimate() const {
  return trials == 0 ? 0.0 : static_cast<double>(successes) / trials;
}

double Estimate::half_width() const {
  if (trials == 0) return 0.0;
  const double p = estimate();
  return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

namespace {

// `count` distinct edges of K_n, drawn without replacement.
std::vector<EdgeKey> distinct_edges(SplitMix64& rng, std::size_t n,
                                    std::size_t count) {
  std::set<EdgeKey> seen;
  std::vector<EdgeKey> out;
  while (out.size() < count) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    if (u == v) continue;
    const EdgeKey e = EdgeKey::canonical(u, v);
    if (seen.insert(e).second) out.push_back(e);
  }
  return out;
}

CutsetParams cutset_params(const ExperimentParams& p) {
  return {p.tag_pairs, p.mode, 2};
}

}  // namespace

Estimate odd_hash_experiment(const ExperimentParams& p) {
  p.validate(ExperimentKind::kOddHash);
  SplitMix64 rng(p.seed);
  const std::uint64_t universe = std::uint64_t{1} << p.width;
  std::unordered_set<std::uint64_t> chosen;
  std::vector<std::uint64_t> set;
  while (set.size() < p.set_size) {
    const std::uint64_t x = 1 + rng.below(universe - 1);
    if (chosen.insert(x).second) set.push_back(x);
  }
  Estimate e{"odd-hash", p.trials, 0};
  for (std::size_t t = 0; t < p.trials; ++t) {
    const OddHash f = OddHash::from_seed(rng.next(), p.width);
    bool parity = false;
    for (std::uint64_t x : set) parity ^= f(x);
    e.successes += parity;
  }
  return e;
}

Estimate isolation_experiment(const ExperimentParams& p) {
  p.validate(ExperimentKind::kIsolation);
  SplitMix64 rng(p.seed);
  std::vector<Word> names;
  for (const EdgeKey& k : distinct_edges(rng, p.n, p.set_size)) {
    names.push_back(encode_name(k, p.n));
  }
  const unsigned levels = level_num_for(p.n);
  Estimate e{"isolation", p.trials, 0};
  std::vector<std::size_t> at(levels + 1);
  for (std::size_t t = 0; t < p.trials; ++t) {
    const PairwiseHash h = PairwiseHash::from_seed(rng.next(), levels);
    std::fill(at.begin(), at.end(), 0);
    for (Word w : names) ++at[lowest_sampled_level(h, w)];
    // Level i holds every element whose lowest sampled level is <= i.
    std::size_t running = 0;
    bool one = false;
    for (std::size_t i = 0; i <= levels && !one; ++i) {
      running += at[i];
      one = running == 1;
    }
    e.successes += one;
  }
  return e;
}

Estimate search_rate_experiment(const ExperimentParams& p) {
  p.validate(ExperimentKind::kSearchRate);
  SplitMix64 rng(p.seed);
  // T = {0, ..., side - 1} spanned by a path, plus one internal chord that
  // has to cancel out of the aggregate.
  std::vector<EdgeKey> tree;
  for (Vertex v = 1; v < p.side; ++v) tree.push_back({v - 1, v});
  std::vector<EdgeKey> chords;
  if (p.side >= 3) chords.push_back({0, 2});
  std::set<EdgeKey> cut;
  while (cut.size() < p.set_size) {
    const auto a = static_cast<Vertex>(rng.below(p.side));
    const auto b = static_cast<Vertex>(p.side + rng.below(p.n - p.side));
    cut.insert(EdgeKey::canonical(a, b));
  }
  Estimate e{"search-rate", p.trials, 0};
  for (std::size_t t = 0; t < p.trials; ++t) {
    CutsetStructure cs(p.n, rng.next(), cutset_params(p));
    for (const EdgeKey& k : tree) {
      cs.insert_edge(k);
      cs.make_tree_edge(k);
    }
    for (const EdgeKey& k : chords) cs.insert_edge(k);
    for (const EdgeKey& k : cut) cs.insert_edge(k);
    const SearchResult r = cs.search(cs.find_tree(0));
    e.successes += r.edge && cut.contains(*r.edge);
  }
  return e;
}

// Boruvka rounds on a frozen random graph, each round with a fresh cutset
// seed. One event per round that starts with f > 0 fragments; it succeeds if
// at least (p/2) f searches return a crossing edge.
Estimate tier_contraction_experiment(const ExperimentParams& p) {
  p.validate(ExperimentKind::kTierContraction);
  SplitMix64 rng(p.seed);
  const std::size_t m = p.edges != 0 ? p.edges : std::min(2 * p.n, p.n * (p.n - 1) / 2);
  const std::vector<EdgeKey> graph = distinct_edges(rng, p.n, m);
  const std::set<EdgeKey> graph_set(graph.begin(), graph.end());
  OracleGraph g(p.n);
  for (const EdgeKey& k : graph) g.insert(k);
  const std::vector<Vertex> component = g.components();

  Estimate e{"tier-contraction", 0, 0};
  for (std::size_t t = 0; t < p.trials; ++t) {
    std::vector<EdgeKey> forest;
    for (std::size_t round = 0; round < 4 * p.n; ++round) {
      CutsetStructure cs(p.n, rng.next(), cutset_params(p));
      for (const EdgeKey& k : graph) cs.insert_edge(k);
      for (const EdgeKey& k : forest) cs.make_tree_edge(k);
      // Fragments: trees strictly smaller than their graph component.
      std::vector<TreeId> fragments;
      std::set<std::uint32_t> seen;
      std::vector<std::size_t> comp_size(p.n, 0);
      for (Vertex v = 0; v < p.n; ++v) ++comp_size[component[v]];
      for (Vertex v = 0; v < p.n; ++v) {
        const TreeId id = cs.find_tree(v);
        if (!seen.insert(id.value).second) continue;
        if (cs.tree_size(id) < comp_size[component[v]]) fragments.push_back(id);
      }
      if (fragments.empty()) break;
      std::vector<EdgeKey> found;
      for (const TreeId id : fragments) {
        const SearchResult r = cs.search(id);
        if (r.edge && graph_set.contains(*r.edge)) found.push_back(*r.edge);
      }
      ++e.trials;
      const double need = kSearchSuccessProbability / 2.0 *
                          static_cast<double>(fragments.size());
      e.successes += static_cast<double>(found.size()) >= need;
      // Merge along the found edges, skipping any that would close a cycle.
      std::vector<Vertex> parent(p.n);
      std::iota(parent.begin(), parent.end(), Vertex{0});
      auto root = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      for (const EdgeKey& k : forest) parent[root(k.x)] = root(k.y);
      for (const EdgeKey& k : found) {
        const Vertex a = root(k.x), b = root(k.y);
        if (a == b) continue;
        parent[a] = b;
        forest.push_back(k);
      }
    }
  }
  return e;
}

Estimate false_accept_experiment(const ExperimentParams& p) {
  p.validate(ExperimentKind::kFalseAccept);
  SplitMix64 rng(p.seed);
  const auto pair = distinct_edges(rng, p.n, 2);
  const SketchLayout layout = SketchLayout::make(p.n, p.tag_pairs);
  const Word a = encode_name(pair[0], p.n);
  const Word b = encode_name(pair[1], p.n);
  std::vector<Word> ba(layout.words_per_level), bb(layout.words_per_level);
  Estimate e{"false-accept", p.trials, 0};
  for (std::size_t t = 0; t < p.trials; ++t) {
    const SketchHashes h = SketchHashes::draw(layout, rng.next());
    h.block(layout, a, ba);
    h.block(layout, b, bb);
    for (std::size_t w = 0; w < ba.size(); ++w) ba[w] ^= bb[w];
    e.successes += tags_pass(layout, ba);
  }
  return e;
}

Estimate run_experiment(ExperimentKind kind, const ExperimentParams& params) {
  switch (kind) {
    case ExperimentKind::kOddHash: return odd_hash_experiment(params);
    case ExperimentKind::kIsolation: return isolation_experiment(params);
    case ExperimentKind::kSearchRate: return search_rate_experiment(params);
    case ExperimentKind::kTierContraction:
      return tier_contraction_experiment(params);
    case ExperimentKind::kFalseAccept: return false_accept_experiment(params);
  }
  throw ParameterError("unknown experiment");
}

void write_estimate(std::ostream& out, const Estimate& e,
                    const ExperimentParams& p) {
  out << "[experiment]\n"
      << "name = " << e.name << '\n'
      << "seed = " << p.seed << '\n'
      << "n = " << p.n << '\n'
      << "set_size = " << p.set_size << '\n'
      << "width = " << p.width << '\n'
      << "side = " << p.side << '\n'
      << "edges = " << p.edges << '\n'
      << "mode = " << (p.mode == VerifyMode::kSketch ? "sublinear" : "edge-list")
      << '\n'
      << "tag_pairs = " << p.tag_pairs << "\n\n"
      << "[estimate]\n"
      << "trials = " << e.trials << '\n'
      << "successes = " << e.successes << '\n'
      << "estimate = " << e.estimate() << '\n'
      << "half_width = " << e.half_width() << '\n';
}

}  // namespace dynconn::harness
