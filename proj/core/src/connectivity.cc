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

#include "dynconn/connectivity.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dynconn/errors.h"
#include "dynconn/hashing.h"

namespace dynconn {

namespace {

std::string str(EdgeKey e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

std::size_t query_branching(std::size_t n) {
  return std::max<std::size_t>(2, vertex_bits(n));
}

const ConnectivityConfig& validated(const ConnectivityConfig& config) {
  config.validate();
  return config;
}

}  // namespace

std::size_t default_top(std::size_t n) {
  return std::max<std::size_t>(
      2, static_cast<std::size_t>(std::ceil(4.0 * std::log2(double(n)))));
}

std::size_t theoretical_top(std::size_t n, double c) {
  const double p = kSearchSuccessProbability;
  const double alpha = (1 - p) / (1 - p / 2);
  const double a = std::ceil(std::log(double(n)) / std::log(4 / (4 - p)));
  const double top = std::max(2 * a / alpha, 8 * c * std::log(double(n)) / alpha);
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(top)));
}

std::size_t default_tag_pairs(std::size_t n, double c) {
  return static_cast<std::size_t>(std::ceil(128.0 * c * std::log2(double(n))));
}

ConnectivityConfig ConnectivityConfig::defaults(std::size_t n, VerifyMode mode,
                                                std::uint64_t seed, double c) {
  ConnectivityConfig cfg;
  cfg.n = n;
  cfg.c = c;
  cfg.mode = mode;
  cfg.seed = seed;
  cfg.top = n >= 2 ? default_top(n) : 2;
  cfg.tag_pairs =
      mode == VerifyMode::kSketch && n >= 2 ? default_tag_pairs(n, c) : 0;
  return cfg;
}

void ConnectivityConfig::validate() const {
  if (n < 2) throw ParameterError("n must be >= 2");
  if (top < 2) throw ParameterError("top must be >= 2");
  if (!(c > 0)) throw ParameterError("c must be positive");
}

DynamicConnectivity::DynamicConnectivity(const ConnectivityConfig& config)
    : config_(validated(config)),
      query_forest_(config.n, 0, query_branching(config.n)),
      path_index_(config.n) {
  SplitMix64 seeds(config.seed);
  tiers_.reserve(config.top);
  const CutsetParams params{config.tag_pairs, config.mode, 2, config.scan};
  for (std::size_t l = 0; l < config.top; ++l) {
    tiers_.emplace_back(config.n, seeds.next(), params);
  }
}

void DynamicConnectivity::check_edge(EdgeKey e) const {
  if (!e.valid_for(config_.n)) {
    throw ParameterError("edge " + str(e) + " invalid for n = " +
                         std::to_string(config_.n));
  }
}

std::size_t DynamicConnectivity::size_on(std::size_t tier, Vertex v) const {
  if (tier < config_.top) {
    const auto& f = tiers_[tier].forest();
    return f.tree_size(f.find_tree(v));
  }
  return query_forest_.tree_size(query_forest_.find_tree(v));
}

void DynamicConnectivity::insert(EdgeKey e) {
  check_edge(e);
  if (config_.mode == VerifyMode::kEdgeList && tiers_.front().has_edge(e)) {
    throw UsageError("insert: " + str(e) + " already present");
  }
  for (auto& cd : tiers_) cd.insert_edge(e);
  refresh(e);
}

void DynamicConnectivity::erase(EdgeKey e) {
  check_edge(e);
  if (config_.mode == VerifyMode::kEdgeList && !tiers_.front().has_edge(e)) {
    throw UsageError("erase: " + str(e) + " not present");
  }
  for (auto& cd : tiers_) cd.delete_edge(e);
  if (tier_of_edge_.contains(e)) remove_from_top(e);
  refresh(e);
}

bool DynamicConnectivity::connected(Vertex x, Vertex y) const {
  return query_forest_.connected(x, y);
}

void DynamicConnectivity::refresh(EdgeKey e) {
  const std::size_t top = config_.top;
  for (std::size_t l = 0; l < top; ++l) {
    for (Vertex u : {e.x, e.y}) {
      CutsetStructure& cd = tiers_[l];
      const TreeId t = cd.find_tree(u);
      if (cd.tree_size(t) != size_on(l + 1, u)) continue;
      ++counters_.searches;
      const SearchResult found = cd.search(t);
      if (!found.edge) continue;
      const EdgeKey f = *found.edge;
      if (path_index_.connected(f.x, f.y)) {
        // The lowest tier with an f.x-f.y path is the largest tier label on
        // the F_top path; evict that edge everywhere it is a tree edge.
        const auto cycle_max = path_index_.path_max(f.x, f.y);
        if (cycle_max.weight <= static_cast<int>(l + 1)) {
          throw std::logic_error("refresh: isolated tree already joined on tier " +
                                 std::to_string(cycle_max.weight));
        }
        demote(cycle_max.edge);
      }
      promote(f, static_cast<int>(l + 1));
    }
  }
}

void DynamicConnectivity::promote(EdgeKey e, int tier) {
  for (std::size_t k = static_cast<std::size_t>(tier); k < config_.top; ++k) {
    tiers_[k].make_tree_edge(e);
  }
  query_forest_.link(e.x, e.y);
  path_index_.link(e.x, e.y, tier);
  tier_of_edge_[e] = tier;
  events_.push_back({ForestChangeEvent::Kind::kAdded, e});
  ++counters_.promotions;
}

void DynamicConnectivity::demote(EdgeKey e) {
  const int tier = tier_of_edge_.at(e);
  for (std::size_t k = static_cast<std::size_t>(tier); k < config_.top; ++k) {
    tiers_[k].make_nontree_edge(e);
  }
  remove_from_top(e);
  ++counters_.demotions;
}

void DynamicConnectivity::remove_from_top(EdgeKey e) {
  query_forest_.cut(e.x, e.y);
  path_index_.cut(e.x, e.y);
  tier_of_edge_.erase(e);
  events_.push_back({ForestChangeEvent::Kind::kRemoved, e});
}

std::vector<ForestChangeEvent> DynamicConnectivity::drain_events() {
  std::vector<ForestChangeEvent> out;
  out.swap(events_);
  return out;
}

std::vector<EdgeKey> DynamicConnectivity::spanning_forest() const {
  auto edges = query_forest_.edges();
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::optional<int> DynamicConnectivity::tier_of(EdgeKey e) const {
  auto it = tier_of_edge_.find(e);
  if (it == tier_of_edge_.end()) return std::nullopt;
  return it->second;
}

InvariantReport DynamicConnectivity::check_invariants(
    const std::vector<EdgeKey>* edges) {
  InvariantReport report;
  auto fail = [&report](std::string msg) {
    report.violations.push_back(std::move(msg));
  };
  const std::size_t top = config_.top;

  if (tiers_.front().forest().edge_count() != 0) {
    fail("tier 0 has tree edges");
  }

  std::vector<std::set<EdgeKey>> tree_edges(top + 1);
  for (std::size_t l = 0; l < top; ++l) {
    auto list = tiers_[l].forest().edges();
    tree_edges[l].insert(list.begin(), list.end());
    if (!tiers_[l].forest().self_check()) {
      fail("tier " + std::to_string(l) + " forest failed its self check");
    }
  }
  {
    auto list = query_forest_.edges();
    tree_edges[top].insert(list.begin(), list.end());
  }
  if (!query_forest_.self_check()) fail("query forest failed its self check");

  for (std::size_t l = 0; l < top; ++l) {
    for (const EdgeKey& e : tree_edges[l]) {
      if (!tree_edges[l + 1].contains(e)) {
        fail("tier " + std::to_string(l) + " edge " + str(e) +
             " missing from tier " + std::to_string(l + 1));
      }
      if (config_.mode == VerifyMode::kEdgeList && !tiers_[l].has_edge(e)) {
        fail("tier " + std::to_string(l) + " tree edge " + str(e) +
             " is not a graph edge");
      }
    }
  }

  // The three F_top representations and the tier labels must agree.
  std::set<EdgeKey> lct;
  for (const auto& [e, w] : path_index_.edges()) {
    lct.insert(e);
    auto it = tier_of_edge_.find(e);
    if (it == tier_of_edge_.end() || it->second != w) {
      fail("path index weight of " + str(e) + " disagrees with its tier label");
    }
  }
  if (lct != tree_edges[top]) fail("path index and query forest differ");
  if (tier_of_edge_.size() != tree_edges[top].size()) {
    fail("tier label count differs from F_top size");
  }
  for (const auto& [e, t] : tier_of_edge_) {
    if (t < 1 || static_cast<std::size_t>(t) > top) {
      fail("tier label of " + str(e) + " out of range");
      continue;
    }
    if (tree_edges[t - 1].contains(e)) {
      fail("edge " + str(e) + " appears below its tier label");
    }
    if (!tree_edges[t].contains(e)) {
      fail("edge " + str(e) + " missing from its labelled tier");
    }
  }

  // Isolated trees must have unsuccessful searches.
  for (std::size_t l = 0; l < top; ++l) {
    CutsetStructure& cd = tiers_[l];
    std::set<TreeId> seen;
    for (Vertex v = 0; v < config_.n; ++v) {
      const TreeId t = cd.find_tree(v);
      if (!seen.insert(t).second) continue;
      if (cd.tree_size(t) != size_on(l + 1, v)) continue;
      const SearchResult r = cd.search(t);
      if (r.edge) {
        fail("tier " + std::to_string(l) + ": isolated tree of vertex " +
             std::to_string(v) + " has a successful search returning " +
             str(*r.edge));
      }
    }
  }

  std::vector<EdgeKey> list;
  if (edges == nullptr && config_.mode == VerifyMode::kEdgeList) {
    // Every tier keeps the same list; rebuild it from tier 0's view.
    for (Vertex x = 0; x < config_.n; ++x) {
      for (Vertex y = x + 1; y < config_.n; ++y) {
        if (tiers_.front().has_edge({x, y})) list.push_back({x, y});
      }
    }
    edges = &list;
  }
  if (edges != nullptr) {
    const std::set<EdgeKey> graph(edges->begin(), edges->end());
    for (std::size_t l = 0; l <= top; ++l) {
      for (const EdgeKey& e : tree_edges[l]) {
        if (!graph.contains(e)) {
          fail("tier " + std::to_string(l) + " tree edge " + str(e) +
               " is not in the supplied edge set");
        }
      }
    }
    for (std::size_t l = 0; l < top; ++l) {
      if (!tiers_[l].sketches_match(*edges)) {
        fail("tier " + std::to_string(l) + " sketches differ from recomputation");
      }
    }
  }
  return report;
}

SpaceTally DynamicConnectivity::space() const {
  SpaceTally s;
  for (const auto& cd : tiers_) {
    s.sketch_words += cd.sketch_word_count();
    s.aggregate_words += cd.forest().aggregate_word_count();
    s.forest_nodes += cd.forest().node_count();
    s.edge_list_words += cd.edge_list_size();
  }
  s.forest_nodes += query_forest_.node_count();
  return s;
}

}  // namespace dynconn
