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

#ifndef DYNCONN_CONNECTIVITY_H_
#define DYNCONN_CONNECTIVITY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynconn/cutset.h"
#include "dynconn/edge_key.h"
#include "dynconn/euler_forest.h"
#include "dynconn/link_cut_forest.h"

namespace dynconn {

// Search success probability assumed by the tier-count formula.
inline constexpr double kSearchSuccessProbability = 1.0 / 8.0;

// ceil(4 lg n); the practical default tier count.
std::size_t default_top(std::size_t n);
// max(2a/alpha, 8 c ln n / alpha) with a = ceil(log_{4/(4-p)} n) and
// alpha = (1-p)/(1-p/2), p = 1/8; rounded up.
std::size_t theoretical_top(std::size_t n, double c);
// ceil(128 c lg n) verification tag pairs.
std::size_t default_tag_pairs(std::size_t n, double c);

struct ConnectivityConfig {
  std::size_t n = 0;
  double c = 1.0;
  std::size_t top = 0;
  std::size_t tag_pairs = 0;
  VerifyMode mode = VerifyMode::kSketch;
  SearchScan scan = SearchScan::kFirstNonzero;
  std::uint64_t seed = 0;

  // Default tier count and tag pairs for the mode. Edge-list mode verifies
  // against the list, so it stores no tags.
  static ConnectivityConfig defaults(std::size_t n, VerifyMode mode,
                                     std::uint64_t seed, double c = 1.0);

  // Throws ParameterError describing the first problem found.
  void validate() const;
};

struct ForestChangeEvent {
  enum class Kind { kAdded, kRemoved };
  Kind kind;
  EdgeKey edge;
  friend bool operator==(const ForestChangeEvent&,
                         const ForestChangeEvent&) = default;
};

struct InvariantReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct SpaceTally {
  std::size_t sketch_words = 0;     // vertex sketches over all cutset tiers
  std::size_t aggregate_words = 0;  // cached tree aggregates over all tiers
  std::size_t forest_nodes = 0;     // sequence-tree nodes over all forests
  std::size_t edge_list_words = 0;  // one word per stored edge-list entry
};

struct EngineCounters {
  std::uint64_t searches = 0;
  std::uint64_t promotions = 0;
  std::uint64_t demotions = 0;
};

// Fully dynamic connectivity over a fixed vertex set.
//
// Tiers 0..top-1 each hold a cutset structure over the whole graph with an
// independent seed; their forests are nested, F_0 has no edges and F_top is
// the spanning forest used to answer queries. F_top is stored twice more: in
// a shallow Euler-tour forest for fast root lookups and in a link-cut forest
// whose edge weights are the lowest tier the edge appears on.
//
// After every update, refresh() walks the tiers bottom-up and, for each
// endpoint whose tier-l tree is isolated (same vertex set on tier l + 1),
// promotes the edge found by Search onto tiers l+1..top, first evicting the
// highest-tier edge of any cycle this would close.
class DynamicConnectivity {
 public:
  explicit DynamicConnectivity(const ConnectivityConfig& config);

  const ConnectivityConfig& config() const { return config_; }
  std::size_t vertex_count() const { return config_.n; }
  std::size_t top() const { return config_.top; }

  // In edge-list mode, throws UsageError on a duplicate insert or a delete of
  // an absent edge. In sketch mode those are caller errors that go undetected.
  void insert(EdgeKey e);
  void erase(EdgeKey e);

  bool connected(Vertex x, Vertex y) const;

  // Returns and clears F_top changes since the previous drain.
  std::vector<ForestChangeEvent> drain_events();

  std::vector<EdgeKey> spanning_forest() const;
  std::optional<int> tier_of(EdgeKey e) const;

  CutsetStructure& tier(std::size_t l) { return tiers_.at(l); }
  const CutsetStructure& tier(std::size_t l) const { return tiers_.at(l); }
  const EulerForest& query_forest() const { return query_forest_; }

  // Full debug scan: tier-0 emptiness, nesting, forest consistency between
  // the three F_top representations, Search returning nothing on isolated
  // trees, and (when `edges` is given, or in edge-list mode) sketches equal
  // to their recomputation from the edge set.
  InvariantReport check_invariants(const std::vector<EdgeKey>* edges = nullptr);

  SpaceTally space() const;
  const EngineCounters& counters() const { return counters_; }

 private:
  void check_edge(EdgeKey e) const;
  std::size_t size_on(std::size_t tier, Vertex v) const;
  void refresh(EdgeKey e);
  void promote(EdgeKey e, int tier);
  void demote(EdgeKey e);
  void remove_from_top(EdgeKey e);

  ConnectivityConfig config_;
  std::vector<CutsetStructure> tiers_;
  EulerForest query_forest_;
  LinkCutForest path_index_;
  std::unordered_map<EdgeKey, int, EdgeKeyHash> tier_of_edge_;
  std::vector<ForestChangeEvent> events_;
  EngineCounters counters_;
};

}  // namespace dynconn

#endif  // DYNCONN_CONNECTIVITY_H_
