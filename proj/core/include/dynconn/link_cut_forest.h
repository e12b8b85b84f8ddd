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

#ifndef DYNCONN_LINK_CUT_FOREST_H_
#define DYNCONN_LINK_CUT_FOREST_H_

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dynconn/edge_key.h"

namespace dynconn {

// Sleator-Tarjan dynamic trees over vertices [0, n) with an integer weight
// on every tree edge. Each edge is represented by its own splay node so
// path aggregates range over edges only. Used to find the highest-tier edge
// on a spanning-forest path.
class LinkCutForest {
 public:
  struct PathMax {
    EdgeKey edge;
    int weight = 0;
  };

  explicit LinkCutForest(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Throws UsageError if u and v are already connected (including u == v).
  void link(Vertex u, Vertex v, int weight);
  // Throws UsageError if {u, v} is not an edge.
  void cut(Vertex u, Vertex v);

  bool connected(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  // Weight of an existing edge; throws UsageError otherwise.
  int weight(Vertex u, Vertex v) const;

  // An edge of maximum weight on the u-v path. Ties are broken arbitrarily.
  // Throws UsageError if u == v or they are not connected.
  PathMax path_max(Vertex u, Vertex v);

  std::vector<std::pair<EdgeKey, int>> edges() const;

 private:
  static constexpr std::uint32_t kNil = 0xffffffffu;
  static constexpr int kNoWeight = -1;

  struct Node {
    std::uint32_t child[2] = {kNil, kNil};
    std::uint32_t parent = kNil;
    int weight = kNoWeight;
    std::uint32_t best = kNil;  // node holding the max weight in the splay subtree
    bool flip = false;
  };

  bool is_splay_root(std::uint32_t x) const;
  void push(std::uint32_t x);
  void update(std::uint32_t x);
  void rotate(std::uint32_t x);
  void splay(std::uint32_t x);
  void access(std::uint32_t x);
  void make_root(std::uint32_t x);
  std::uint32_t find_root(std::uint32_t x);
  void raw_link(std::uint32_t child, std::uint32_t parent);
  void raw_cut(std::uint32_t u, std::uint32_t v);
  int best_weight(std::uint32_t x) const {
    return x == kNil || nodes_[x].best == kNil ? kNoWeight
                                               : nodes_[nodes_[x].best].weight;
  }
  void check_vertex(Vertex v) const;

  std::size_t n_;
  std::vector<Node> nodes_;
  std::vector<EdgeKey> edge_of_node_;  // indexed by node id - n_
  std::vector<std::uint32_t> free_;
  std::unordered_map<EdgeKey, std::uint32_t, EdgeKeyHash> edges_;
};

}  // namespace dynconn

#endif  // DYNCONN_LINK_CUT_FOREST_H_
