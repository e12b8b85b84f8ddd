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

#ifndef DYNCONN_EULER_FOREST_H_
#define DYNCONN_EULER_FOREST_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynconn/edge_key.h"

namespace dynconn {

// Handle naming one tree of an EulerForest. It is the root of the tree's
// sequence structure, so any link or cut touching the tree invalidates it;
// re-resolve with find_tree() after structural changes.
struct TreeId {
  std::uint32_t value = 0;
  friend auto operator<=>(const TreeId&, const TreeId&) = default;
};

// Euler-tour forest over vertices [0, n).
//
// Each tree is stored as a cyclic sequence holding one leaf per vertex and
// two leaves per tree edge (one per direction). The sequence lives in a
// height-balanced multiway tree whose non-root internal nodes have between
// `branching` and 2*branching - 1 children (branching = 2 gives a 2-3 tree;
// branching = ceil(lg n) gives the shallow variant used for fast root
// lookups). Every vertex carries a payload of `payload_words` words and every
// internal node caches the XOR of the payloads below it. Those caches are
// refreshed lazily: structural changes only mark paths dirty and
// aggregate() recomputes what it reads.
class EulerForest {
 public:
  EulerForest(std::size_t n, std::size_t payload_words, std::size_t branching);

  EulerForest(const EulerForest&) = delete;
  EulerForest& operator=(const EulerForest&) = delete;
  EulerForest(EulerForest&&) noexcept = default;
  EulerForest& operator=(EulerForest&&) noexcept = default;

  std::size_t vertex_count() const { return n_; }
  std::size_t payload_words() const { return words_; }
  std::size_t branching() const { return min_fanout_; }
  std::size_t edge_count() const { return arcs_.size() / 2; }

  // Throws UsageError if u and v are already in one tree (including u == v).
  void link(Vertex u, Vertex v);
  // Throws UsageError if {u, v} is not a tree edge.
  void cut(Vertex u, Vertex v);

  bool has_edge(Vertex u, Vertex v) const;
  TreeId find_tree(Vertex v) const;
  bool connected(Vertex u, Vertex v) const {
    return find_tree(u) == find_tree(v);
  }

  // Number of vertices in the tree. Throws UsageError on a stale id.
  std::size_t tree_size(TreeId t) const;

  // XOR of payloads over the tree's vertices; valid until the next mutating
  // call. Throws UsageError on a stale id.
  std::span<const Word> aggregate(TreeId t);

  std::span<const Word> payload(Vertex v) const;

  // payload(v) ^= delta. Throws ParameterError unless delta has
  // payload_words() words.
  void xor_payload(Vertex v, std::span<const Word> delta);
  // XORs delta into payload(v) starting at word `offset`.
  void xor_payload(Vertex v, std::size_t offset, std::span<const Word> delta);

  // Tree edges as canonical keys, unordered.
  std::vector<EdgeKey> edges() const;

  // Vertices of v's tree in tour order (debug and test helper).
  std::vector<Vertex> tree_vertices(Vertex v) const;

  // Words held by the forest: vertex payloads and internal-node aggregates.
  std::size_t payload_word_count() const { return n_ * words_; }
  std::size_t aggregate_word_count() const;
  std::size_t node_count() const { return nodes_.size() - free_.size(); }

  // Recomputes every aggregate from scratch and compares it with the lazily
  // maintained one; also checks structural invariants (heights, fanout,
  // counts, parent links). Returns false on any inconsistency.
  bool self_check();

 private:
  static constexpr std::uint32_t kNil = 0xffffffffu;

  struct Node {
    std::uint32_t parent = kNil;
    std::uint32_t height = 0;  // 0 for leaves
    std::uint32_t vertices = 0;
    std::uint32_t leaves = 0;
    bool dirty = false;
    bool in_use = false;
    std::vector<std::uint32_t> children;
  };

  bool is_leaf(std::uint32_t x) const { return nodes_[x].height == 0; }
  Word* agg_ptr(std::uint32_t x) { return aggs_.data() + std::size_t{x} * words_; }
  const Word* agg_ptr(std::uint32_t x) const {
    return aggs_.data() + std::size_t{x} * words_;
  }

  std::uint32_t alloc_node(std::uint32_t height);
  void free_node(std::uint32_t x);
  std::uint32_t root_of(std::uint32_t x) const;
  void pull(std::uint32_t x);
  void adopt(std::uint32_t parent);
  std::uint32_t make_parent(std::vector<std::uint32_t> children);
  void mark_dirty_upward(std::uint32_t x);
  void clean(std::uint32_t x);

  std::uint32_t join(std::uint32_t left, std::uint32_t right);
  std::uint32_t join_equal(std::uint32_t left, std::uint32_t right);
  std::uint32_t join_into_left(std::uint32_t left, std::uint32_t right);
  std::uint32_t join_into_right(std::uint32_t left, std::uint32_t right);
  std::uint32_t fix_overflow(std::uint32_t x);
  std::uint32_t piece(std::vector<std::uint32_t> children,
                      std::uint32_t reuse);
  // Splits x's sequence so that x starts the second part.
  std::pair<std::uint32_t, std::uint32_t> split_before(std::uint32_t leaf);
  std::size_t index_of(std::uint32_t leaf) const;
  std::uint32_t leaf_at(std::uint32_t root, std::size_t index) const;
  std::uint32_t reroot(Vertex v);
  // Removes the first leaf of a sequence; returns the remainder root.
  std::uint32_t drop_first(std::uint32_t root);

  void check_tree(std::uint32_t t) const;
  bool check_node(std::uint32_t x, bool is_root, std::vector<Word>& out);

  static std::uint64_t arc_key(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t min_fanout_ = 2;
  std::size_t max_fanout_ = 3;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> free_;
  std::vector<Word> aggs_;
  std::unordered_map<std::uint64_t, std::uint32_t> arcs_;
};

}  // namespace dynconn

#endif  // DYNCONN_EULER_FOREST_H_
