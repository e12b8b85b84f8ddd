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

#ifndef DYNCONN_CUTSET_H_
#define DYNCONN_CUTSET_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "dynconn/edge_key.h"
#include "dynconn/euler_forest.h"
#include "dynconn/hashing.h"

namespace dynconn {

// How Search confirms that a recovered name is a single crossing edge.
enum class VerifyMode {
  kSketch,    // tag parity check only; no edge list is stored
  kEdgeList,  // membership in an explicit list of current edges
};

// Bit layout of one vertex's sketch. Levels 0..level_num are stored (the
// last keeps every edge). Each level block is
//
//   [ name sum : name_bits ][ tag (j, b) at name_bits + 2j + b ] ...
//
// rounded up to whole words, so a block is words_per_level words and the
// vertex payload is (level_num + 1) * words_per_level words.
struct SketchLayout {
  std::size_t n = 0;
  std::size_t vertex_bits = 0;
  std::size_t name_bits = 0;
  unsigned level_num = 0;
  std::size_t tag_pairs = 0;
  std::size_t words_per_level = 0;

  static SketchLayout make(std::size_t n, std::size_t tag_pairs);

  std::size_t levels() const { return level_num + 1; }
  std::size_t payload_words() const { return levels() * words_per_level; }
  std::size_t tag_bit(std::size_t j, unsigned b) const {
    return name_bits + 2 * j + b;
  }
  Word name_mask() const { return (Word{1} << name_bits) - 1; }
};

// ceil(2 lg n): the smallest L with 2^L >= n^2.
unsigned level_num_for(std::size_t n);

// True iff no tag pair of the level block has both bits set.
bool tags_pass(const SketchLayout& layout, std::span<const Word> block);

// The random functions of one cutset structure: the level-sampling hash and,
// per tag pair j, a partition hash h_j and odd hashes f_{j,0}, f_{j,1}.
struct SketchHashes {
  PairwiseHash level;
  std::vector<PairwiseHash> partition;
  // f_{j,b} lives at index 2j + b.
  std::vector<OddHash> odd;

  static SketchHashes draw(const SketchLayout& layout, std::uint64_t seed);

  // Writes the level block of `name`: the name bits plus its tag bits.
  void block(const SketchLayout& layout, Word name, std::span<Word> out) const;
};

enum class SearchVerdict {
  kEmpty,         // every level sum is zero
  kAccepted,
  kUndecodable,   // the lowest nonzero sum is not x < y < n
  kTagCollision,  // some tag pair has both bits set
  kNotAnEdge,     // edge-list mode: decoded name is not a current edge
  kNotCrossing,   // decoded edge does not have exactly one endpoint in T
};

struct SearchResult {
  std::optional<EdgeKey> edge;
  int level = -1;  // level of the last candidate examined, -1 if none
  SearchVerdict verdict = SearchVerdict::kEmpty;
};

enum class SearchScan {
  kFirstNonzero,  // stop at the lowest nonzero level, accepted or not
  kAllLevels,     // after a rejection, try the next nonzero level
};

struct CutsetParams {
  std::size_t tag_pairs = 0;
  VerifyMode mode = VerifyMode::kSketch;
  std::size_t branching = 2;
  SearchScan scan = SearchScan::kFirstNonzero;
};

// One tier's cutset structure: XOR sketches of incident edge names per
// vertex and level, tag parities, and an Euler-tour forest that keeps the
// XOR of sketches over each tree. Search(T) reads the tree's aggregate and
// recovers an edge leaving T when the lowest nonzero level holds exactly
// one crossing edge.
//
// All hash functions are drawn from `seed` at construction. In kSketch mode
// deleting an edge that was never inserted silently corrupts the sketches;
// callers must only delete present edges.
class CutsetStructure {
 public:
  CutsetStructure(std::size_t n, std::uint64_t seed, CutsetParams params);

  std::size_t vertex_count() const { return layout_.n; }
  const SketchLayout& layout() const { return layout_; }
  VerifyMode mode() const { return mode_; }

  void insert_edge(EdgeKey e);
  // Also removes e from the forest if it is a tree edge.
  void delete_edge(EdgeKey e);
  void make_tree_edge(EdgeKey e);
  void make_nontree_edge(EdgeKey e);
  bool is_tree_edge(EdgeKey e) const { return forest_.has_edge(e.x, e.y); }

  SearchResult search(TreeId t);

  TreeId find_tree(Vertex v) const { return forest_.find_tree(v); }
  std::size_t tree_size(TreeId t) const { return forest_.tree_size(t); }
  EulerForest& forest() { return forest_; }
  const EulerForest& forest() const { return forest_; }

  const SketchHashes& hashes() const { return hashes_; }
  const PairwiseHash& level_hash() const { return hashes_.level; }

  // Edge-list mode only.
  bool has_edge(EdgeKey e) const { return edge_list_.contains(e); }
  std::size_t edge_list_size() const { return edge_list_.size(); }

  // The level block contributed by e (name bits plus its tag bits).
  void edge_block(EdgeKey e, std::span<Word> out) const;

  // Payload of v recomputed from an explicit edge set.
  std::vector<Word> recompute_payload(Vertex v,
                                      std::span<const EdgeKey> edges) const;
  // Compares every stored sketch with its recomputation.
  bool sketches_match(std::span<const EdgeKey> edges) const;

  std::size_t sketch_word_count() const {
    return layout_.n * layout_.payload_words();
  }

 private:
  void apply(EdgeKey e);
  void check_edge(EdgeKey e) const;
  SearchVerdict verify(TreeId t, Word z, std::span<const Word> block) const;

  SketchLayout layout_;
  VerifyMode mode_;
  SearchScan scan_;
  SketchHashes hashes_;
  EulerForest forest_;
  std::unordered_set<EdgeKey, EdgeKeyHash> edge_list_;
  std::vector<Word> block_;
  std::vector<Word> delta_;
};

}  // namespace dynconn

#endif  // DYNCONN_CUTSET_H_
