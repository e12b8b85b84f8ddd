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

#include "dynconn/cutset.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>

#include "dynconn/errors.h"

namespace dynconn {

namespace {

std::string describe(EdgeKey e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

}  // namespace

unsigned level_num_for(std::size_t n) {
  if (n < 2) return 1;
  return static_cast<unsigned>(std::bit_width(n * n - 1));
}

SketchLayout SketchLayout::make(std::size_t n, std::size_t tag_pairs) {
  SketchLayout s;
  s.n = n;
  s.vertex_bits = dynconn::vertex_bits(n);
  s.name_bits = 2 * s.vertex_bits;
  s.level_num = level_num_for(n);
  s.tag_pairs = tag_pairs;
  s.words_per_level = (s.name_bits + 2 * tag_pairs + kWordBits - 1) / kWordBits;
  return s;
}

bool tags_pass(const SketchLayout& layout, std::span<const Word> block) {
  if (layout.tag_pairs == 0) return true;
  // Pairs start at an even bit (name_bits is even), so both bits of a pair
  // share a word and sit at (even, even + 1).
  constexpr Word kEven = 0x5555555555555555ULL;
  const std::size_t first = layout.name_bits;
  const std::size_t last = layout.tag_bit(layout.tag_pairs - 1, 1);
  for (std::size_t w = first / kWordBits; w <= last / kWordBits; ++w) {
    Word word = block[w];
    if (w == 0) word &= ~layout.name_mask();
    if ((word & (word >> 1) & kEven) != 0) return false;
  }
  return true;
}

SketchHashes SketchHashes::draw(const SketchLayout& layout,
                                std::uint64_t seed) {
  SplitMix64 rng(seed);
  SketchHashes h;
  h.level = PairwiseHash::from_seed(rng.next(), layout.level_num);
  const auto w = static_cast<unsigned>(layout.name_bits);
  h.partition.reserve(layout.tag_pairs);
  h.odd.reserve(2 * layout.tag_pairs);
  for (std::size_t j = 0; j < layout.tag_pairs; ++j) {
    h.partition.push_back(PairwiseHash::from_seed(rng.next(), 1));
    h.odd.push_back(OddHash::from_seed(rng.next(), w));
    h.odd.push_back(OddHash::from_seed(rng.next(), w));
  }
  return h;
}

void SketchHashes::block(const SketchLayout& layout, Word name,
                         std::span<Word> out) const {
  std::fill(out.begin(), out.end(), Word{0});
  out[0] = name;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    const auto b = static_cast<unsigned>(partition[j](name) - 1);
    if (odd[2 * j + b](name)) {
      const std::size_t bit = layout.tag_bit(j, b);
      out[bit / kWordBits] |= Word{1} << (bit % kWordBits);
    }
  }
}

CutsetStructure::CutsetStructure(std::size_t n, std::uint64_t seed,
                                 CutsetParams params)
    : layout_(SketchLayout::make(n < 2 ? 2 : n, params.tag_pairs)),
      mode_(params.mode),
      scan_(params.scan),
      forest_(n < 2 ? 2 : n, layout_.payload_words(), params.branching) {
  if (n < 2) {
    throw ParameterError("cutset structure needs n >= 2, got " +
                         std::to_string(n));
  }
  if (layout_.name_bits > 60) {
    throw ParameterError("vertex count too large for 64-bit edge names");
  }
  hashes_ = SketchHashes::draw(layout_, seed);
  block_.assign(layout_.words_per_level, 0);
  delta_.assign(layout_.payload_words(), 0);
}

void CutsetStructure::check_edge(EdgeKey e) const {
  if (!e.valid_for(layout_.n)) {
    throw ParameterError("edge " + describe(e) + " invalid for n = " +
                         std::to_string(layout_.n));
  }
}

void CutsetStructure::edge_block(EdgeKey e, std::span<Word> out) const {
  hashes_.block(layout_, encode_name(e, layout_.n), out);
}

// XORs e's block into both endpoints at every level that samples e.
void CutsetStructure::apply(EdgeKey e) {
  const std::size_t wpl = layout_.words_per_level;
  edge_block(e, block_);
  const unsigned low = lowest_sampled_level(hashes_.level, encode_name(e, layout_.n));
  const std::size_t count = layout_.levels() - low;
  std::span<Word> delta(delta_.data(), count * wpl);
  for (std::size_t i = 0; i < count; ++i) {
    std::copy(block_.begin(), block_.end(), delta.begin() + i * wpl);
  }
  forest_.xor_payload(e.x, low * wpl, delta);
  forest_.xor_payload(e.y, low * wpl, delta);
}

void CutsetStructure::insert_edge(EdgeKey e) {
  check_edge(e);
  if (mode_ == VerifyMode::kEdgeList && !edge_list_.insert(e).second) {
    throw UsageError("insert_edge: " + describe(e) + " already present");
  }
  apply(e);
}

void CutsetStructure::delete_edge(EdgeKey e) {
  check_edge(e);
  if (mode_ == VerifyMode::kEdgeList && edge_list_.erase(e) == 0) {
    throw UsageError("delete_edge: " + describe(e) + " not present");
  }
  if (forest_.has_edge(e.x, e.y)) forest_.cut(e.x, e.y);
  apply(e);
}

void CutsetStructure::make_tree_edge(EdgeKey e) {
  check_edge(e);
  forest_.link(e.x, e.y);
}

void CutsetStructure::make_nontree_edge(EdgeKey e) {
  check_edge(e);
  forest_.cut(e.x, e.y);
}

SearchResult CutsetStructure::search(TreeId t) {
  std::span<const Word> agg = forest_.aggregate(t);
  const std::size_t wpl = layout_.words_per_level;
  const Word mask = layout_.name_mask();
  SearchResult result;
  for (std::size_t i = 0; i < layout_.levels(); ++i) {
    const Word z = agg[i * wpl] & mask;
    if (z == 0) continue;
    result.level = static_cast<int>(i);
    result.verdict = verify(t, z, agg.subspan(i * wpl, wpl));
    if (result.verdict == SearchVerdict::kAccepted) {
      result.edge = decode_name(z, layout_.n);
      return result;
    }
    if (scan_ == SearchScan::kFirstNonzero) return result;
  }
  return result;
}

SearchVerdict CutsetStructure::verify(TreeId t, Word z,
                                      std::span<const Word> block) const {
  const auto decoded = decode_name(z, layout_.n);
  if (!decoded) return SearchVerdict::kUndecodable;
  if (mode_ == VerifyMode::kSketch) {
    if (!tags_pass(layout_, block)) return SearchVerdict::kTagCollision;
  } else if (!edge_list_.contains(*decoded)) {
    return SearchVerdict::kNotAnEdge;
  }
  const bool x_in = forest_.find_tree(decoded->x) == t;
  const bool y_in = forest_.find_tree(decoded->y) == t;
  if (x_in == y_in) return SearchVerdict::kNotCrossing;
  return SearchVerdict::kAccepted;
}

std::vector<Word> CutsetStructure::recompute_payload(
    Vertex v, std::span<const EdgeKey> edges) const {
  const std::size_t wpl = layout_.words_per_level;
  std::vector<Word> out(layout_.payload_words(), 0);
  std::vector<Word> block(wpl);
  for (const EdgeKey& e : edges) {
    if (e.x != v && e.y != v) continue;
    edge_block(e, block);
    const Word name = encode_name(e, layout_.n);
    for (unsigned i = 0; i < layout_.levels(); ++i) {
      if (!sampled_at_level(hashes_.level, name, i)) continue;
      for (std::size_t w = 0; w < wpl; ++w) out[i * wpl + w] ^= block[w];
    }
  }
  return out;
}

bool CutsetStructure::sketches_match(std::span<const EdgeKey> edges) const {
  const std::size_t wpl = layout_.words_per_level;
  const std::size_t words = layout_.payload_words();
  std::vector<Word> expect(layout_.n * words, 0);
  std::vector<Word> block(wpl);
  for (const EdgeKey& e : edges) {
    edge_block(e, block);
    const unsigned low =
        lowest_sampled_level(hashes_.level, encode_name(e, layout_.n));
    for (Vertex v : {e.x, e.y}) {
      Word* dst = expect.data() + v * words;
      for (unsigned i = low; i < layout_.levels(); ++i) {
        for (std::size_t w = 0; w < wpl; ++w) dst[i * wpl + w] ^= block[w];
      }
    }
  }
  for (Vertex v = 0; v < layout_.n; ++v) {
    const auto got = forest_.payload(v);
    if (!std::equal(got.begin(), got.end(), expect.begin() + v * words)) {
      return false;
    }
  }
  return true;
}

}  // namespace dynconn
