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

#ifndef DYNCONN_EDGE_KEY_H_
#define DYNCONN_EDGE_KEY_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>

namespace dynconn {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

// An undirected edge {x, y} stored with x < y. The fields are public so a
// key can be built raw; functions that consume keys validate them.
struct EdgeKey {
  Vertex x = 0;
  Vertex y = 0;

  // Orders the endpoints. Throws ParameterError on a self-loop.
  static EdgeKey canonical(Vertex u, Vertex v);

  bool valid_for(std::size_t n) const { return x < y && y < n; }

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
};

std::ostream& operator<<(std::ostream& os, const EdgeKey& e);

// Number of bits used to write one vertex id, i.e. ceil(lg n), at least 1.
std::size_t vertex_bits(std::size_t n);

// Width of an edge name: twice the vertex width.
inline std::size_t name_bits(std::size_t n) { return 2 * vertex_bits(n); }

// The edge name: binary of x followed by binary of y. Never zero because
// y >= 1. Throws ParameterError unless x < y < n.
Word encode_name(const EdgeKey& e, std::size_t n);

// Splits a name back into (x, y); nullopt unless x < y < n and no bits are
// set above the name width.
std::optional<EdgeKey> decode_name(Word z, std::size_t n);

// Packs the key into a single integer for hashing containers.
inline std::uint64_t pack(const EdgeKey& e) {
  return (static_cast<std::uint64_t>(e.x) << 32) | e.y;
}

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& e) const noexcept {
    std::uint64_t z = pack(e) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

}  // namespace dynconn

#endif  // DYNCONN_EDGE_KEY_H_
