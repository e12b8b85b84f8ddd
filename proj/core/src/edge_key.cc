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

#include "dynconn/edge_key.h"

#include <bit>
#include <string>

#include "dynconn/errors.h"

namespace dynconn {

EdgeKey EdgeKey::canonical(Vertex u, Vertex v) {
  if (u == v) {
    throw ParameterError("self-loop {" + std::to_string(u) + "," +
                         std::to_string(v) + "} is not an edge");
  }
  return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
}

std::ostream& operator<<(std::ostream& os, const EdgeKey& e) {
  return os << '{' << e.x << ',' << e.y << '}';
}

std::size_t vertex_bits(std::size_t n) {
  if (n <= 2) return 1;
  return static_cast<std::size_t>(std::bit_width(n - 1));
}

Word encode_name(const EdgeKey& e, std::size_t n) {
  if (!e.valid_for(n)) {
    throw ParameterError("edge (" + std::to_string(e.x) + "," +
                         std::to_string(e.y) + ") is not x < y < " +
                         std::to_string(n));
  }
  return (static_cast<Word>(e.x) << vertex_bits(n)) | e.y;
}

std::optional<EdgeKey> decode_name(Word z, std::size_t n) {
  const std::size_t bits = vertex_bits(n);
  if (2 * bits < kWordBits && (z >> (2 * bits)) != 0) return std::nullopt;
  const Word mask = (Word{1} << bits) - 1;
  EdgeKey e{static_cast<Vertex>(z >> bits), static_cast<Vertex>(z & mask)};
  if (!e.valid_for(n)) return std::nullopt;
  return e;
}

}  // namespace dynconn
