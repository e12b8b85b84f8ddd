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

#include "dynconn/hashing.h"

#include <bit>
#include <cassert>
#include <string>

#include "dynconn/errors.h"

namespace dynconn {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  assert(bound != 0);
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

PairwiseHash PairwiseHash::from_seed(std::uint64_t seed, unsigned out_bits) {
  if (out_bits < 1 || out_bits > 61) {
    throw ParameterError("pairwise hash out_bits must be in [1, 61], got " +
                         std::to_string(out_bits));
  }
  SplitMix64 rng(seed);
  PairwiseHash h;
  h.a = 1 + rng.below(kMersenne61 - 1);
  h.b = rng.below(kMersenne61);
  h.p = kMersenne61;
  h.out_bits = out_bits;
  return h;
}

bool sampled_at_level(const PairwiseHash& h, std::uint64_t key, unsigned i) {
  if (i >= h.out_bits) return true;
  return h(key) <= (std::uint64_t{1} << i);
}

unsigned lowest_sampled_level(const PairwiseHash& h, std::uint64_t key) {
  // h(key) <= 2^i  <=>  i >= ceil(lg h(key)) = bit_width(h(key) - 1).
  return static_cast<unsigned>(std::bit_width(h(key) - 1));
}

OddHash OddHash::from_seed(std::uint64_t seed, unsigned w) {
  if (w < 2 || w > 61) {
    throw ParameterError("odd hash width must be in [2, 61], got " +
                         std::to_string(w));
  }
  SplitMix64 rng(seed);
  OddHash f;
  f.w = w;
  f.k = 2 * rng.below(std::uint64_t{1} << (w - 1)) + 1;
  f.t = 1 + rng.below(std::uint64_t{1} << w);
  return f;
}

}  // namespace dynconn
