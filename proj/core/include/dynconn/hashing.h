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

#ifndef DYNCONN_HASHING_H_
#define DYNCONN_HASHING_H_

// Seeded hash families used by the cutset sketches.
//
//   PairwiseHash  ((a*key + b) mod (2^61 - 1)) mod 2^out_bits, with residue
//                 0 mapped to 2^out_bits so the range is [1, 2^out_bits].
//                 Drives level sampling (out_bits = levelNum) and the tag
//                 partition functions (out_bits = 1).
//   OddHash       f(x) = 1 iff x != 0 and (k*x mod 2^w) <= t, k odd. Any
//                 fixed nonempty set has an odd number of ones under a
//                 random f with probability at least 1/8.
//
// Parameters come from a splitmix64 stream keyed by a 64-bit seed, so the
// same seed reproduces the same functions on every platform.

#include <cstddef>
#include <cassert>
#include <cstdint>

namespace dynconn {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

// splitmix64 (Steele, Lea, Flood). Also used for every other seeded choice in
// the library so traces replay bit-identically.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t operator()() { return next(); }
  using result_type = std::uint64_t;
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

 private:
  std::uint64_t state_;
};

// (a*x + b) mod (2^61 - 1) for a, b, x < 2^61.
namespace detail {
__extension__ typedef unsigned __int128 u128;
}  // namespace detail

inline std::uint64_t mul_add_mod_mersenne61(std::uint64_t a, std::uint64_t x,
                                            std::uint64_t b) {
  const detail::u128 v = static_cast<detail::u128>(a) * x + b;
  std::uint64_t r = static_cast<std::uint64_t>(v & kMersenne61) +
                    static_cast<std::uint64_t>(v >> 61);
  r = (r & kMersenne61) + (r >> 61);
  if (r >= kMersenne61) r -= kMersenne61;
  return r;
}

struct PairwiseHash {
  std::uint64_t a = 1;
  std::uint64_t b = 0;
  std::uint64_t p = kMersenne61;
  unsigned out_bits = 1;

  // Draws a in [1, p) and b in [0, p) from splitmix64(seed).
  // Throws ParameterError unless 1 <= out_bits <= 61.
  static PairwiseHash from_seed(std::uint64_t seed, unsigned out_bits);

  // Value in [1, 2^out_bits]; key must be below p.
  std::uint64_t operator()(std::uint64_t key) const {
    assert(key < p);
    const std::uint64_t r =
        p == kMersenne61
            ? mul_add_mod_mersenne61(a, key, b)
            : static_cast<std::uint64_t>(
                  (static_cast<detail::u128>(a) * key + b) % p);
    const std::uint64_t range = std::uint64_t{1} << out_bits;
    const std::uint64_t low = r & (range - 1);
    return low == 0 ? range : low;
  }

  friend bool operator==(const PairwiseHash&, const PairwiseHash&) = default;
};

// True iff `key` is kept at sampling level i, i.e. h(key) <= 2^i. Level
// h.out_bits keeps everything. Monotone in i.
bool sampled_at_level(const PairwiseHash& h, std::uint64_t key, unsigned i);

// Lowest level at which `key` is kept; it is kept at all levels above too.
unsigned lowest_sampled_level(const PairwiseHash& h, std::uint64_t key);

struct OddHash {
  std::uint64_t k = 1;  // odd, in [1, 2^w]
  std::uint64_t t = 1;  // in [1, 2^w]
  unsigned w = 2;

  // Throws ParameterError unless 2 <= w <= 61.
  static OddHash from_seed(std::uint64_t seed, unsigned w);

  // x must be below 2^w.
  bool operator()(std::uint64_t x) const {
    if (x == 0) return false;
    const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
    return ((k * x) & mask) <= t;
  }

  friend bool operator==(const OddHash&, const OddHash&) = default;
};

}  // namespace dynconn

#endif  // DYNCONN_HASHING_H_
