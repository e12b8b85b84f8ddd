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

#include <gtest/gtest.h>

#include <set>

#include "dynconn/errors.h"

namespace dynconn {
namespace {

TEST(SplitMix64Test, MatchesReferenceStream) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64Test, BelowStaysInRange) {
  SplitMix64 rng(3);
  for (int i = 0; i < 10000; ++i) EXPECT_LT(rng.below(7), 7u);
  EXPECT_EQ(rng.below(1), 0u);
}

TEST(PairwiseHashTest, SameSeedSameParameters) {
  EXPECT_EQ(PairwiseHash::from_seed(7, 8), PairwiseHash::from_seed(7, 8));
}

TEST(PairwiseHashTest, PinnedParameters) {
  const PairwiseHash h7 = PairwiseHash::from_seed(7, 8);
  const PairwiseHash h8 = PairwiseHash::from_seed(8, 8);
  EXPECT_EQ(h7.a, 0x03cbe1e459320ddeULL);
  EXPECT_EQ(h7.b, 0x044c3cd7f43c661cULL);
  EXPECT_EQ(h8.a, 0x1e5651b0ef95363fULL);
  EXPECT_EQ(h8.b, 0x1ca8a164477d7805ULL);
  EXPECT_NE(h7.a, h8.a);
  EXPECT_NE(h7.b, h8.b);
  EXPECT_EQ(h7(0), 28u);
  EXPECT_EQ(h7(1), 250u);
  EXPECT_EQ(h7(123456789), 219u);
  EXPECT_EQ(h8(2), 133u);
  EXPECT_EQ(h8(1000), 209u);
}

TEST(PairwiseHashTest, OutBitsRange) {
  EXPECT_THROW(PairwiseHash::from_seed(7, 0), ParameterError);
  EXPECT_THROW(PairwiseHash::from_seed(7, 62), ParameterError);
  EXPECT_NO_THROW(PairwiseHash::from_seed(7, 61));
  for (std::uint64_t s = 0; s < 1000; ++s) {
    EXPECT_NE(PairwiseHash::from_seed(s, 4).a, 0u);
  }
}

TEST(PairwiseHashTest, IdentityParameters) {
  const PairwiseHash h{1, 0, kMersenne61, 4};
  EXPECT_EQ(h(5), 5u);
  EXPECT_EQ(h(16), 16u);  // residue 0 maps to the top of the range
  EXPECT_EQ(h(17), 1u);
}

TEST(PairwiseHashTest, MersenneReductionMatchesWideModulo) {
  SplitMix64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t a = 1 + rng.below(kMersenne61 - 1);
    const std::uint64_t b = rng.below(kMersenne61);
    const std::uint64_t x = rng.below(kMersenne61);
    const auto wide = static_cast<std::uint64_t>(
        (static_cast<detail::u128>(a) * x + b) % kMersenne61);
    ASSERT_EQ(mul_add_mod_mersenne61(a, x, b), wide);
  }
}

TEST(PairwiseHashTest, CollisionRateWithinPairwiseBound) {
  constexpr unsigned kBits = 6;
  constexpr int kTrials = 100000;
  SplitMix64 rng(5);
  int collisions = 0;
  for (int i = 0; i < kTrials; ++i) {
    const PairwiseHash h = PairwiseHash::from_seed(rng.next(), kBits);
    const std::uint64_t x = rng.below(1u << 20);
    std::uint64_t y;
    do {
      y = rng.below(1u << 20);
    } while (y == x);
    collisions += h(x) == h(y);
  }
  EXPECT_LE(collisions, 2.0 * kTrials / (1u << kBits));
}

TEST(LevelSamplingTest, ThresholdAndAlwaysOnLevel) {
  // With identity parameters h(3) = 3.
  const PairwiseHash h{1, 0, kMersenne61, 4};
  EXPECT_FALSE(sampled_at_level(h, 3, 1));
  EXPECT_TRUE(sampled_at_level(h, 3, 2));
  EXPECT_EQ(lowest_sampled_level(h, 3), 2u);
  EXPECT_EQ(lowest_sampled_level(h, 1), 0u);
  EXPECT_EQ(lowest_sampled_level(h, 16), 4u);
  EXPECT_TRUE(sampled_at_level(h, 15, 4));
}

TEST(LevelSamplingTest, MonotoneAndConsistentWithLowestLevel) {
  SplitMix64 rng(9);
  for (int i = 0; i < 10000; ++i) {
    const PairwiseHash h = PairwiseHash::from_seed(rng.next(), 12);
    const std::uint64_t key = rng.below(1u << 24);
    const unsigned low = lowest_sampled_level(h, key);
    for (unsigned lvl = 0; lvl <= 12; ++lvl) {
      ASSERT_EQ(sampled_at_level(h, key, lvl), lvl >= low);
    }
  }
}

TEST(OddHashTest, PinnedParameters) {
  const OddHash f7 = OddHash::from_seed(7, 16);
  const OddHash f8 = OddHash::from_seed(8, 16);
  EXPECT_EQ(f7.k, 0x1bafu);
  EXPECT_EQ(f7.t, 0x661du);
  EXPECT_EQ(f8.k, 0x6c6du);
  EXPECT_EQ(f8.t, 0x7802u);
  EXPECT_EQ(OddHash::from_seed(7, 16), f7);
}

TEST(OddHashTest, MultiplierIsOddAndInRange) {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const OddHash f = OddHash::from_seed(s, 10);
    EXPECT_EQ(f.k % 2, 1u);
    EXPECT_LE(f.k, 1u << 10);
    EXPECT_GE(f.t, 1u);
    EXPECT_LE(f.t, 1u << 10);
  }
}

TEST(OddHashTest, WidthRange) {
  EXPECT_THROW(OddHash::from_seed(1, 1), ParameterError);
  EXPECT_THROW(OddHash::from_seed(1, 62), ParameterError);
}

TEST(OddHashTest, Definition) {
  const OddHash f{3, 5, 4};
  EXPECT_TRUE(f(7));   // 21 mod 16 = 5
  EXPECT_FALSE(f(2));  // 6 > 5
  EXPECT_FALSE(f(0));
  const OddHash g{1, 16, 4};
  EXPECT_FALSE(g(0));
  EXPECT_TRUE(g(15));
}

}  // namespace
}  // namespace dynconn
