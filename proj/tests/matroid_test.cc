// Copyright 2026 The Authors.
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

#include "bmpart/matroid.h"

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"

namespace bmpart {
namespace {

using oracle::BruteForceOpt;
using oracle::DependentBySubsets;

std::vector<Gf2Vector> Vecs(std::initializer_list<Word> bits, int dim) {
  std::vector<Gf2Vector> out;
  for (Word b : bits) out.emplace_back(b, dim);
  return out;
}

TEST(BinaryMatroidTest, Examples) {
  const BinaryMatroid b3(3);
  EXPECT_FALSE(IsIndependentBinary(b3, Vecs({0}, 3)));
  EXPECT_TRUE(IsIndependentBinary(b3, {}));
  EXPECT_FALSE(IsIndependentBinary(b3, Vecs({0b011, 0b101, 0b110}, 3)));
  EXPECT_TRUE(IsIndependentBinary(b3, Vecs({0b011, 0b101, 0b111}, 3)));
}

TEST(BinaryMatroidTest, DuplicatesAreDependent) {
  EXPECT_FALSE(IsIndependentBinary(BinaryMatroid(3), Vecs({0b101, 0b101}, 3)));
}

TEST(BinaryMatroidTest, DimensionMismatch) {
  EXPECT_THROW(IsIndependentBinary(BinaryMatroid(3), Vecs({1}, 4)),
               DimensionMismatch);
}

TEST(PartitionReductionTest, ConstructorValidates) {
  EXPECT_THROW(PartitionReduction(2, {{1}}), std::invalid_argument);
  EXPECT_THROW(PartitionReduction(2, {{0}, {}}), std::invalid_argument);
  EXPECT_THROW(PartitionReduction(2, {{1, 3}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(PartitionReduction(2, {{4}, {}}), std::invalid_argument);
  const PartitionReduction p(3, {{1}, {}, {6, 7}});
  EXPECT_EQ(p.TotalSize(), 3u);
  EXPECT_EQ(p.MaxPartSize(), 2u);
  EXPECT_EQ(p.ResidualSize(), 5u);
  EXPECT_EQ(p.PartOf(7), 2);
  EXPECT_EQ(p.PartOf(2), -1);
  EXPECT_FALSE(p.validated());
}

TEST(PartitionIndependenceTest, Examples) {
  const PartitionReduction p(2, {{0b01, 0b11}, {0b10}});
  const std::vector<Word> empty;
  const std::vector<Word> same_part{0b01, 0b11};
  const std::vector<Word> across{0b11, 0b10};
  EXPECT_TRUE(IsIndependentPartition(p, empty));
  EXPECT_FALSE(IsIndependentPartition(p, same_part));
  EXPECT_TRUE(IsIndependentPartition(p, across));
}

TEST(PartitionIndependenceTest, DistinguishesOutsideGroundFromSharedPart) {
  const PartitionReduction p(3, {{1, 3}, {2}, {}});
  const std::vector<Word> outside{1, 4};
  const std::vector<Word> shared{1, 3};
  const std::vector<Word> zero{0};
  EXPECT_EQ(ClassifyPartitionSet(p, outside), PartitionVerdict::kOutsideGround);
  EXPECT_EQ(ClassifyPartitionSet(p, shared), PartitionVerdict::kSharedPart);
  EXPECT_EQ(ClassifyPartitionSet(p, zero), PartitionVerdict::kOutsideGround);
  EXPECT_FALSE(IsIndependentPartition(p, outside));
}

TEST(MaxWeightIndependentTest, AllZeroWeights) {
  std::vector<WeightedElement> elems;
  for (Word v = 0; v < 8; ++v) elems.push_back({v, 0.0});
  EXPECT_EQ(MaxWeightIndependent(BinaryOracle(3), elems).total_weight, 0.0);
}

TEST(MaxWeightIndependentTest, IndicatorOnB3) {
  std::vector<WeightedElement> elems;
  for (Word v = 0; v < 8; ++v) {
    const bool in_x = v == 0b001 || v == 0b010 || v == 0b011;
    elems.push_back({v, in_x ? 1.0 : 0.0});
  }
  // Oracle value: exhaustive over all independent subsets of F_2^3.
  const IndependenceOracle by_subsets = [](std::span<const Word> s) {
    return !DependentBySubsets(std::vector<Word>(s.begin(), s.end()));
  };
  ASSERT_EQ(BruteForceOpt(elems, by_subsets), 2.0);
  EXPECT_EQ(MaxWeightIndependent(BinaryOracle(3), elems).total_weight, 2.0);
}

TEST(MaxWeightIndependentTest, PartitionTakesOnePerPart) {
  const PartitionReduction p(2, {{0b10, 0b11}, {}});
  const GreedyResult r =
      MaxWeightIndependent(PartitionOracle(p), {{0b10, 5.0}, {0b11, 7.0}});
  EXPECT_EQ(r.total_weight, 7.0);
  EXPECT_EQ(r.set, std::vector<Word>{0b11});
}

TEST(MaxWeightIndependentTest, TiesBrokenByVectorValue) {
  const PartitionReduction p(2, {{0b10, 0b11}, {}});
  const GreedyResult r =
      MaxWeightIndependent(PartitionOracle(p), {{0b11, 1.0}, {0b10, 1.0}});
  EXPECT_EQ(r.set, std::vector<Word>{0b10});
}

TEST(MaxWeightIndependentTest, DuplicatesCollapse) {
  const GreedyResult r = MaxWeightIndependent(
      BinaryOracle(2), {{0b01, 1.0}, {0b01, 1.0}, {0b01, 1.0}});
  EXPECT_EQ(r.total_weight, 1.0);
}

TEST(MaxWeightIndependentTest, RejectsNegativeWeight) {
  EXPECT_THROW(MaxWeightIndependent(BinaryOracle(2), {{1, -1.0}}),
               std::invalid_argument);
}

TEST(MaxWeightPropertyTest, IndicatorWeightsGiveRankExhaustively) {
  for (int d = 1; d <= 4; ++d) {
    const Word n = Word{1} << d;
    const IndependenceOracle oracle = BinaryOracle(d);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<WeightedElement> elems;
      std::vector<Word> x;
      for (Word v = 0; v < n; ++v) {
        const bool in_x = (mask >> v) & 1U;
        elems.push_back({v, in_x ? 1.0 : 0.0});
        if (in_x) x.push_back(v);
      }
      ASSERT_EQ(MaxWeightIndependent(oracle, elems).total_weight, RankBits(x));
    }
  }
}

TEST(MaxWeightPropertyTest, IndicatorWeightsGiveRankRandomized) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 5 + static_cast<int>(rng.Below(8));
    std::vector<WeightedElement> elems;
    std::vector<Word> x;
    for (int i = 0; i < 40; ++i) {
      const Word v = static_cast<Word>(rng.Below(std::uint64_t{1} << d));
      const bool in_x = rng.Bernoulli(0.3);
      elems.push_back({v, in_x ? 1.0 : 0.0});
      if (in_x) x.push_back(v);
    }
    // A vector drawn twice keeps its heaviest copy.
    ASSERT_EQ(MaxWeightIndependent(BinaryOracle(d), elems).total_weight,
              RankBits(x));
  }
}

TEST(MaxWeightPropertyTest, GreedyMatchesBruteForce) {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng.Below(4));
    const Word n = Word{1} << d;
    std::vector<Word> pool(n);
    for (Word v = 0; v < n; ++v) pool[v] = v;
    for (std::size_t i = pool.size(); i > 1; --i) {
      std::swap(pool[i - 1], pool[rng.Below(i)]);
    }
    const std::size_t m = std::min<std::size_t>(n, 1 + rng.Below(12));
    std::vector<WeightedElement> elems;
    for (std::size_t i = 0; i < m; ++i) {
      elems.push_back({pool[i], static_cast<double>(rng.Below(10))});
    }
    const IndependenceOracle oracle = BinaryOracle(d);
    ASSERT_EQ(MaxWeightIndependent(oracle, elems).total_weight,
              BruteForceOpt(elems, oracle));

    // Random partition of the same pool, checked the same way.
    std::vector<std::vector<Word>> parts(d);
    for (std::size_t i = 0; i < m; ++i) {
      if (pool[i] != 0) parts[rng.Below(d)].push_back(pool[i]);
    }
    const PartitionReduction p(d, parts);
    std::vector<WeightedElement> in_ground;
    for (const auto& e : elems) {
      if (e.vector != 0) in_ground.push_back(e);
    }
    const IndependenceOracle part_oracle = PartitionOracle(p);
    ASSERT_EQ(MaxWeightIndependent(part_oracle, in_ground).total_weight,
              BruteForceOpt(in_ground, part_oracle));
  }
}

TEST(MaxWeightPropertyTest, OptIsMonotone) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng.Below(10));
    std::vector<WeightedElement> elems;
    double previous = 0;
    for (int i = 0; i < 15; ++i) {
      elems.push_back({static_cast<Word>(rng.Below(std::uint64_t{1} << d)),
                       rng.Uniform01()});
      const double now = MaxWeightIndependent(BinaryOracle(d), elems)
                             .total_weight;
      ASSERT_GE(now, previous - 1e-12);
      previous = now;
    }
  }
}

}  // namespace
}  // namespace bmpart
