// Copyright 2026 The gbm Authors.
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

#include "gbm/pair_partition.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gbm/rational.h"
#include "test_util.h"

namespace gbm {
namespace {

using Cycle = std::vector<Pair>;

std::set<std::set<Pair>> AsSets(const std::vector<Cycle>& cycles) {
  std::set<std::set<Pair>> out;
  for (const Cycle& c : cycles) out.insert(std::set<Pair>(c.begin(), c.end()));
  return out;
}

TEST(PairPartitionTest, RejectsMalformedInput) {
  EXPECT_EQ(PairPartition({{2, 1}}).pairs(), std::vector<Pair>({{1, 2}}));
  EXPECT_THROW(PairPartition({{1, 2}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(PairPartition({{1, 3}}), std::invalid_argument);
  EXPECT_THROW(MakeColored({{1, 2}}, {1}, 1), std::invalid_argument);
}

TEST(PairPartitionTest, PartnerLookup) {
  const PairPartition v({{1, 4}, {2, 3}});
  EXPECT_TRUE(v.IsLeft(1));
  EXPECT_FALSE(v.IsLeft(3));
  EXPECT_EQ(v.Partner(4), 1);
  EXPECT_EQ(v.PairIndexOf(3), 1);
}

TEST(PairPartitionTest, EnumerationCountsAreDoubleFactorials) {
  const long expected[] = {1, 3, 15, 105, 945, 10395};
  for (int m = 1; m <= 6; ++m) {
    EXPECT_EQ(static_cast<long>(EnumeratePairPartitions(m).size()),
              expected[m - 1])
        << "m=" << m;
  }
}

TEST(PairPartitionTest, EnumerationIsDistinctAndSorted) {
  const auto all = EnumeratePairPartitions(4);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::set<PairPartition>(all.begin(), all.end()).size(), all.size());
}

TEST(PairPartitionTest, EnumerationCapacity) {
  EXPECT_THROW(EnumeratePairPartitions(kMaxEnumeratePairs + 1), CapacityError);
}

TEST(PairPartitionTest, ColoredEnumeration) {
  EXPECT_EQ(EnumerateColored(1, 2).size(), 2u);
  EXPECT_EQ(EnumerateColored(2, 2).size(), 12u);
  const auto one = EnumerateColored(2, 1);
  ASSERT_EQ(one.size(), 3u);
  for (const auto& p : one) {
    EXPECT_EQ(p.colors, std::vector<int>({0, 0}));
  }
}

TEST(PairPartitionTest, Crossings) {
  EXPECT_TRUE(Crossings(PairPartition({{1, 2}, {3, 4}})).empty());
  const auto c = Crossings(PairPartition({{1, 3}, {2, 4}}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], std::make_pair(Pair{1, 3}, Pair{2, 4}));
  EXPECT_EQ(Crossings(PairPartition({{1, 4}, {2, 5}, {3, 6}})).size(), 3u);
}

TEST(PairPartitionTest, NoncrossingHat) {
  EXPECT_EQ(NoncrossingHat(PairPartition({{1, 2}, {3, 4}})),
            PairPartition({{1, 2}, {3, 4}}));
  EXPECT_EQ(NoncrossingHat(PairPartition({{1, 3}, {2, 4}})),
            PairPartition({{1, 4}, {2, 3}}));
  EXPECT_EQ(NoncrossingHat(PairPartition({{1, 4}, {2, 5}, {3, 6}})),
            PairPartition({{1, 6}, {2, 5}, {3, 4}}));
}

TEST(PairPartitionTest, HatIsIdempotentNoncrossingAndKeepsLeftPoints) {
  for (int m = 1; m <= 5; ++m) {
    for (const PairPartition& v : EnumeratePairPartitions(m)) {
      const PairPartition h = NoncrossingHat(v);
      EXPECT_TRUE(Crossings(h).empty());
      EXPECT_EQ(NoncrossingHat(h), h);
      for (int k = 1; k <= v.size(); ++k) EXPECT_EQ(h.IsLeft(k), v.IsLeft(k));
    }
  }
}

TEST(PairPartitionTest, UncoloredCycles) {
  auto d = UncoloredCycles(PairPartition({{1, 2}, {3, 4}}));
  EXPECT_EQ(d.rho, (std::map<int, int>{{1, 2}}));
  d = UncoloredCycles(PairPartition({{1, 3}, {2, 4}}));
  EXPECT_EQ(d.rho, (std::map<int, int>{{2, 1}}));
  ASSERT_EQ(d.cycles.size(), 1u);
  EXPECT_EQ(d.cycles[0], (Cycle{{1, 3}, {2, 4}}));
  d = UncoloredCycles(PairPartition({{1, 4}, {2, 5}, {3, 6}}));
  EXPECT_EQ(d.rho, (std::map<int, int>{{1, 1}, {2, 1}}));
  EXPECT_EQ(AsSets(d.cycles),
            (std::set<std::set<Pair>>{{{1, 4}, {3, 6}}, {{2, 5}}}));
}

TEST(PairPartitionTest, CycleMethodsAgree) {
  for (int m = 1; m <= 5; ++m) {
    for (const PairPartition& v : EnumeratePairPartitions(m)) {
      const auto a = UncoloredCycles(v);
      const auto b = UncoloredCyclesViaPermutation(v);
      EXPECT_EQ(a.rho, b.rho);
      EXPECT_EQ(AsSets(a.cycles), AsSets(b.cycles));
    }
  }
}

TEST(PairPartitionTest, NoncrossingHasOnlyUnitCycles) {
  for (const PairPartition& v : EnumeratePairPartitions(4)) {
    if (!Crossings(v).empty()) continue;
    EXPECT_EQ(UncoloredCycles(v).rho, (std::map<int, int>{{1, 4}}));
  }
}

TEST(PairPartitionTest, ColorClassRelabels) {
  const auto p = MakeColored({{1, 4}, {2, 5}, {3, 6}}, {0, 1, 0}, 2);
  EXPECT_EQ(ColorClass(p, 0), PairPartition({{1, 3}, {2, 4}}));
  EXPECT_EQ(ColorClass(p, 1), PairPartition({{1, 2}}));
}

TEST(PairPartitionTest, RandomColoredIsValid) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = testing::RandomColored(rng, 4, 3);
    EXPECT_EQ(p.m(), 4);
    for (int k = 1; k <= p.base.size(); ++k) {
      EXPECT_EQ(p.base.Partner(p.base.Partner(k)), k);
    }
  }
}

}  // namespace
}  // namespace gbm
