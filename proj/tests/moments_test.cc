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

#include "gbm/moments.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gbm/cycle_graph.h"
#include "gbm/pair_partition.h"
#include "gbm/word.h"
#include "test_util.h"

namespace gbm {
namespace {

ColoredPairPartition TwelvePoint() {
  return MakeColored({{1, 5}, {2, 10}, {3, 8}, {4, 12}, {6, 7}, {9, 11}},
                     {0, 0, 1, 1, 0, 0}, 2);
}

TEST(ThomaTest, ParameterValidation) {
  ThomaParameter<Rational> tp;
  tp.alpha = {Rational(1, 2), Rational(1, 3)};
  tp.beta = {Rational(1, 6)};
  EXPECT_NO_THROW(tp.Validate());
  EXPECT_EQ(tp.Gamma(), 0);
  tp.alpha = {Rational(1, 3), Rational(1, 2)};
  EXPECT_THROW(tp.Validate(), std::invalid_argument);
  tp.alpha = {Rational(3, 4)};
  tp.beta = {Rational(1, 2)};
  EXPECT_THROW(tp.Validate(), std::invalid_argument);
  EXPECT_THROW(ThomaN(0), std::invalid_argument);
}

TEST(ThomaTest, CharacterOnCycleTypes) {
  EXPECT_EQ(ThomaCharacter(ThomaN(2), {{2, 1}}), Rational(1, 2));
  EXPECT_EQ(ThomaCharacter(ThomaN(-2), {{3, 1}}), Rational(1, 4));
  EXPECT_EQ(ThomaCharacter(ThomaN(5), {{1, 7}}), 1);
}

TEST(ThomaTest, SphericalFunction) {
  EXPECT_EQ(SphericalFunction(ThomaN(2), {0, 1}, {1, 0}), Rational(1, 2));
  // (12) and (13) in S3 compose to a 3-cycle.
  EXPECT_EQ(SphericalFunction(ThomaN(2), {1, 0, 2}, {2, 1, 0}),
            Rational(1, 4));
  EXPECT_THROW(SphericalFunction(ThomaN(2), {0}, {1, 0}),
               std::invalid_argument);
}

TEST(ThomaTest, CycleType) {
  EXPECT_EQ(CycleType({1, 2, 0, 3}), (std::map<int, int>{{1, 1}, {3, 1}}));
}

TEST(MomentsTest, UncoloredValues) {
  EXPECT_EQ(TUncolored(ThomaN(2), PairPartition({{1, 3}, {2, 4}})),
            Rational(1, 2));
  EXPECT_EQ(TUncolored(ThomaN(3), PairPartition({{1, 4}, {2, 5}, {3, 6}})),
            Rational(1, 3));
  EXPECT_EQ(TNUncolored(3, PairPartition({{1, 4}, {2, 5}, {3, 6}})),
            Rational(1, 3));
}

TEST(MomentsTest, ColoredValues) {
  for (int n : {2, 3, -1, -2}) {
    EXPECT_EQ(TColored(ThomaN(n), TwelvePoint()), Frac(1, n)) << n;
    EXPECT_EQ(TN(n, TwelvePoint()), Frac(1, n)) << n;
  }
  const auto crossed = MakeColored({{1, 3}, {2, 4}}, {0, 1}, 2);
  ThomaParameter<Rational> tp;
  tp.alpha = {Rational(1, 2)};
  tp.beta = {Rational(1, 5)};
  EXPECT_EQ(TColored(tp, crossed), 1);
  EXPECT_EQ(TN(2, MakeColored({{1, 3}, {2, 4}}, {1, 1}, 2)), Rational(1, 2));
}

TEST(MomentsTest, OneColorInputMatchesUncolored) {
  for (const PairPartition& v : EnumeratePairPartitions(4)) {
    const ColoredPairPartition p(v, std::vector<int>(4, 0), 1);
    EXPECT_EQ(TN(2, p), TNUncolored(2, v));
  }
}

TEST(MomentsTest, SumsOverSmallPartitions) {
  // Reference sums over every two-colored partition with m <= 3.
  const std::pair<int, Rational> expected[] = {
      {2, Rational(213, 2)}, {3, 98}, {-1, 42}, {-2, Rational(121, 2)}};
  for (const auto& [n, sum] : expected) {
    Rational total = 0;
    for (int m = 1; m <= 3; ++m) {
      for (const auto& p : EnumerateColored(m, 2)) total += TN(n, p);
    }
    EXPECT_EQ(total, sum) << n;
  }
}

TEST(MomentsTest, FloatingThomaAgreesWithExact) {
  ThomaParameter<Rational> exact;
  exact.alpha = {Rational(1, 2), Rational(1, 5)};
  exact.beta = {Rational(1, 4)};
  ThomaParameter<double> approx;
  approx.alpha = {0.5, 0.2};
  approx.beta = {0.25};
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::RandomColored(rng, 4, 2);
    EXPECT_NEAR(TColored(approx, p), TColored(exact, p).get_d(), 1e-12);
  }
}

TEST(MomentsTest, TensorProduct) {
  const auto p = MakeColored({{1, 4}, {2, 5}, {3, 6}}, {0, 1, 0}, 2);
  const UncoloredT t2 = [](const PairPartition& v) { return TNUncolored(2, v); };
  EXPECT_EQ(TTensor(t2, t2, p), Rational(1, 2));
  EXPECT_EQ(TTensor(FreeT, FreeT, p), 0);
}

TEST(MomentsTest, FockMoment) {
  const TFunction t2 = [](const ColoredPairPartition& p) { return TN(2, p); };
  const Word crossing = {An(1, 1), An(1, 2), Cr(1, 1), Cr(1, 2)};
  EXPECT_EQ(FockMoment(crossing, t2), Rational(1, 2));
  for (int n : {2, 3, -1}) {
    const TFunction t = [n](const ColoredPairPartition& p) { return TN(n, p); };
    const Word same = {An(1, 1), An(1, 1), Cr(1, 1), Cr(1, 1)};
    EXPECT_EQ(FockMoment(same, t), 1 + Frac(1, n)) << n;
  }
  EXPECT_EQ(FockMoment({Cr(0, 1), An(0, 1)}, t2), 0);
}

}  // namespace
}  // namespace gbm
