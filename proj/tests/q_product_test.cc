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

#include "gbm/q_product.h"

#include <gtest/gtest.h>

#include <random>

#include "gbm/moments.h"
#include "test_util.h"

namespace gbm {
namespace {

using Rows = std::vector<std::vector<Rational>>;

const UncoloredT kT2 = [](const PairPartition& v) { return TNUncolored(2, v); };

QMatrix Mixed() {
  return QMatrix({{Rational(1, 3), Rational(-1, 2)},
                  {Rational(-1, 2), Rational(1, 4)}});
}

TEST(QMatrixTest, Validation) {
  EXPECT_THROW(QMatrix(Rows{}),
               std::invalid_argument);
  EXPECT_THROW(QMatrix(Rows{{1, 0}}), std::invalid_argument);
  EXPECT_THROW(QMatrix(Rows{{1, Rational(1, 2)}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(QMatrix(Rows{{2}}), std::invalid_argument);
  const QMatrix q = Mixed();
  EXPECT_EQ(q.Periodic(2, 3), q(0, 1));
}

TEST(QProductTest, Examples) {
  const QMatrix q({{1, -1}, {-1, 1}});
  EXPECT_EQ(QProductEval({kT2, kT2}, q,
                         MakeColored({{1, 3}, {2, 4}}, {0, 1}, 2)),
            -1);
  EXPECT_EQ(QProductEval({kT2, kT2}, q,
                         MakeColored({{1, 2}, {3, 4}}, {0, 1}, 2)),
            1);
  EXPECT_EQ(QProductEval({kT2, kT2}, QMatrix::Constant(2, 1),
                         MakeColored({{1, 4}, {2, 5}, {3, 6}}, {0, 1, 0}, 2)),
            Rational(1, 2));
  EXPECT_THROW(QProductEval({kT2}, q, MakeColored({{1, 2}}, {0}, 2)),
               std::invalid_argument);
}

TEST(QProductTest, UnitQReducesToTensor) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& p : EnumerateColored(m, 2)) {
      EXPECT_EQ(QProductEval({kT2, FreeT}, QMatrix::Constant(2, 1), p),
                TTensor(kT2, FreeT, p));
    }
  }
}

TEST(QProductTest, SingleColor) {
  const Rational q(-1, 3);
  for (const PairPartition& v : EnumeratePairPartitions(4)) {
    const ColoredPairPartition p(v, std::vector<int>(4, 0), 1);
    EXPECT_EQ(QProductEval({kT2}, QMatrix::Constant(1, q), p),
              Pow(q, static_cast<long>(Crossings(v).size())) *
                  TNUncolored(2, v));
  }
}

TEST(QProductTest, ColorRelabelingSymmetry) {
  const QMatrix q = Mixed();
  const QMatrix swapped({{q(1, 1), q(1, 0)}, {q(0, 1), q(0, 0)}});
  const UncoloredT t3 = [](const PairPartition& v) { return TNUncolored(3, v); };
  for (const auto& p : EnumerateColored(3, 2)) {
    std::vector<int> flipped;
    for (int c : p.colors) flipped.push_back(1 - c);
    const ColoredPairPartition pf(p.base, flipped, 2);
    EXPECT_EQ(QProductEval({kT2, t3}, q, p),
              QProductEval({t3, kT2}, swapped, pf));
  }
}

TEST(TQStarTest, ClosedForms) {
  const PairPartition v({{1, 3}, {2, 4}});
  const Rational q(1, 2);
  for (int n : {1, 2, 5, 9}) {
    EXPECT_EQ(TQStarN(FreeT, QMatrix::Constant(1, q), n, v),
              q * (1 - Frac(1, n)));
  }
  EXPECT_EQ(TQStarN(FreeT, QMatrix({{1, -1}, {-1, 1}}), 2, v),
            Rational(-1, 2));
  EXPECT_EQ(TQStarN(kT2, Mixed(), 2, v), Rational(-17, 96));
  EXPECT_EQ(TQStarN(kT2, Mixed(), 4, v), Rational(-9, 64));
  EXPECT_EQ(TQStarN(kT2, Mixed(), 6, v), Rational(-37, 288));
  EXPECT_EQ(TQStarN(kT2, Mixed(), 7, PairPartition({{1, 2}})), 1);
}

TEST(TQLimitTest, Values) {
  const Rational q(2, 3);
  const PairPartition v3({{1, 4}, {2, 5}, {3, 6}});
  EXPECT_EQ(TQLimit(QMatrix::Constant(3, q), v3), q * q * q);
  EXPECT_EQ(TQLimit(QMatrix({{1, -1}, {-1, 1}}),
                    PairPartition({{1, 3}, {2, 4}})),
            0);
  EXPECT_EQ(TQLimit(Mixed(), PairPartition({{1, 4}, {2, 3}})), 1);
}

TEST(CltTest, FreeConstantRate) {
  const Rational q(1, 2);
  const auto curve = CltErrorCurve(FreeT, QMatrix::Constant(1, q),
                                   PairPartition({{1, 3}, {2, 4}}),
                                   {4, 8, 16, 32});
  ASSERT_EQ(curve.size(), 4u);
  for (const CltPoint& c : curve) EXPECT_EQ(c.error, q / c.n) << c.n;
}

TEST(CltTest, NoncrossingHasNoError) {
  const auto curve = CltErrorCurve(kT2, Mixed(), PairPartition({{1, 2}, {3, 4}}),
                                   {2, 4, 8});
  for (const CltPoint& c : curve) EXPECT_EQ(c.error, 0);
}

TEST(CltTest, MixedSweepDecreases) {
  const auto curve = CltErrorCurve(kT2, Mixed(), PairPartition({{1, 3}, {2, 4}}),
                                   {8, 32});
  EXPECT_LE(curve[1].error, curve[0].error);
}

TEST(CltTest, Capacity) {
  EXPECT_THROW(TQStarN(FreeT, QMatrix::Constant(1, 1), 100,
                       PairPartition({{1, 5}, {2, 6}, {3, 7}, {4, 8}})),
               CapacityError);
}

TEST(PsdTest, Families) {
  const TFunction tn2 = [](const ColoredPairPartition& p) { return TN(2, p); };
  std::vector<BrokenPairPartition> one, two;
  for (int k = 0; k <= 4; ++k) {
    for (auto& d : EnumerateBroken(k, 1, false)) one.push_back(d);
    for (auto& d : EnumerateBroken(k, 2, true)) two.push_back(d);
  }
  EXPECT_TRUE(GramPsdCheck(one, tn2).pass);
  EXPECT_TRUE(GramPsdCheck(two, tn2).pass);
  const QMatrix q({{1, -1}, {-1, 1}});
  const TFunction qp = [&q](const ColoredPairPartition& p) {
    return QProductEval({kT2, kT2}, q, p);
  };
  EXPECT_TRUE(GramPsdCheck(two, qp).pass);
}

TEST(PsdTest, DetectsIndefiniteFunction) {
  // A t that rewards crossings over nesting is not positive definite.
  const TFunction bad = [](const ColoredPairPartition& p) {
    return Rational(Crossings(p.base).empty() ? 1 : 2);
  };
  std::vector<BrokenPairPartition> family;
  for (int k = 0; k <= 2; ++k) {
    for (auto& d : EnumerateBroken(k, 1, true)) family.push_back(d);
  }
  EXPECT_FALSE(GramPsdCheck(family, bad).pass);
}

TEST(StirlingTest, Cancels) {
  for (int n = -1; n >= -5; --n) {
    const StirlingResult s = StirlingCheck(n);
    EXPECT_EQ(s.by_enumeration, 0) << n;
    EXPECT_EQ(s.by_stirling_numbers, 0) << n;
    EXPECT_EQ(s.rising_factorial, 0) << n;
    EXPECT_TRUE(s.pass);
  }
  EXPECT_THROW(StirlingCheck(2), std::invalid_argument);
  EXPECT_THROW(StirlingCheck(-9), CapacityError);
}

}  // namespace
}  // namespace gbm
