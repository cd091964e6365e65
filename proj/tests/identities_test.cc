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

#include "gbm/identities.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gbm/word.h"
#include "test_util.h"

namespace gbm {
namespace {

TEST(RhoNTest, Examples) {
  const Word same = {An(1, 1), An(1, 1), Cr(1, 1), Cr(1, 1)};
  EXPECT_EQ(RhoN(same, -1), 0);
  EXPECT_EQ(RhoN(same, 2), Rational(3, 2));
  for (int n : {-3, -1, 1, 4}) EXPECT_EQ(RhoN({An(0, 2), Cr(0, 2)}, n), 1);
}

TEST(ExclusionTest, WorkedExample) {
  const Word a = {Cr(1, 1), An(1, 1), Cr(1, 1), Cr(1, 1)};
  const Word as = Adjoint(a);
  EXPECT_EQ(RhoN(Concat({&as, &a}), -1), 0);
  EXPECT_NE(RhoN(Concat({&as, &a}), 2), 0);
}

TEST(ExclusionTest, SmallInstances) {
  const Word two = {Cr(1, 1), Cr(1, 1)};
  const Word three = {Cr(1, 1), Cr(1, 1), Cr(1, 1)};
  const Word two_s = Adjoint(two), three_s = Adjoint(three);
  EXPECT_EQ(RhoN(Concat({&two_s, &two}), -1), 0);
  EXPECT_EQ(RhoN(Concat({&three_s, &three}), -2), 0);
  EXPECT_NE(RhoN(Concat({&two_s, &two}), -2), 0);
}

TEST(ExclusionTest, Sweep) {
  for (int n : {-1, -2}) {
    const ExclusionReport r = ExclusionCheck(n, 5, 2);
    EXPECT_GT(r.words_exceeding, 0);
    EXPECT_EQ(r.failures, 0) << n;
  }
  EXPECT_THROW(ExclusionCheck(2, 3, 1), std::invalid_argument);
}

TEST(CommutationTest, Examples) {
  auto r = CommutationCheck({}, {}, 1, 1, 3);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, 1);
  r = CommutationCheck({Cr(1, 1)}, {Cr(1, 1)}, 1, 1, 2);
  EXPECT_EQ(r.lhs, Rational(3, 2));
  EXPECT_TRUE(r.equal);
  r = CommutationCheck({Cr(1, 1)}, {Cr(1, 1)}, 1, 1, -1);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_TRUE(r.equal);
  EXPECT_THROW(CommutationCheck({Cr(0, 1)}, {Cr(0, 1)}, 1, 1, 2),
               std::invalid_argument);
}

TEST(CommutationTest, Randomized) {
  std::mt19937 rng(17);
  const int ns[] = {1, -1, 2, -2, 3};
  int done = 0;
  while (done < 25) {
    const Word a = testing::RandomWord(rng, 4, 2, 2, 0.8);
    const int b = std::uniform_int_distribution<int>(0, 1)(rng);
    if (std::abs(ProfileTotal(a, b)) < std::abs(ProfileTotal(a, 1 - b))) continue;
    Word bw = a;
    std::shuffle(bw.begin(), bw.end(), rng);
    const int i = std::uniform_int_distribution<int>(1, 2)(rng);
    const int n = ns[done % 5];
    const IdentityResult r = CommutationCheck(a, bw, b, i, n);
    EXPECT_TRUE(r.equal) << ToString(a) << " " << ToString(bw) << " N=" << n;
    ++done;
  }
}

TEST(WlimTest, Examples) {
  auto r = WlimIdentityCheck({Cr(1, 1)}, {Cr(1, 1)}, 1, 1, 2, 3);
  EXPECT_EQ(r.rhs, Rational(1, 4));
  EXPECT_EQ(r.lhs, Rational(1, 4));
  r = WlimIdentityCheck({}, {}, 1, 1, 2, 1);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_EQ(r.rhs, 0);
}

TEST(WlimTest, PaddingPreconditions) {
  EXPECT_THROW(WlimIdentityCheck({Cr(1, 3)}, {Cr(1, 3)}, 1, 1, 2, 2),
               std::invalid_argument);
  EXPECT_THROW(WlimIdentityCheck({Cr(0, 1), Cr(0, 1)}, {}, 1, 1, 2, 1),
               std::invalid_argument);
}

TEST(WlimTest, CreatorBound) {
  // B carries two more (b, i) creators than A so that partitions exist.
  const Word a = {Cr(1, 1)};
  const Word b = {Cr(1, 1), Cr(1, 1), Cr(1, 1)};
  for (int pad : {2, 3}) {
    const BoundResult r = WlimCreatorBound(a, b, 1, 1, 2, pad, 2);
    EXPECT_GT(r.compatible, 0);
    EXPECT_TRUE(r.within) << ToString(r.value) << " vs " << ToString(r.bound);
  }
}

}  // namespace
}  // namespace gbm
