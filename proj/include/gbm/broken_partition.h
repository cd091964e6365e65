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

#ifndef GBM_BROKEN_PARTITION_H_
#define GBM_BROKEN_PARTITION_H_

#include <map>
#include <vector>

#include "gbm/moments.h"
#include "gbm/pair_partition.h"
#include "gbm/rational.h"

namespace gbm {

enum class PointKind { kPair, kLeftLeg, kRightLeg };

struct BrokenPoint {
  PointKind kind = PointKind::kPair;
  int color = 0;
  // Partner point for kPair, leg number for legs.
  int value = 0;

  friend bool operator==(const BrokenPoint&, const BrokenPoint&) = default;
};

// Broken pair partition on base points 1..n with numbered open legs.
class BrokenPairPartition {
 public:
  BrokenPairPartition() = default;
  BrokenPairPartition(int num_colors, std::vector<BrokenPoint> points);

  int size() const { return static_cast<int>(points_.size()); }
  int num_colors() const { return num_colors_; }
  const BrokenPoint& point(int k) const { return points_[k - 1]; }
  const std::vector<BrokenPoint>& points() const { return points_; }

  int NumLeft(int color) const;
  int NumRight(int color) const;
  bool HasLegs() const;
  // Pairs of one color, sorted by left point.
  std::vector<Pair> PairsOfColor(int color) const;
  // Leg point -> leg number, for one color and side.
  std::map<int, int> Legs(int color, PointKind side) const;

  friend bool operator==(const BrokenPairPartition& a,
                         const BrokenPairPartition& b) {
    return a.num_colors_ == b.num_colors_ && a.points_ == b.points_;
  }

 private:
  int num_colors_ = 1;
  std::vector<BrokenPoint> points_;
};

// Per color: pairs, left legs and right legs. Throws std::invalid_argument.
struct ColorBlock {
  std::vector<Pair> pairs;
  std::map<int, int> left_legs;
  std::map<int, int> right_legs;
};
BrokenPairPartition MakeBroken(int n, const std::vector<ColorBlock>& blocks);

BrokenPairPartition EmptyBroken(int num_colors);
BrokenPairPartition LeftHook(int color, int num_colors);
BrokenPairPartition RightHook(int color, int num_colors);
BrokenPairPartition FromColored(const ColoredPairPartition& p);
// Requires a diagram without legs.
ColoredPairPartition ToColored(const BrokenPairPartition& d);

// For each color the M highest-numbered right legs of d1 join the M
// highest-numbered left legs of d2 in order, M = min(|R_1|, |L_2|). The
// unjoined left legs of d2 keep their numbers and the left legs of d1 are
// shifted above them; right legs are renumbered symmetrically.
BrokenPairPartition Multiply(const BrokenPairPartition& d1,
                             const BrokenPairPartition& d2);

BrokenPairPartition Involution(const BrokenPairPartition& d);

// Renumbers the right legs of one color: leg j becomes perm[j - 1].
BrokenPairPartition PermuteRightLegs(const BrokenPairPartition& d, int color,
                                     const std::vector<int>& perm);

struct StandardFactor {
  enum class Kind { kRightHooks, kPermutation, kLeftHooks };
  Kind kind;
  std::vector<int> colors;             // hook colors, in order
  std::vector<std::vector<int>> perms;  // one per color for kPermutation
};

using StandardForm = std::vector<StandardFactor>;

StandardForm ComputeStandardForm(const ColoredPairPartition& p);
// Multiplies the factors in order, applying permutations to the open right
// legs of the running product.
BrokenPairPartition EvaluateStandardForm(const StandardForm& f, int num_colors);

// t(d) for a leg-free diagram, 0 otherwise.
Rational EvaluateTHat(const BrokenPairPartition& d, const TFunction& t);

inline constexpr int kMaxGramSize = 2048;

// Entries t_hat(d_i^* d_j).
std::vector<std::vector<Rational>> GramMatrix(
    const std::vector<BrokenPairPartition>& family, const TFunction& t);

// Every diagram on exactly n points over the given colors. With
// left_legs_only, right legs are excluded.
std::vector<BrokenPairPartition> EnumerateBroken(int n, int num_colors,
                                                 bool left_legs_only);

}  // namespace gbm

#endif  // GBM_BROKEN_PARTITION_H_
