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

#ifndef GBM_PAIR_PARTITION_H_
#define GBM_PAIR_PARTITION_H_

#include <map>
#include <utility>
#include <vector>

namespace gbm {

using Pair = std::pair<int, int>;

// A pair partition of [2m]. Points are 1-based; pairs are sorted by left
// point.
class PairPartition {
 public:
  PairPartition() = default;
  // Validates and canonicalizes. Throws std::invalid_argument.
  explicit PairPartition(std::vector<Pair> pairs);

  int m() const { return static_cast<int>(pairs_.size()); }
  int size() const { return 2 * m(); }
  const std::vector<Pair>& pairs() const { return pairs_; }

  bool IsLeft(int point) const { return partner_[point - 1] > point; }
  int Partner(int point) const { return partner_[point - 1]; }
  // Index into pairs() of the pair containing the point.
  int PairIndexOf(int point) const { return pair_index_[point - 1]; }

  friend bool operator==(const PairPartition& a, const PairPartition& b) {
    return a.pairs_ == b.pairs_;
  }
  friend bool operator<(const PairPartition& a, const PairPartition& b) {
    return a.pairs_ < b.pairs_;
  }

 private:
  std::vector<Pair> pairs_;
  std::vector<int> partner_;
  std::vector<int> pair_index_;
};

// A pair partition with one color per pair, aligned with pairs().
struct ColoredPairPartition {
  PairPartition base;
  std::vector<int> colors;
  int num_colors = 1;

  ColoredPairPartition() = default;
  ColoredPairPartition(PairPartition b, std::vector<int> c, int k);

  int m() const { return base.m(); }
  int ColorOfPoint(int point) const {
    return colors[base.PairIndexOf(point)];
  }

  friend bool operator==(const ColoredPairPartition& a,
                         const ColoredPairPartition& b) {
    return a.base == b.base && a.colors == b.colors &&
           a.num_colors == b.num_colors;
  }
};

// Builds a colored partition from pairs listed in any order, each with its
// color.
ColoredPairPartition MakeColored(const std::vector<Pair>& pairs,
                                 const std::vector<int>& colors,
                                 int num_colors);

inline constexpr int kMaxEnumeratePairs = 8;

// All (2m-1)!! pair partitions; point 1 is paired with each partner in
// ascending order, then recursively. m = 0 gives the empty partition.
std::vector<PairPartition> EnumeratePairPartitions(int m);

// Every pair partition with every coloring in [k]^m.
std::vector<ColoredPairPartition> EnumerateColored(int m, int k);

// Ordered pairs of pairs with l1 < l2 < r1 < r2, sorted lexicographically.
std::vector<std::pair<Pair, Pair>> Crossings(const PairPartition& v);

// The noncrossing pair partition with the same left points.
PairPartition NoncrossingHat(const PairPartition& v);

struct CycleDecomposition {
  // Each cycle lists pairs, starting from the one with smallest left point.
  std::vector<std::vector<Pair>> cycles;
  // Cycle length -> number of cycles.
  std::map<int, int> rho;
};

// Cycles chained through the noncrossing hat.
CycleDecomposition UncoloredCycles(const PairPartition& v);

// The same decomposition computed from the permutation sigma defined by
// hat(V) = {(a_i, z_{sigma^{-1}(i)})}.
CycleDecomposition UncoloredCyclesViaPermutation(const PairPartition& v);

// Restriction to the pairs of one color, relabeled order-preservingly.
PairPartition ColorClass(const ColoredPairPartition& p, int color);

}  // namespace gbm

#endif  // GBM_PAIR_PARTITION_H_
