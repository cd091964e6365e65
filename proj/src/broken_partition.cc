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

#include "gbm/broken_partition.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gbm {

BrokenPairPartition::BrokenPairPartition(int num_colors,
                                         std::vector<BrokenPoint> points)
    : num_colors_(num_colors), points_(std::move(points)) {
  if (num_colors_ < 1) throw std::invalid_argument("num_colors must be >= 1");
  const int n = size();
  std::map<std::pair<int, int>, std::vector<int>> numbers;
  for (int k = 1; k <= n; ++k) {
    const BrokenPoint& p = points_[k - 1];
    if (p.color < 0 || p.color >= num_colors_) {
      throw std::invalid_argument("color out of range");
    }
    if (p.kind == PointKind::kPair) {
      if (p.value < 1 || p.value > n || p.value == k) {
        throw std::invalid_argument("bad partner");
      }
      const BrokenPoint& q = points_[p.value - 1];
      if (q.kind != PointKind::kPair || q.value != k || q.color != p.color) {
        throw std::invalid_argument("pair endpoints disagree");
      }
    } else {
      numbers[{p.color, static_cast<int>(p.kind)}].push_back(p.value);
    }
  }
  for (auto& [key, nums] : numbers) {
    std::sort(nums.begin(), nums.end());
    for (size_t j = 0; j < nums.size(); ++j) {
      if (nums[j] != static_cast<int>(j) + 1) {
        throw std::invalid_argument("leg numbers must be a bijection onto [1..count]");
      }
    }
  }
}

int BrokenPairPartition::NumLeft(int color) const {
  return static_cast<int>(Legs(color, PointKind::kLeftLeg).size());
}

int BrokenPairPartition::NumRight(int color) const {
  return static_cast<int>(Legs(color, PointKind::kRightLeg).size());
}

bool BrokenPairPartition::HasLegs() const {
  for (const BrokenPoint& p : points_) {
    if (p.kind != PointKind::kPair) return true;
  }
  return false;
}

std::vector<Pair> BrokenPairPartition::PairsOfColor(int color) const {
  std::vector<Pair> out;
  for (int k = 1; k <= size(); ++k) {
    const BrokenPoint& p = points_[k - 1];
    if (p.kind == PointKind::kPair && p.color == color && p.value > k) {
      out.emplace_back(k, p.value);
    }
  }
  return out;
}

std::map<int, int> BrokenPairPartition::Legs(int color, PointKind side) const {
  std::map<int, int> out;
  for (int k = 1; k <= size(); ++k) {
    const BrokenPoint& p = points_[k - 1];
    if (p.kind == side && p.color == color) out[k] = p.value;
  }
  return out;
}

BrokenPairPartition MakeBroken(int n, const std::vector<ColorBlock>& blocks) {
  std::vector<BrokenPoint> pts(n, BrokenPoint{PointKind::kPair, -1, 0});
  auto claim = [&](int k, BrokenPoint p) {
    if (k < 1 || k > n) throw std::invalid_argument("point out of range");
    if (pts[k - 1].color != -1) throw std::invalid_argument("point used twice");
    pts[k - 1] = p;
  };
  for (int c = 0; c < static_cast<int>(blocks.size()); ++c) {
    for (const auto& [l, r] : blocks[c].pairs) {
      claim(l, {PointKind::kPair, c, r});
      claim(r, {PointKind::kPair, c, l});
    }
    for (const auto& [k, num] : blocks[c].left_legs) {
      claim(k, {PointKind::kLeftLeg, c, num});
    }
    for (const auto& [k, num] : blocks[c].right_legs) {
      claim(k, {PointKind::kRightLeg, c, num});
    }
  }
  for (const BrokenPoint& p : pts) {
    if (p.color == -1) throw std::invalid_argument("uncovered point");
  }
  return BrokenPairPartition(static_cast<int>(blocks.size()), std::move(pts));
}

BrokenPairPartition EmptyBroken(int num_colors) {
  return BrokenPairPartition(num_colors, {});
}

BrokenPairPartition LeftHook(int color, int num_colors) {
  return BrokenPairPartition(num_colors, {{PointKind::kLeftLeg, color, 1}});
}

BrokenPairPartition RightHook(int color, int num_colors) {
  return BrokenPairPartition(num_colors, {{PointKind::kRightLeg, color, 1}});
}

BrokenPairPartition FromColored(const ColoredPairPartition& p) {
  std::vector<BrokenPoint> pts(p.base.size());
  for (int i = 0; i < p.m(); ++i) {
    const auto [l, r] = p.base.pairs()[i];
    pts[l - 1] = {PointKind::kPair, p.colors[i], r};
    pts[r - 1] = {PointKind::kPair, p.colors[i], l};
  }
  return BrokenPairPartition(p.num_colors, std::move(pts));
}

ColoredPairPartition ToColored(const BrokenPairPartition& d) {
  if (d.HasLegs()) throw std::invalid_argument("diagram has open legs");
  std::vector<Pair> pairs;
  std::vector<int> colors;
  for (int k = 1; k <= d.size(); ++k) {
    if (d.point(k).value > k) {
      pairs.emplace_back(k, d.point(k).value);
      colors.push_back(d.point(k).color);
    }
  }
  return MakeColored(pairs, colors, d.num_colors());
}

BrokenPairPartition Multiply(const BrokenPairPartition& d1,
                             const BrokenPairPartition& d2) {
  if (d1.num_colors() != d2.num_colors()) {
    throw std::invalid_argument("color sets differ");
  }
  const int n1 = d1.size();
  std::vector<BrokenPoint> pts = d1.points();
  for (BrokenPoint p : d2.points()) {
    if (p.kind == PointKind::kPair) p.value += n1;
    pts.push_back(p);
  }
  for (int a = 0; a < d1.num_colors(); ++a) {
    // Leg points indexed by number - 1.
    std::vector<int> r1(d1.NumRight(a)), l2(d2.NumLeft(a));
    for (const auto& [k, num] : d1.Legs(a, PointKind::kRightLeg)) r1[num - 1] = k;
    for (const auto& [k, num] : d2.Legs(a, PointKind::kLeftLeg)) {
      l2[num - 1] = k + n1;
    }
    const int nr1 = static_cast<int>(r1.size());
    const int nl2 = static_cast<int>(l2.size());
    const int joined = std::min(nr1, nl2);
    for (int j = 0; j < joined; ++j) {
      const int u = r1[nr1 - 1 - j];
      const int v = l2[nl2 - 1 - j];
      pts[u - 1] = {PointKind::kPair, a, v};
      pts[v - 1] = {PointKind::kPair, a, u};
    }
    for (int k = 1; k <= n1; ++k) {
      BrokenPoint& p = pts[k - 1];
      if (p.kind == PointKind::kLeftLeg && p.color == a) p.value += nl2 - joined;
    }
    for (int k = n1 + 1; k <= static_cast<int>(pts.size()); ++k) {
      BrokenPoint& p = pts[k - 1];
      if (p.kind == PointKind::kRightLeg && p.color == a) p.value += nr1 - joined;
    }
  }
  return BrokenPairPartition(d1.num_colors(), std::move(pts));
}

BrokenPairPartition Involution(const BrokenPairPartition& d) {
  const int n = d.size();
  std::vector<BrokenPoint> pts(n);
  for (int k = 1; k <= n; ++k) {
    BrokenPoint p = d.point(k);
    switch (p.kind) {
      case PointKind::kPair:
        p.value = n + 1 - p.value;
        break;
      case PointKind::kLeftLeg:
        p.kind = PointKind::kRightLeg;
        break;
      case PointKind::kRightLeg:
        p.kind = PointKind::kLeftLeg;
        break;
    }
    pts[n - k] = p;
  }
  return BrokenPairPartition(d.num_colors(), std::move(pts));
}

BrokenPairPartition PermuteRightLegs(const BrokenPairPartition& d, int color,
                                     const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != d.NumRight(color)) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<BrokenPoint> pts = d.points();
  for (BrokenPoint& p : pts) {
    if (p.kind == PointKind::kRightLeg && p.color == color) {
      p.value = perm[p.value - 1];
    }
  }
  return BrokenPairPartition(d.num_colors(), std::move(pts));
}

StandardForm ComputeStandardForm(const ColoredPairPartition& p) {
  StandardForm out;
  const int n = p.base.size();
  // Per color, pair indices of the open right legs by leg number.
  std::vector<std::vector<int>> open(p.num_colors);
  int k = 1;
  while (k <= n) {
    if (p.base.IsLeft(k)) {
      StandardFactor f{StandardFactor::Kind::kRightHooks, {}, {}};
      for (; k <= n && p.base.IsLeft(k); ++k) {
        f.colors.push_back(p.ColorOfPoint(k));
        open[p.ColorOfPoint(k)].push_back(p.base.PairIndexOf(k));
      }
      out.push_back(std::move(f));
      continue;
    }
    StandardFactor hooks{StandardFactor::Kind::kLeftHooks, {}, {}};
    std::vector<std::vector<int>> closing(p.num_colors);
    for (; k <= n && !p.base.IsLeft(k); ++k) {
      hooks.colors.push_back(p.ColorOfPoint(k));
      closing[p.ColorOfPoint(k)].push_back(p.base.PairIndexOf(k));
    }
    StandardFactor perm{StandardFactor::Kind::kPermutation, {}, {}};
    for (int a = 0; a < p.num_colors; ++a) {
      // Untouched legs keep their order at the bottom; the legs closed in this
      // run sit on top so each left hook takes the current highest number.
      std::vector<int> target;
      for (int idx : open[a]) {
        if (std::find(closing[a].begin(), closing[a].end(), idx) ==
            closing[a].end()) {
          target.push_back(idx);
        }
      }
      const size_t kept = target.size();
      target.insert(target.end(), closing[a].rbegin(), closing[a].rend());
      std::vector<int> sigma(open[a].size());
      for (size_t j = 0; j < open[a].size(); ++j) {
        sigma[j] = static_cast<int>(
                       std::find(target.begin(), target.end(), open[a][j]) -
                       target.begin()) +
                   1;
      }
      perm.perms.push_back(std::move(sigma));
      target.resize(kept);
      open[a] = std::move(target);
    }
    out.push_back(std::move(perm));
    out.push_back(std::move(hooks));
  }
  return out;
}

BrokenPairPartition EvaluateStandardForm(const StandardForm& f,
                                         int num_colors) {
  BrokenPairPartition acc = EmptyBroken(num_colors);
  for (const StandardFactor& g : f) {
    switch (g.kind) {
      case StandardFactor::Kind::kRightHooks:
        for (int c : g.colors) acc = Multiply(acc, RightHook(c, num_colors));
        break;
      case StandardFactor::Kind::kLeftHooks:
        for (int c : g.colors) acc = Multiply(acc, LeftHook(c, num_colors));
        break;
      case StandardFactor::Kind::kPermutation:
        for (int a = 0; a < static_cast<int>(g.perms.size()); ++a) {
          acc = PermuteRightLegs(acc, a, g.perms[a]);
        }
        break;
    }
  }
  return acc;
}

Rational EvaluateTHat(const BrokenPairPartition& d, const TFunction& t) {
  if (d.HasLegs()) return 0;
  return t(ToColored(d));
}

std::vector<std::vector<Rational>> GramMatrix(
    const std::vector<BrokenPairPartition>& family, const TFunction& t) {
  if (family.empty()) throw std::invalid_argument("empty family");
  if (static_cast<int>(family.size()) > kMaxGramSize) {
    throw CapacityError("Gram family limited to " +
                        std::to_string(kMaxGramSize) + " elements");
  }
  const size_t n = family.size();
  std::vector<BrokenPairPartition> stars;
  for (const auto& d : family) stars.push_back(Involution(d));
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      g[i][j] = EvaluateTHat(Multiply(stars[i], family[j]), t);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

namespace {

void NumberLegs(std::vector<BrokenPoint>& pts,
                std::vector<std::vector<int>>& classes, size_t cls,
                int num_colors, std::vector<BrokenPairPartition>& out) {
  if (cls == classes.size()) {
    out.emplace_back(num_colors, pts);
    return;
  }
  std::vector<int> nums(classes[cls].size());
  std::iota(nums.begin(), nums.end(), 1);
  do {
    for (size_t j = 0; j < nums.size(); ++j) {
      pts[classes[cls][j] - 1].value = nums[j];
    }
    NumberLegs(pts, classes, cls + 1, num_colors, out);
  } while (std::next_permutation(nums.begin(), nums.end()));
}

void ShapeRec(int k, std::vector<BrokenPoint>& pts, std::vector<bool>& used,
              int num_colors, bool left_only,
              std::vector<BrokenPairPartition>& out) {
  const int n = static_cast<int>(pts.size());
  while (k <= n && used[k - 1]) ++k;
  if (k > n) {
    std::vector<std::vector<int>> classes;
    for (int c = 0; c < num_colors; ++c) {
      for (PointKind side : {PointKind::kLeftLeg, PointKind::kRightLeg}) {
        std::vector<int> cls;
        for (int j = 1; j <= n; ++j) {
          if (pts[j - 1].kind == side && pts[j - 1].color == c) cls.push_back(j);
        }
        if (!cls.empty()) classes.push_back(std::move(cls));
      }
    }
    NumberLegs(pts, classes, 0, num_colors, out);
    return;
  }
  used[k - 1] = true;
  for (int c = 0; c < num_colors; ++c) {
    for (int j = k + 1; j <= n; ++j) {
      if (used[j - 1]) continue;
      used[j - 1] = true;
      pts[k - 1] = {PointKind::kPair, c, j};
      pts[j - 1] = {PointKind::kPair, c, k};
      ShapeRec(k + 1, pts, used, num_colors, left_only, out);
      used[j - 1] = false;
    }
    pts[k - 1] = {PointKind::kLeftLeg, c, 0};
    ShapeRec(k + 1, pts, used, num_colors, left_only, out);
    if (!left_only) {
      pts[k - 1] = {PointKind::kRightLeg, c, 0};
      ShapeRec(k + 1, pts, used, num_colors, left_only, out);
    }
  }
  used[k - 1] = false;
}

}  // namespace

std::vector<BrokenPairPartition> EnumerateBroken(int n, int num_colors,
                                                 bool left_legs_only) {
  if (n > 6) throw CapacityError("broken diagram enumeration limited to n <= 6");
  std::vector<BrokenPairPartition> out;
  std::vector<BrokenPoint> pts(n);
  std::vector<bool> used(n, false);
  ShapeRec(1, pts, used, num_colors, left_legs_only, out);
  return out;
}

}  // namespace gbm
