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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gbm/rational.h"

namespace gbm {

PairPartition::PairPartition(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  const int n = 2 * static_cast<int>(pairs_.size());
  for (auto& [l, r] : pairs_) {
    if (l > r) std::swap(l, r);
  }
  std::sort(pairs_.begin(), pairs_.end());
  partner_.assign(n, 0);
  pair_index_.assign(n, -1);
  for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
    const auto [l, r] = pairs_[i];
    if (l < 1 || r > n || l == r) {
      throw std::invalid_argument("pair out of range: (" + std::to_string(l) +
                                  "," + std::to_string(r) + ")");
    }
    if (partner_[l - 1] != 0 || partner_[r - 1] != 0) {
      throw std::invalid_argument("point used twice");
    }
    partner_[l - 1] = r;
    partner_[r - 1] = l;
    pair_index_[l - 1] = i;
    pair_index_[r - 1] = i;
  }
}

ColoredPairPartition::ColoredPairPartition(PairPartition b, std::vector<int> c,
                                           int k)
    : base(std::move(b)), colors(std::move(c)), num_colors(k) {
  if (static_cast<int>(colors.size()) != base.m()) {
    throw std::invalid_argument("one color per pair required");
  }
  if (num_colors < 1) throw std::invalid_argument("num_colors must be >= 1");
  for (int c0 : colors) {
    if (c0 < 0 || c0 >= num_colors) {
      throw std::invalid_argument("color out of range");
    }
  }
}

ColoredPairPartition MakeColored(const std::vector<Pair>& pairs,
                                 const std::vector<int>& colors,
                                 int num_colors) {
  if (pairs.size() != colors.size()) {
    throw std::invalid_argument("one color per pair required");
  }
  PairPartition base(pairs);
  std::vector<int> aligned(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    aligned[base.PairIndexOf(pairs[i].first)] = colors[i];
  }
  return ColoredPairPartition(std::move(base), std::move(aligned), num_colors);
}

namespace {

void EnumerateRec(std::vector<int>& partner, std::vector<Pair>& acc,
                  std::vector<PairPartition>& out) {
  const int n = static_cast<int>(partner.size());
  int first = 0;
  while (first < n && partner[first] != 0) ++first;
  if (first == n) {
    out.emplace_back(acc);
    return;
  }
  for (int j = first + 1; j < n; ++j) {
    if (partner[j] != 0) continue;
    partner[first] = j + 1;
    partner[j] = first + 1;
    acc.emplace_back(first + 1, j + 1);
    EnumerateRec(partner, acc, out);
    acc.pop_back();
    partner[first] = 0;
    partner[j] = 0;
  }
}

}  // namespace

std::vector<PairPartition> EnumeratePairPartitions(int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  if (m > kMaxEnumeratePairs) {
    throw CapacityError("enumeration limited to m <= " +
                        std::to_string(kMaxEnumeratePairs));
  }
  std::vector<PairPartition> out;
  std::vector<int> partner(2 * m, 0);
  std::vector<Pair> acc;
  EnumerateRec(partner, acc, out);
  return out;
}

std::vector<ColoredPairPartition> EnumerateColored(int m, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  long total = 1;
  for (int i = 0; i < m; ++i) total *= k;
  if (total > 100000) throw CapacityError("too many colorings");
  std::vector<ColoredPairPartition> out;
  for (const PairPartition& v : EnumeratePairPartitions(m)) {
    std::vector<int> colors(m, 0);
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = m - 1; i >= 0; --i) {
        colors[i] = static_cast<int>(c % k);
        c /= k;
      }
      out.emplace_back(v, colors, k);
    }
  }
  return out;
}

std::vector<std::pair<Pair, Pair>> Crossings(const PairPartition& v) {
  std::vector<std::pair<Pair, Pair>> out;
  for (const Pair& p : v.pairs()) {
    for (const Pair& q : v.pairs()) {
      if (p.first < q.first && q.first < p.second && p.second < q.second) {
        out.emplace_back(p, q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PairPartition NoncrossingHat(const PairPartition& v) {
  std::vector<int> stack;
  std::vector<Pair> pairs;
  for (int k = 1; k <= v.size(); ++k) {
    if (v.IsLeft(k)) {
      stack.push_back(k);
    } else {
      pairs.emplace_back(stack.back(), k);
      stack.pop_back();
    }
  }
  return PairPartition(std::move(pairs));
}

namespace {

CycleDecomposition FromSuccessor(const PairPartition& v,
                                 const std::vector<int>& next) {
  CycleDecomposition out;
  std::vector<bool> seen(v.m(), false);
  for (int start = 0; start < v.m(); ++start) {
    if (seen[start]) continue;
    std::vector<Pair> cycle;
    for (int i = start; !seen[i]; i = next[i]) {
      seen[i] = true;
      cycle.push_back(v.pairs()[i]);
    }
    ++out.rho[static_cast<int>(cycle.size())];
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace

CycleDecomposition UncoloredCycles(const PairPartition& v) {
  const PairPartition hat = NoncrossingHat(v);
  // Pair i is followed by the pair whose right point is hat-paired with l_i.
  std::vector<int> next(v.m());
  for (int i = 0; i < v.m(); ++i) {
    next[i] = v.PairIndexOf(hat.Partner(v.pairs()[i].first));
  }
  return FromSuccessor(v, next);
}

CycleDecomposition UncoloredCyclesViaPermutation(const PairPartition& v) {
  const PairPartition hat = NoncrossingHat(v);
  // Pairs are indexed by their left points a_1 < ... < a_m; z_i is the right
  // point of pair i. hat pairs a_i with z_{sigma^{-1}(i)}.
  std::vector<int> sigma(v.m());
  for (int i = 0; i < v.m(); ++i) {
    const int j = v.PairIndexOf(hat.Partner(v.pairs()[i].first));
    sigma[j] = i;
  }
  return FromSuccessor(v, sigma);
}

PairPartition ColorClass(const ColoredPairPartition& p, int color) {
  std::vector<int> points;
  for (int i = 0; i < p.m(); ++i) {
    if (p.colors[i] == color) {
      points.push_back(p.base.pairs()[i].first);
      points.push_back(p.base.pairs()[i].second);
    }
  }
  std::sort(points.begin(), points.end());
  auto rank = [&](int x) {
    return static_cast<int>(
               std::lower_bound(points.begin(), points.end(), x) -
               points.begin()) +
           1;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < p.m(); ++i) {
    if (p.colors[i] == color) {
      pairs.emplace_back(rank(p.base.pairs()[i].first),
                         rank(p.base.pairs()[i].second));
    }
  }
  return PairPartition(std::move(pairs));
}

}  // namespace gbm
