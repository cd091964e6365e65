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

#include "gbm/word.h"

#include <algorithm>
#include <stdexcept>

namespace gbm {

std::map<std::pair<int, int>, int> WordProfile(const Word& a) {
  std::map<std::pair<int, int>, int> out;
  for (const Letter& x : a) out[{x.b, x.i}] += x.create ? 1 : -1;
  return out;
}

int ProfileTotal(const Word& a, int b) {
  int total = 0;
  for (const Letter& x : a) {
    if (x.b == b) total += x.create ? 1 : -1;
  }
  return total;
}

Word Adjoint(const Word& a) {
  Word out(a.rbegin(), a.rend());
  for (Letter& x : out) x.create = !x.create;
  return out;
}

Word Concat(std::initializer_list<const Word*> parts) {
  Word out;
  for (const Word* w : parts) out.insert(out.end(), w->begin(), w->end());
  return out;
}

Word CanonicalWord(const ColoredPairPartition& p) {
  Word w(p.base.size());
  for (int k = 1; k <= p.base.size(); ++k) {
    const int idx = p.base.PairIndexOf(k);
    w[k - 1] = Letter{p.colors[idx], idx + 1, !p.base.IsLeft(k)};
  }
  return w;
}

namespace {

void CompatRec(const Word& a, size_t pos, std::vector<int>& open,
               std::vector<Pair>& pairs, std::vector<int>& colors,
               const std::function<void(const ColoredPairPartition&)>& f) {
  if (pos == a.size()) {
    if (open.empty()) f(MakeColored(pairs, colors, 2));
    return;
  }
  // Prune when the remaining letters cannot close every open annihilator.
  if (open.size() > a.size() - pos) return;
  const Letter& x = a[pos];
  if (!x.create) {
    open.push_back(static_cast<int>(pos));
    CompatRec(a, pos + 1, open, pairs, colors, f);
    open.pop_back();
    return;
  }
  for (size_t j = 0; j < open.size(); ++j) {
    const Letter& y = a[open[j]];
    if (y.b != x.b || y.i != x.i) continue;
    const int l = open[j];
    open.erase(open.begin() + j);
    pairs.emplace_back(l + 1, static_cast<int>(pos) + 1);
    colors.push_back(x.b);
    CompatRec(a, pos + 1, open, pairs, colors, f);
    colors.pop_back();
    pairs.pop_back();
    open.insert(open.begin() + j, l);
  }
}

}  // namespace

void ForEachCompatible(
    const Word& a, const std::function<void(const ColoredPairPartition&)>& f) {
  for (const Letter& x : a) {
    if (x.b != 0 && x.b != 1) throw std::invalid_argument("color must be 0 or 1");
  }
  if (a.size() % 2 != 0) return;
  std::vector<int> open;
  std::vector<Pair> pairs;
  std::vector<int> colors;
  CompatRec(a, 0, open, pairs, colors, f);
}

std::vector<ColoredPairPartition> CompatiblePartitions(const Word& a) {
  std::vector<ColoredPairPartition> out;
  ForEachCompatible(a, [&](const ColoredPairPartition& p) { out.push_back(p); });
  return out;
}

std::string ToString(const Word& a) {
  std::string s;
  for (const Letter& x : a) {
    if (!s.empty()) s += ' ';
    s += x.create ? "a*" : "a";
    s += "(" + std::to_string(x.b) + "," + std::to_string(x.i) + ")";
  }
  return s;
}

}  // namespace gbm
