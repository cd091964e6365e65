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

namespace gbm {

ThomaParameter<Rational> ThomaN(int n) {
  if (n == 0) throw std::invalid_argument("N must be nonzero");
  ThomaParameter<Rational> tp;
  const int k = n > 0 ? n : -n;
  std::vector<Rational> seq(k, Rational(1, k));
  if (n > 0) {
    tp.alpha = seq;
  } else {
    tp.beta = seq;
  }
  return tp;
}

std::map<int, int> CycleType(const std::vector<int>& perm) {
  std::map<int, int> out;
  std::vector<bool> seen(perm.size(), false);
  for (size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (size_t i = s; !seen[i]; i = perm[i]) {
      seen[i] = true;
      ++len;
    }
    ++out[len];
  }
  return out;
}

ColoredPairPartition AsTwoColored(const ColoredPairPartition& p) {
  if (p.num_colors == 2) return p;
  if (p.num_colors == 1) {
    return ColoredPairPartition(p.base, std::vector<int>(p.m(), 1), 2);
  }
  throw UnsupportedError("cycle graphs are defined for at most two colors");
}

Rational TN(int n, const ColoredPairPartition& p) {
  if (n == 0) throw std::invalid_argument("N must be nonzero");
  const CycleGraphAnalysis g = BuildGraph(AsTwoColored(p));
  return Pow(Rational(1, 1) / n, g.TotalIncreasingPaths() - g.NumCycles());
}

Rational TNUncolored(int n, const PairPartition& v) {
  if (n == 0) throw std::invalid_argument("N must be nonzero");
  const CycleDecomposition d = UncoloredCycles(v);
  return Pow(Rational(1, 1) / n, v.m() - static_cast<int>(d.cycles.size()));
}

Rational TTensor(const UncoloredT& t_minus, const UncoloredT& t_plus,
                 const ColoredPairPartition& p) {
  const ColoredPairPartition q = AsTwoColored(p);
  return t_minus(ColorClass(q, 0)) * t_plus(ColorClass(q, 1));
}

Rational FreeT(const PairPartition& v) {
  return Crossings(v).empty() ? Rational(1) : Rational(0);
}

Rational FockMoment(const Word& a, const TFunction& t) {
  Rational sum = 0;
  ForEachCompatible(a, [&](const ColoredPairPartition& p) { sum += t(p); });
  return sum;
}

}  // namespace gbm
