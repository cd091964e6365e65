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

#ifndef GBM_MOMENTS_H_
#define GBM_MOMENTS_H_

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "gbm/cycle_graph.h"
#include "gbm/pair_partition.h"
#include "gbm/rational.h"
#include "gbm/word.h"

namespace gbm {

// A t-function on colored pair partitions.
using TFunction = std::function<Rational(const ColoredPairPartition&)>;
// A t-function on uncolored pair partitions.
using UncoloredT = std::function<Rational(const PairPartition&)>;

// Finite Thoma parameter. T is Rational (exact) or double.
template <typename T>
struct ThomaParameter {
  std::vector<T> alpha;
  std::vector<T> beta;

  T Gamma() const {
    T g = 1;
    for (const T& a : alpha) g -= a;
    for (const T& b : beta) g -= b;
    return g;
  }

  // Throws std::invalid_argument on a malformed parameter.
  void Validate() const {
    for (const auto* seq : {&alpha, &beta}) {
      for (size_t i = 0; i < seq->size(); ++i) {
        if (!((*seq)[i] > 0)) throw std::invalid_argument("entries must be > 0");
        if (i > 0 && (*seq)[i] > (*seq)[i - 1]) {
          throw std::invalid_argument("sequences must be weakly decreasing");
        }
      }
    }
    if (Gamma() < 0) throw std::invalid_argument("sum of alpha and beta > 1");
  }

  // sum alpha^m + (-1)^(m+1) sum beta^m.
  T PowerSum(int m) const {
    T s = 0;
    for (const T& a : alpha) s += PowT(a, m);
    T sb = 0;
    for (const T& b : beta) sb += PowT(b, m);
    return (m % 2 == 0) ? T(s - sb) : T(s + sb);
  }

 private:
  static T PowT(const T& x, int m) {
    T r = 1;
    for (int i = 0; i < m; ++i) r *= x;
    return r;
  }
};

// alpha_i = 1/N for N > 0, beta_i = 1/|N| for N < 0.
ThomaParameter<Rational> ThomaN(int n);

// Product over m >= 2 of PowerSum(m)^count; keys below 2 are ignored.
template <typename T>
T ThomaCharacter(const ThomaParameter<T>& tp,
                 const std::map<int, int>& cycle_type) {
  T result = 1;
  for (const auto& [len, count] : cycle_type) {
    if (len < 2) continue;
    const T base = tp.PowerSum(len);
    for (int i = 0; i < count; ++i) result *= base;
  }
  return result;
}

// Cycle type of a permutation given by 0-based images.
std::map<int, int> CycleType(const std::vector<int>& perm);

// phi(pi' pi^{-1}).
template <typename T>
T SphericalFunction(const ThomaParameter<T>& tp, const std::vector<int>& pi,
                    const std::vector<int>& pi_prime) {
  if (pi.size() != pi_prime.size()) {
    throw std::invalid_argument("permutations must share a support");
  }
  std::vector<int> inv(pi.size());
  for (size_t i = 0; i < pi.size(); ++i) inv[pi[i]] = static_cast<int>(i);
  std::vector<int> comp(pi.size());
  for (size_t i = 0; i < pi.size(); ++i) comp[i] = pi_prime[inv[i]];
  return ThomaCharacter(tp, CycleType(comp));
}

template <typename T>
T TUncolored(const ThomaParameter<T>& tp, const PairPartition& v) {
  return ThomaCharacter(tp, UncoloredCycles(v).rho);
}

// One-color inputs are read as constant color 1.
ColoredPairPartition AsTwoColored(const ColoredPairPartition& p);

template <typename T>
T TColored(const ThomaParameter<T>& tp, const ColoredPairPartition& p) {
  return ThomaCharacter(tp, BuildGraph(AsTwoColored(p)).gamma);
}

// (1/N)^(m(G) - gamma(G)).
Rational TN(int n, const ColoredPairPartition& p);

// (1/N)^(m - #cycles) on an uncolored partition.
Rational TNUncolored(int n, const PairPartition& v);

// Product of component t-functions on the color classes.
Rational TTensor(const UncoloredT& t_minus, const UncoloredT& t_plus,
                 const ColoredPairPartition& p);

// 1 if noncrossing, else 0.
Rational FreeT(const PairPartition& v);

// Sum of t over the partitions compatible with the word.
Rational FockMoment(const Word& a, const TFunction& t);

}  // namespace gbm

#endif  // GBM_MOMENTS_H_
