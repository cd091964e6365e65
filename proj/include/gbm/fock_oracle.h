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

#ifndef GBM_FOCK_ORACLE_H_
#define GBM_FOCK_ORACLE_H_

#include <cstdint>
#include <map>
#include <vector>

#include "gbm/pair_partition.h"
#include "gbm/rational.h"
#include "gbm/word.h"

// Brute-force Fock space over the Vershik-Kerov spaces with alpha_i = 1/N,
// i in [N]. Color 0 acts on the x tuple, color 1 on the y tuple.

namespace gbm {

struct FockKey {
  // Tuples have length max(w[0].size(), w[1].size()); entries in [0, N).
  std::vector<int8_t> x;
  std::vector<int8_t> y;
  // Tensor words per color, as basis indices.
  std::vector<int8_t> w[2];

  int Level(int b) const { return static_cast<int>(w[b].size()); }
  int n() const { return static_cast<int>(x.size()); }

  friend bool operator<(const FockKey& a, const FockKey& b) {
    if (a.w[0].size() != b.w[0].size()) return a.w[0].size() < b.w[0].size();
    if (a.w[1].size() != b.w[1].size()) return a.w[1].size() < b.w[1].size();
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    if (a.w[0] != b.w[0]) return a.w[0] < b.w[0];
    return a.w[1] < b.w[1];
  }
  friend bool operator==(const FockKey& a, const FockKey& b) {
    return a.x == b.x && a.y == b.y && a.w[0] == b.w[0] && a.w[1] == b.w[1];
  }
};

using FockVector = std::map<FockKey, Rational>;

inline constexpr int kDenseMaxLevel = 4;
inline constexpr int kDenseMaxN = 3;
inline constexpr int kLambdaMaxLevel = 5;

class DenseFock {
 public:
  // Throws UnsupportedError for n < 1 and CapacityError for n > kDenseMaxN.
  explicit DenseFock(int n);

  int N() const { return n_; }
  FockVector Vacuum() const;

  FockVector Create(int b, int i, const FockVector& v) const;
  FockVector Annihilate(int b, int i, const FockVector& v) const;
  // Average over the joint action of S_{n_0} x S_{n_1}.
  FockVector Symmetrize(const FockVector& v) const;
  // Weighted by N^{-n} / (n_0! n_1!).
  Rational Inner(const FockVector& u, const FockVector& v) const;

  // Applies letters right to left to the vacuum.
  FockVector Apply(const Word& a, const FockVector& v) const;

 private:
  int n_;
};

// Largest per-color level reached while applying the word to the vacuum.
int MaxLevel(const Word& a);

// <Omega, A Omega> by explicit operator application.
Rational VacuumExpectationDense(const Word& a, int n);

// Sum over the dominant creation choices of elementary-vector constants for
// the canonical word of p.
Rational VacuumExpectationLambda(const ColoredPairPartition& p, int n);

}  // namespace gbm

#endif  // GBM_FOCK_ORACLE_H_
